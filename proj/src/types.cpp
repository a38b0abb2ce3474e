#include "crowdsense/types.hpp"

namespace crowdsense {

namespace {

int position_index(Position p) {
  switch (p) {
    case Position::Pocket: return 0;
    case Position::Hand: return 1;
    case Position::Backpack: return 2;
  }
  return 0;
}

Position position_from_index(int i) {
  switch (i) {
    case 0: return Position::Pocket;
    case 1: return Position::Hand;
    default: return Position::Backpack;
  }
}

}  // namespace

int class_index(const ActivityLabel& label) {
  if (!label.valid()) raise(ErrorKind::InvalidArgument, "invalid activity label combination");
  const int pos = position_index(label.position);
  switch (label.state) {
    case State::Bus:
      return (label.posture == Posture::Standing ? 0 : 3) + pos;
    case State::Walking:
      return 6 + pos;
    case State::Stationary:
      return 9 + (label.posture == Posture::Standing ? 0 : 3) + pos;
  }
  return -1;
}

ActivityLabel class_label(int index) {
  if (index < 0 || index >= kNumClasses)
    raise(ErrorKind::ClassOutOfRange, "class index " + std::to_string(index));
  ActivityLabel label;
  label.position = position_from_index(index % 3);
  const int group = index / 3;
  switch (group) {
    case 0: label.state = State::Bus; label.posture = Posture::Standing; break;
    case 1: label.state = State::Bus; label.posture = Posture::Sitting; break;
    case 2: label.state = State::Walking; label.posture = Posture::NotApplicable; break;
    case 3: label.state = State::Stationary; label.posture = Posture::Standing; break;
    default: label.state = State::Stationary; label.posture = Posture::Sitting; break;
  }
  return label;
}

std::string_view state_token(State s) {
  switch (s) {
    case State::Bus: return "bus";
    case State::Walking: return "walking";
    case State::Stationary: return "stationary";
  }
  return "";
}

std::string_view posture_token(Posture p) {
  switch (p) {
    case Posture::Standing: return "standing";
    case Posture::Sitting: return "sitting";
    case Posture::NotApplicable: return "";
  }
  return "";
}

std::string_view position_token(Position p) {
  switch (p) {
    case Position::Pocket: return "pocket";
    case Position::Hand: return "hand";
    case Position::Backpack: return "backpack";
  }
  return "";
}

std::optional<State> parse_state(std::string_view token) {
  if (token == "bus") return State::Bus;
  if (token == "walking") return State::Walking;
  if (token == "stationary") return State::Stationary;
  return std::nullopt;
}

std::optional<Posture> parse_posture(std::string_view token) {
  if (token == "standing") return Posture::Standing;
  if (token == "sitting") return Posture::Sitting;
  return std::nullopt;
}

std::optional<Position> parse_position(std::string_view token) {
  if (token == "pocket") return Position::Pocket;
  if (token == "hand") return Position::Hand;
  if (token == "backpack") return Position::Backpack;
  return std::nullopt;
}

std::string class_token(const ActivityLabel& label) {
  std::string token(state_token(label.state));
  if (label.posture != Posture::NotApplicable) {
    token += '.';
    token += posture_token(label.posture);
  }
  token += '.';
  token += position_token(label.position);
  return token;
}

std::string class_token(int index) { return class_token(class_label(index)); }

std::optional<ActivityLabel> parse_class_token(std::string_view token) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= token.size()) {
    const std::size_t dot = token.find('.', start);
    if (dot == std::string_view::npos) {
      parts.push_back(token.substr(start));
      break;
    }
    parts.push_back(token.substr(start, dot - start));
    start = dot + 1;
  }
  ActivityLabel label;
  if (parts.size() == 2) {
    const auto state = parse_state(parts[0]);
    const auto position = parse_position(parts[1]);
    if (!state || *state != State::Walking || !position) return std::nullopt;
    label.state = State::Walking;
    label.posture = Posture::NotApplicable;
    label.position = *position;
    return label;
  }
  if (parts.size() == 3) {
    const auto state = parse_state(parts[0]);
    const auto posture = parse_posture(parts[1]);
    const auto position = parse_position(parts[2]);
    if (!state || !posture || !position || *state == State::Walking) return std::nullopt;
    label.state = *state;
    label.posture = *posture;
    label.position = *position;
    return label;
  }
  return std::nullopt;
}

const std::vector<std::string>& class_tokens() {
  static const std::vector<std::string> tokens = [] {
    std::vector<std::string> out;
    out.reserve(kNumClasses);
    for (int i = 0; i < kNumClasses; ++i) out.push_back(class_token(i));
    return out;
  }();
  return tokens;
}

std::string class_symbol(int index) {
  const ActivityLabel label = class_label(index);
  std::string symbol;
  switch (label.state) {
    case State::Bus: symbol += 'B'; break;
    case State::Walking: symbol += 'W'; break;
    case State::Stationary: symbol += 'S'; break;
  }
  if (label.posture == Posture::Standing) symbol += "↑";
  else if (label.posture == Posture::Sitting) symbol += "↓";
  switch (label.position) {
    case Position::Pocket: symbol += 'p'; break;
    case Position::Hand: symbol += 'h'; break;
    case Position::Backpack: symbol += 'b'; break;
  }
  return symbol;
}

}  // namespace crowdsense
