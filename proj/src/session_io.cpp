#include "crowdsense/session_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace crowdsense {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  raise(ErrorKind::MalformedRecord, "line " + std::to_string(line) + ": " + what);
}

void check_sample_domain(const SensorSample& s, std::size_t line) {
  if (s.t_ms < 0) malformed(line, "t_ms must be non-negative");
  if (!std::isfinite(s.ax) || !std::isfinite(s.ay) || !std::isfinite(s.az))
    malformed(line, "non-finite acceleration");
  if (s.gps) {
    const GpsFix& g = *s.gps;
    if (!std::isfinite(g.lat) || !std::isfinite(g.lon) || !std::isfinite(g.speed) ||
        !std::isfinite(g.heading))
      malformed(line, "non-finite gps field");
    if (g.lat < -90.0 || g.lat > 90.0) malformed(line, "lat out of [-90, 90]");
    if (g.lon < -180.0 || g.lon > 180.0) malformed(line, "lon out of [-180, 180]");
    if (g.speed < 0.0) malformed(line, "negative speed");
    if (g.heading < 0.0 || g.heading >= 360.0) malformed(line, "heading out of [0, 360)");
  }
}

void check_monotonic(const SensorSession& session) {
  for (std::size_t i = 1; i < session.samples.size(); ++i) {
    if (session.samples[i].t_ms < session.samples[i - 1].t_ms)
      raise(ErrorKind::NonMonotonicTimestamps, "session " + session.session_id);
  }
}

ActivityLabel parse_label_tokens(std::string_view state_tok, std::string_view posture_tok,
                                 std::string_view position_tok, std::size_t line) {
  const auto state = parse_state(state_tok);
  if (!state)
    raise(ErrorKind::UnknownLabelToken,
          "line " + std::to_string(line) + ": state '" + std::string(state_tok) + "'");
  const auto position = parse_position(position_tok);
  if (!position)
    raise(ErrorKind::UnknownLabelToken,
          "line " + std::to_string(line) + ": position '" + std::string(position_tok) + "'");
  ActivityLabel label;
  label.state = *state;
  label.position = *position;
  if (posture_tok.empty()) {
    label.posture = Posture::NotApplicable;
  } else {
    const auto posture = parse_posture(posture_tok);
    if (!posture)
      raise(ErrorKind::UnknownLabelToken,
            "line " + std::to_string(line) + ": posture '" + std::string(posture_tok) + "'");
    label.posture = *posture;
  }
  if (!label.valid())
    raise(ErrorKind::UnknownLabelToken, "line " + std::to_string(line) +
                                            ": posture/state combination not allowed");
  return label;
}

double get_number(const json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) malformed(line, std::string("missing number '") + key + "'");
  return it->get<double>();
}

SensorSession parse_jsonl_session(const std::string& text, std::size_t line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(line, std::string("invalid json at byte ") + std::to_string(e.byte));
  }
  if (!obj.is_object()) malformed(line, "expected an object");

  SensorSession session;
  const auto id = obj.find("session_id");
  if (id == obj.end() || !id->is_string()) malformed(line, "missing session_id");
  session.session_id = id->get<std::string>();

  if (const auto dev = obj.find("device_id"); dev != obj.end() && !dev->is_null()) {
    if (!dev->is_string()) malformed(line, "device_id must be a string or null");
    session.device_id = dev->get<std::string>();
  }

  if (const auto lab = obj.find("label"); lab != obj.end() && !lab->is_null()) {
    if (!lab->is_object()) malformed(line, "label must be an object or null");
    const auto state = lab->find("state");
    const auto position = lab->find("position");
    if (state == lab->end() || !state->is_string()) malformed(line, "label.state missing");
    if (position == lab->end() || !position->is_string()) malformed(line, "label.position missing");
    std::string posture_tok;
    if (const auto posture = lab->find("posture"); posture != lab->end() && !posture->is_null()) {
      if (!posture->is_string()) malformed(line, "label.posture must be a string or null");
      posture_tok = posture->get<std::string>();
    }
    session.label = parse_label_tokens(state->get<std::string>(), posture_tok,
                                       position->get<std::string>(), line);
  }

  const auto samples = obj.find("samples");
  if (samples == obj.end() || !samples->is_array()) malformed(line, "missing samples array");
  if (samples->empty()) malformed(line, "session has no samples");
  session.samples.reserve(samples->size());
  for (const json& s : *samples) {
    if (!s.is_object()) malformed(line, "sample must be an object");
    SensorSample sample;
    const auto t = s.find("t_ms");
    if (t == s.end() || !t->is_number_integer()) malformed(line, "sample t_ms must be an integer");
    sample.t_ms = t->get<std::int64_t>();
    sample.ax = get_number(s, "ax", line);
    sample.ay = get_number(s, "ay", line);
    sample.az = get_number(s, "az", line);
    if (const auto gps = s.find("gps"); gps != s.end() && !gps->is_null()) {
      if (!gps->is_object()) malformed(line, "gps must be an object or null");
      GpsFix fix;
      fix.lat = get_number(*gps, "lat", line);
      fix.lon = get_number(*gps, "lon", line);
      fix.speed = get_number(*gps, "speed", line);
      fix.heading = get_number(*gps, "heading", line);
      sample.gps = fix;
    }
    check_sample_domain(sample, line);
    session.samples.push_back(sample);
  }
  check_monotonic(session);
  return session;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

double parse_double_cell(const std::string& cell, std::size_t line) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) malformed(line, "bad number '" + cell + "'");
  return value;
}

std::int64_t parse_int_cell(const std::string& cell, std::size_t line) {
  std::int64_t value = 0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) malformed(line, "bad integer '" + cell + "'");
  return value;
}

constexpr const char* kCsvHeader =
    "session_id,t_ms,ax,ay,az,lat,lon,speed,heading,state,posture,position";

std::vector<SensorSession> parse_csv(std::istream& input) {
  std::vector<SensorSession> sessions;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(input, line)) return sessions;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) malformed(line_no, "unexpected csv header");

  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 12) malformed(line_no, "expected 12 columns");

    SensorSample sample;
    sample.t_ms = parse_int_cell(cells[1], line_no);
    sample.ax = parse_double_cell(cells[2], line_no);
    sample.ay = parse_double_cell(cells[3], line_no);
    sample.az = parse_double_cell(cells[4], line_no);
    const bool gps_cells[4] = {!cells[5].empty(), !cells[6].empty(), !cells[7].empty(),
                               !cells[8].empty()};
    const bool any_gps = gps_cells[0] || gps_cells[1] || gps_cells[2] || gps_cells[3];
    const bool all_gps = gps_cells[0] && gps_cells[1] && gps_cells[2] && gps_cells[3];
    if (any_gps && !all_gps) malformed(line_no, "partial gps cells");
    if (all_gps) {
      GpsFix fix;
      fix.lat = parse_double_cell(cells[5], line_no);
      fix.lon = parse_double_cell(cells[6], line_no);
      fix.speed = parse_double_cell(cells[7], line_no);
      fix.heading = parse_double_cell(cells[8], line_no);
      sample.gps = fix;
    }
    check_sample_domain(sample, line_no);

    std::optional<ActivityLabel> label;
    if (!cells[9].empty() || !cells[10].empty() || !cells[11].empty()) {
      label = parse_label_tokens(cells[9], cells[10], cells[11], line_no);
    }

    // Consecutive rows with the same session_id form one session.
    if (sessions.empty() || sessions.back().session_id != cells[0]) {
      SensorSession session;
      session.session_id = cells[0];
      session.label = label;
      sessions.push_back(std::move(session));
    } else if (sessions.back().label != label) {
      malformed(line_no, "label changed within session " + cells[0]);
    }
    sessions.back().samples.push_back(sample);
  }
  for (const SensorSession& s : sessions) check_monotonic(s);
  return sessions;
}

ordered_json session_to_json(const SensorSession& session) {
  ordered_json obj;
  obj["session_id"] = session.session_id;
  obj["device_id"] = session.device_id ? ordered_json(*session.device_id) : ordered_json(nullptr);
  if (session.label) {
    ordered_json lab;
    lab["state"] = std::string(state_token(session.label->state));
    lab["posture"] = session.label->posture == Posture::NotApplicable
                         ? ordered_json(nullptr)
                         : ordered_json(std::string(posture_token(session.label->posture)));
    lab["position"] = std::string(position_token(session.label->position));
    obj["label"] = std::move(lab);
  } else {
    obj["label"] = nullptr;
  }
  ordered_json samples = ordered_json::array();
  for (const SensorSample& s : session.samples) {
    ordered_json sample;
    sample["t_ms"] = s.t_ms;
    sample["ax"] = s.ax;
    sample["ay"] = s.ay;
    sample["az"] = s.az;
    if (s.gps) {
      ordered_json gps;
      gps["lat"] = s.gps->lat;
      gps["lon"] = s.gps->lon;
      gps["speed"] = s.gps->speed;
      gps["heading"] = s.gps->heading;
      sample["gps"] = std::move(gps);
    } else {
      sample["gps"] = nullptr;
    }
    samples.push_back(std::move(sample));
  }
  obj["samples"] = std::move(samples);
  return obj;
}

void write_csv(std::ostream& out, std::span<const SensorSession> sessions) {
  out << kCsvHeader << '\n';
  for (const SensorSession& session : sessions) {
    std::string state_cell, posture_cell, position_cell;
    if (session.label) {
      state_cell = std::string(state_token(session.label->state));
      posture_cell = std::string(posture_token(session.label->posture));
      position_cell = std::string(position_token(session.label->position));
    }
    for (const SensorSample& s : session.samples) {
      out << session.session_id << ',' << s.t_ms << ',' << format_double(s.ax) << ','
          << format_double(s.ay) << ',' << format_double(s.az) << ',';
      if (s.gps) {
        out << format_double(s.gps->lat) << ',' << format_double(s.gps->lon) << ','
            << format_double(s.gps->speed) << ',' << format_double(s.gps->heading);
      } else {
        out << ",,,";
      }
      out << ',' << state_cell << ',' << posture_cell << ',' << position_cell << '\n';
    }
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::vector<SensorSession> parse_sessions(std::istream& input, SessionFormat format) {
  if (format == SessionFormat::Csv) return parse_csv(input);
  std::vector<SensorSession> sessions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    sessions.push_back(parse_jsonl_session(line, line_no));
  }
  return sessions;
}

std::vector<SensorSession> parse_sessions(const std::string& text, SessionFormat format) {
  std::istringstream stream(text);
  return parse_sessions(stream, format);
}

void write_sessions(std::ostream& out, std::span<const SensorSession> sessions,
                    SessionFormat format) {
  if (format == SessionFormat::Csv) {
    write_csv(out, sessions);
    return;
  }
  for (const SensorSession& session : sessions) out << session_to_json(session).dump() << '\n';
}

std::string sessions_to_string(std::span<const SensorSession> sessions, SessionFormat format) {
  std::ostringstream out;
  write_sessions(out, sessions, format);
  return out.str();
}

std::vector<SensorSession> read_sessions_file(const std::string& path, SessionFormat format) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path);
  return parse_sessions(in, format);
}

void write_sessions_file(const std::string& path, std::span<const SensorSession> sessions,
                         SessionFormat format) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::IoError, "cannot write " + path);
  write_sessions(out, sessions, format);
}

}  // namespace crowdsense
