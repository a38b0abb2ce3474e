#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crowdsense/error.hpp"

namespace crowdsense {

struct GpsFix {
  double lat = 0.0;      // WGS84 degrees, [-90, 90]
  double lon = 0.0;      // WGS84 degrees, [-180, 180]
  double speed = 0.0;    // m/s, >= 0
  double heading = 0.0;  // degrees, [0, 360)

  bool operator==(const GpsFix&) const = default;
};

struct SensorSample {
  std::int64_t t_ms = 0;  // milliseconds since session start, non-decreasing
  double ax = 0.0;        // m/s^2
  double ay = 0.0;
  double az = 0.0;
  std::optional<GpsFix> gps;  // absent indoors

  bool operator==(const SensorSample&) const = default;
};

enum class State { Bus, Walking, Stationary };
enum class Posture { Standing, Sitting, NotApplicable };
enum class Position { Pocket, Hand, Backpack };

/// One of the 15 valid activity conditions. Posture is NotApplicable exactly
/// for Walking.
struct ActivityLabel {
  State state = State::Bus;
  Posture posture = Posture::Standing;
  Position position = Position::Pocket;

  bool operator==(const ActivityLabel&) const = default;
  bool valid() const {
    return (posture == Posture::NotApplicable) == (state == State::Walking);
  }
};

inline constexpr int kNumClasses = 15;

/// Class index in the fixed display order: bus standing p/h/b, bus sitting
/// p/h/b, walking p/h/b, stationary standing p/h/b, stationary sitting p/h/b.
int class_index(const ActivityLabel& label);
ActivityLabel class_label(int index);

/// Canonical token, e.g. "bus.standing.pocket" or "walking.hand".
std::string class_token(const ActivityLabel& label);
std::string class_token(int index);
std::optional<ActivityLabel> parse_class_token(std::string_view token);

/// All 15 canonical tokens in class-index order.
const std::vector<std::string>& class_tokens();

/// Compact matrix-axis symbol, e.g. "B^p" rendered as "B↑p": state letter,
/// posture arrow (omitted for walking), position letter.
std::string class_symbol(int index);

std::optional<State> parse_state(std::string_view token);
std::optional<Posture> parse_posture(std::string_view token);
std::optional<Position> parse_position(std::string_view token);
std::string_view state_token(State s);
std::string_view posture_token(Posture p);  // empty for NotApplicable
std::string_view position_token(Position p);

struct SensorSession {
  std::string session_id;
  std::optional<std::string> device_id;
  std::optional<ActivityLabel> label;
  std::vector<SensorSample> samples;

  bool operator==(const SensorSession&) const = default;

  std::int64_t span_ms() const {
    if (samples.empty()) return 0;
    return samples.back().t_ms - samples.front().t_ms;
  }
};

struct DatasetSplit {
  std::vector<SensorSession> train;
  std::vector<SensorSession> test;
  std::uint64_t seed = 0;
};

}  // namespace crowdsense
