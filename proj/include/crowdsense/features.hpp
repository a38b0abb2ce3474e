#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "crowdsense/stats.hpp"
#include "crowdsense/types.hpp"

namespace crowdsense {

inline constexpr int kChannelCount = 6;
inline constexpr int kStatsPerChannel = 8;
inline constexpr int kFeatureCount = kChannelCount * kStatsPerChannel;

inline constexpr std::array<const char*, kChannelCount> kChannelNames = {
    "ax", "ay", "az", "lat", "lon", "speed"};

/// 48 values, channel-major: index = 8 * channel + statistic. Heading is
/// never used. When no sample carries a GPS fix the three GPS channels are
/// zero-filled and gps_missing is set.
struct FeatureVector {
  std::array<double, kFeatureCount> values{};
  bool gps_missing = false;
};

FeatureVector extract_features(const SensorSession& session);

struct FeatureRow {
  std::string session_id;
  std::string label_class;  // canonical token, empty when unlabeled
  FeatureVector features;
};

FeatureRow feature_row(const SensorSession& session);

/// Feature matrix CSV: session_id,label_class,f00..f47,gps_missing.
void write_feature_csv(std::ostream& out, std::span<const FeatureRow> rows);
std::vector<FeatureRow> read_feature_csv(std::istream& in);
void write_feature_csv_file(const std::string& path, std::span<const FeatureRow> rows);
std::vector<FeatureRow> read_feature_csv_file(const std::string& path);

}  // namespace crowdsense
