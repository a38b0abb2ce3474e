#pragma once

#include <array>
#include <span>

#include "crowdsense/error.hpp"

namespace crowdsense {

/// The eight summary statistics of one channel, in feature-vector order.
struct ChannelStats {
  double mean = 0.0;
  double mean_abs = 0.0;
  double median = 0.0;
  double variance = 0.0;  // population, divisor N
  double std_dev = 0.0;
  double avg_abs_diff = 0.0;  // mean absolute deviation from the mean
  double iqr = 0.0;
  double p75 = 0.0;

  std::array<double, 8> as_array() const {
    return {mean, mean_abs, median, variance, std_dev, avg_abs_diff, iqr, p75};
  }
};

inline constexpr std::array<const char*, 8> kStatNames = {
    "mean", "mean_abs", "median", "variance", "std", "avg_abs_diff", "iqr", "p75"};

ChannelStats summarize(std::span<const double> values);

/// Percentile by linear interpolation between closest ranks of an ascending
/// sorted series: rank = pct/100 * (N-1).
double percentile_sorted(std::span<const double> sorted_values, double pct);

}  // namespace crowdsense
