#include "crowdsense/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace crowdsense {

double percentile_sorted(std::span<const double> sorted_values, double pct) {
  if (sorted_values.empty()) raise(ErrorKind::EmptyChannel, "percentile of empty series");
  const std::size_t n = sorted_values.size();
  if (n == 1) return sorted_values[0];
  const double rank = pct / 100.0 * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(rank);
  if (lo + 1 >= n) return sorted_values[n - 1];
  const double frac = rank - static_cast<double>(lo);
  return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

ChannelStats summarize(std::span<const double> values) {
  if (values.empty()) raise(ErrorKind::EmptyChannel, "summarize of empty series");
  const double n = static_cast<double>(values.size());

  ChannelStats stats;
  double sum = 0.0, sum_abs = 0.0;
  for (double v : values) {
    sum += v;
    sum_abs += std::abs(v);
  }
  stats.mean = sum / n;
  stats.mean_abs = sum_abs / n;

  double sq = 0.0, abs_diff = 0.0;
  for (double v : values) {
    const double d = v - stats.mean;
    sq += d * d;
    abs_diff += std::abs(d);
  }
  stats.variance = sq / n;
  stats.std_dev = std::sqrt(stats.variance);
  stats.avg_abs_diff = abs_diff / n;

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  stats.median = percentile_sorted(sorted, 50.0);
  stats.p75 = percentile_sorted(sorted, 75.0);
  stats.iqr = stats.p75 - percentile_sorted(sorted, 25.0);
  return stats;
}

}  // namespace crowdsense
