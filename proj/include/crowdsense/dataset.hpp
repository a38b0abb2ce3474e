#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crowdsense/types.hpp"

namespace crowdsense {

/// Keeps sessions with at least min_samples readings spanning at least
/// min_span_ms. Both bounds are inclusive; order is preserved.
std::vector<SensorSession> clean_sessions(std::span<const SensorSession> sessions,
                                          int min_samples = 200,
                                          std::int64_t min_span_ms = 10000);

/// Per class, exactly per_class_test sessions drawn uniformly into the test
/// side, remainder into train. Classes are processed in the fixed class-index
/// order with one sub-stream each, so the split depends only on the seed.
DatasetSplit split_train_test(std::span<const SensorSession> sessions, int per_class_test,
                              std::uint64_t seed);

}  // namespace crowdsense
