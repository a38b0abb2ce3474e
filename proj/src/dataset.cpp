#include "crowdsense/dataset.hpp"

#include <algorithm>
#include <array>

#include "crowdsense/rng.hpp"

namespace crowdsense {

std::vector<SensorSession> clean_sessions(std::span<const SensorSession> sessions,
                                          int min_samples, std::int64_t min_span_ms) {
  std::vector<SensorSession> kept;
  for (const SensorSession& s : sessions) {
    if (static_cast<int>(s.samples.size()) >= min_samples && s.span_ms() >= min_span_ms)
      kept.push_back(s);
  }
  return kept;
}

DatasetSplit split_train_test(std::span<const SensorSession> sessions, int per_class_test,
                              std::uint64_t seed) {
  if (per_class_test < 0) raise(ErrorKind::InvalidArgument, "per_class_test must be >= 0");

  std::array<std::vector<std::size_t>, kNumClasses> by_class;
  for (std::size_t i = 0; i < sessions.size(); ++i) {
    if (!sessions[i].label)
      raise(ErrorKind::InvalidArgument, "unlabeled session " + sessions[i].session_id);
    by_class[static_cast<std::size_t>(class_index(*sessions[i].label))].push_back(i);
  }

  std::vector<bool> in_test(sessions.size(), false);
  for (int c = 0; c < kNumClasses; ++c) {
    auto& indices = by_class[static_cast<std::size_t>(c)];
    if (indices.empty()) continue;
    if (static_cast<int>(indices.size()) < per_class_test)
      raise(ErrorKind::InsufficientClassSize,
            "class " + class_token(c) + " has " + std::to_string(indices.size()) +
                " sessions, need " + std::to_string(per_class_test));
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(c));
    shuffle_in_place(indices, rng);
    for (int k = 0; k < per_class_test; ++k) in_test[indices[static_cast<std::size_t>(k)]] = true;
  }

  DatasetSplit split;
  split.seed = seed;
  for (std::size_t i = 0; i < sessions.size(); ++i) {
    (in_test[i] ? split.test : split.train).push_back(sessions[i]);
  }
  return split;
}

}  // namespace crowdsense
