#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crowdsense/error.hpp"
#include "crowdsense/features.hpp"

namespace crowdsense {

/// Dense row-major training matrix. Width is arbitrary so the learners can be
/// exercised on small hand-built problems as well as the 48-wide feature
/// space.
class LabeledMatrix {
 public:
  LabeledMatrix(std::size_t width, std::vector<std::string> class_names)
      : width_(width), class_names_(std::move(class_names)) {
    if (width_ == 0) raise(ErrorKind::InvalidArgument, "matrix width must be positive");
    if (class_names_.size() < 2) raise(ErrorKind::InvalidArgument, "need at least two classes");
  }

  void add_row(std::span<const double> x, int class_id) {
    if (x.size() != width_) raise(ErrorKind::DimensionMismatch, "row width mismatch");
    if (class_id < 0 || class_id >= n_classes())
      raise(ErrorKind::ClassOutOfRange, "class id " + std::to_string(class_id));
    data_.insert(data_.end(), x.begin(), x.end());
    labels_.push_back(class_id);
  }

  std::size_t size() const { return labels_.size(); }
  std::size_t width() const { return width_; }
  int n_classes() const { return static_cast<int>(class_names_.size()); }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  int label(std::size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& class_names() const { return class_names_; }

 private:
  std::size_t width_;
  std::vector<double> data_;
  std::vector<int> labels_;
  std::vector<std::string> class_names_;
};

struct Prediction {
  int class_id = -1;
  std::vector<double> scores;  // vote fractions or probabilities, sums to 1
};

/// Matrix over the canonical 15-class space from labeled feature rows.
LabeledMatrix matrix_from_rows(std::span<const FeatureRow> rows);

}  // namespace crowdsense
