#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crowdsense/classifier.hpp"
#include "crowdsense/rng.hpp"

namespace crowdsense {

/// Flat node arena. Node 0 is the root; children are arena indices.
struct TreeNode {
  bool leaf = true;
  std::int32_t feature = -1;   // internal nodes
  double threshold = 0.0;      // go left when x[feature] <= threshold
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::vector<std::int64_t> class_counts;  // leaves
  std::int32_t predicted = -1;             // leaves, argmax with lowest-index tie-break

  bool operator==(const TreeNode&) const = default;
};

class Tree {
 public:
  Tree() = default;
  explicit Tree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }

  int predict(std::span<const double> x) const;

  /// Longest root-to-leaf path counted in internal nodes.
  int depth() const;

  bool operator==(const Tree&) const = default;

 private:
  std::vector<TreeNode> nodes_;
};

struct TreeConfig {
  int max_depth = 20;
  int min_split = 2;
  int feature_subsample = 0;  // features considered per node; 0 means all
};

/// 1 - sum(p_i^2) over the class proportions.
double gini_impurity(std::span<const std::int64_t> class_counts);

/// Greedy top-down induction. Candidate thresholds are midpoints between
/// consecutive distinct sorted values; the split minimizing the size-weighted
/// child Gini sum wins, compared in exact integer arithmetic so ties resolve
/// the same way everywhere (lowest feature index, then lowest threshold).
/// Recursion stops at purity, max_depth, fewer than min_split rows, or when
/// no split strictly reduces impurity.
Tree train_tree(const LabeledMatrix& data, const TreeConfig& config, Rng& rng);

/// Subset variant used by the forest for bootstrap samples.
Tree train_tree_on(const LabeledMatrix& data, std::span<const std::size_t> row_indices,
                   const TreeConfig& config, Rng& rng);

}  // namespace crowdsense
