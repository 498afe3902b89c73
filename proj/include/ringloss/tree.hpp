#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "ringloss/matrix.hpp"

namespace ringloss {

// Binary regression tree node. Leaf iff `left` is null; internal nodes
// route rows with x[feature] <= threshold to the left child.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  std::unique_ptr<TreeNode> left;
  std::unique_ptr<TreeNode> right;
  double value = 0.0;  // leaf: mean of member targets
  int count = 0;       // leaf: number of member rows

  bool is_leaf() const { return left == nullptr; }
};

struct TreeFitConfig {
  int min_samples_leaf = 1;
  std::optional<int> max_depth;  // absent = unlimited; the root has depth 0
};

// Greedy variance-reduction splitting. Each node scans its candidate
// features; candidate thresholds are midpoints between consecutive distinct
// sorted values. The split minimizing the summed child squared error wins,
// ties resolved by lowest feature index then lowest threshold. A node
// becomes a leaf when it is pure, too small to split, at max depth, or no
// split strictly reduces the squared error.
TreeNode tree_fit(const FeatureMatrix& X, const TargetVector& y,
                  const TreeFitConfig& config = {});

double predict_tree_row(const TreeNode& root, std::span<const double> row);
TargetVector predict_tree(const TreeNode& root, const FeatureMatrix& X);

bool tree_equal(const TreeNode& a, const TreeNode& b);
TreeNode clone_tree(const TreeNode& node);

namespace detail {

// Shared grower for single trees and forest members. `sample_features`
// yields one node's candidate feature set in ascending order; rows may
// contain duplicates (bootstrap). Depth-first, left child first, so a
// stateful sampler sees nodes in a fixed order.
TreeNode grow_tree(const FeatureMatrix& X, const TargetVector& y,
                   std::vector<std::size_t> rows, const TreeFitConfig& config,
                   const std::function<std::vector<int>()>& sample_features);

}  // namespace detail

}  // namespace ringloss
