#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringloss/matrix.hpp"
#include "ringloss/tree.hpp"

namespace ringloss {

// Random forest regressor: an ensemble of CART trees grown on bootstrap
// resamples, each split restricted to a random feature subset.  The whole
// procedure is a pure function of (X, y, config, seed); refitting with the
// same inputs reproduces the ensemble bit for bit.
struct ForestConfig {
  int n_trees = 100;
  bool bootstrap = true;
  // Features considered per split; unset means max(1, floor(p / 3)).
  std::optional<int> features_per_split;
  int min_samples_leaf = 1;
  std::optional<int> max_depth;  // unset = unlimited

  bool operator==(const ForestConfig&) const = default;
};

struct ForestModel {
  std::vector<TreeNode> trees;
  ForestConfig config;
  std::uint64_t master_seed = 0;
};

// Resolves the per-split feature count for a dataset of width p.
int resolve_features_per_split(const ForestConfig& config, std::size_t p);

// Grows the ensemble.  Tree t draws its own generator seeded with
// derive_seed(seed, t); with bootstrap enabled it first draws n row indices
// with replacement, then consumes further draws for per-node feature
// sampling while the tree grows depth-first, left child first.
//
// With n_trees == 1, bootstrap == false and features_per_split == p the
// forest degenerates to a single tree identical to tree_fit's.
ForestModel forest_fit(const FeatureMatrix& X, const TargetVector& y,
                       const ForestConfig& config, std::uint64_t seed);

// Mean of the member trees' predictions, accumulated in tree order.
double predict_forest_row(const ForestModel& model, std::span<const double> x);
TargetVector predict_forest(const ForestModel& model, const FeatureMatrix& X);

}  // namespace ringloss
