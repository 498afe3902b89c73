#include "ringloss/forest.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "ringloss/errors.hpp"
#include "ringloss/rng.hpp"

namespace ringloss {

int resolve_features_per_split(const ForestConfig& config, std::size_t p) {
  if (config.features_per_split) {
    const int m = *config.features_per_split;
    if (m < 1 || static_cast<std::size_t>(m) > p)
      throw std::invalid_argument("features_per_split out of range");
    return m;
  }
  return std::max<int>(1, static_cast<int>(p / 3));
}

namespace {

// Draws m distinct feature indices from 0..p-1 via a partial Fisher-Yates
// pass over a scratch identity permutation, then sorts them so split
// evaluation scans features in ascending order regardless of draw order.
std::vector<int> sample_features(std::vector<int>& scratch, int m,
                                 SplitMix64& rng) {
  const std::size_t p = scratch.size();
  for (std::size_t i = 0; i < p; ++i) scratch[i] = static_cast<int>(i);
  for (int i = 0; i < m; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(rng.next_below(
                static_cast<std::uint64_t>(p - static_cast<std::size_t>(i))));
    std::swap(scratch[static_cast<std::size_t>(i)], scratch[j]);
  }
  std::vector<int> chosen(scratch.begin(), scratch.begin() + m);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

ForestModel forest_fit(const FeatureMatrix& X, const TargetVector& y,
                       const ForestConfig& config, std::uint64_t seed) {
  const std::size_t n = X.rows();
  const std::size_t p = X.cols();
  if (n == 0) throw EmptyError("cannot fit forest on empty data");
  if (y.size() != n)
    throw LengthMismatchError("target length does not match row count");
  if (X.has_missing())
    throw std::invalid_argument("forest_fit requires imputed features");
  for (double v : y)
    if (is_missing(v))
      throw std::invalid_argument("forest_fit requires complete targets");
  if (config.n_trees < 1) throw std::invalid_argument("n_trees must be >= 1");
  if (config.min_samples_leaf < 1)
    throw std::invalid_argument("min_samples_leaf must be >= 1");
  if (config.max_depth && *config.max_depth < 0)
    throw std::invalid_argument("max_depth must be >= 0");
  const int m = resolve_features_per_split(config, p);

  TreeFitConfig tree_config;
  tree_config.min_samples_leaf = config.min_samples_leaf;
  tree_config.max_depth = config.max_depth;

  ForestModel model;
  model.config = config;
  model.master_seed = seed;
  model.trees.reserve(static_cast<std::size_t>(config.n_trees));

  std::vector<std::size_t> rows(n);
  std::vector<int> scratch(p);
  for (int t = 0; t < config.n_trees; ++t) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    if (config.bootstrap) {
      for (std::size_t i = 0; i < n; ++i)
        rows[i] = static_cast<std::size_t>(
            rng.next_below(static_cast<std::uint64_t>(n)));
    } else {
      std::iota(rows.begin(), rows.end(), std::size_t{0});
    }
    auto sampler = [&scratch, m, &rng] {
      return sample_features(scratch, m, rng);
    };
    model.trees.push_back(
        detail::grow_tree(X, y, rows, tree_config, sampler));
  }
  return model;
}

double predict_forest_row(const ForestModel& model,
                          std::span<const double> x) {
  double sum = 0.0;
  for (const TreeNode& tree : model.trees) sum += predict_tree_row(tree, x);
  return sum / static_cast<double>(model.trees.size());
}

TargetVector predict_forest(const ForestModel& model, const FeatureMatrix& X) {
  if (model.trees.empty()) throw EmptyError("forest has no trees");
  TargetVector out(X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i)
    out[i] = predict_forest_row(model, X.row(i));
  return out;
}

}  // namespace ringloss
