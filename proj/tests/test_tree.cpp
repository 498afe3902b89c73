#include <cmath>
#include <vector>

#include <doctest.h>

#include "ringloss/errors.hpp"
#include "ringloss/metrics.hpp"
#include "ringloss/rng.hpp"
#include "ringloss/tree.hpp"
#include "support/synth.hpp"

using namespace ringloss;

namespace {

FeatureMatrix make(const std::vector<std::vector<double>>& rows) {
  REQUIRE(!rows.empty());
  FeatureMatrix X(rows.size(), synth::feature_names(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) X.at(i, j) = rows[i][j];
  return X;
}

void check_leaf_sizes(const TreeNode& node, int min_samples_leaf) {
  if (node.is_leaf()) {
    CHECK(node.count >= min_samples_leaf);
    return;
  }
  check_leaf_sizes(*node.left, min_samples_leaf);
  check_leaf_sizes(*node.right, min_samples_leaf);
}

int depth_of(const TreeNode& node) {
  if (node.is_leaf()) return 0;
  return 1 + std::max(depth_of(*node.left), depth_of(*node.right));
}

}  // namespace

TEST_CASE("two points split at the midpoint with exact leaves") {
  const TreeNode root = tree_fit(make({{0.0}, {1.0}}), {0.0, 10.0});
  REQUIRE(!root.is_leaf());
  CHECK(root.feature == 0);
  CHECK(root.threshold == 0.5);
  CHECK(root.left->is_leaf());
  CHECK(root.left->value == 0.0);
  CHECK(root.left->count == 1);
  CHECK(root.right->is_leaf());
  CHECK(root.right->value == 10.0);
  CHECK(root.right->count == 1);

  CHECK(predict_tree_row(root, std::vector<double>{0.2}) == 0.0);
  CHECK(predict_tree_row(root, std::vector<double>{0.5}) == 0.0);  // <= left
  CHECK(predict_tree_row(root, std::vector<double>{0.7}) == 10.0);
}

TEST_CASE("constant targets make a single leaf") {
  SplitMix64 rng(31);
  const FeatureMatrix X = synth::random_matrix(rng, 9, 3);
  const TreeNode root = tree_fit(X, TargetVector(9, 4.25));
  CHECK(root.is_leaf());
  CHECK(root.value == 4.25);
  CHECK(root.count == 9);
}

TEST_CASE("identical feature rows cannot split and take the mean") {
  const TreeNode root = tree_fit(make({{2.0, 7.0}, {2.0, 7.0}}), {2.0, 4.0});
  CHECK(root.is_leaf());
  CHECK(root.value == 3.0);
  CHECK(root.count == 2);
}

TEST_CASE("an unlimited tree interpolates distinct rows exactly") {
  SplitMix64 rng(32);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 2 + rng.next_below(40);
    const std::size_t p = 1 + rng.next_below(4);
    // Continuous draws make duplicate rows measure-zero.
    const FeatureMatrix X = synth::random_matrix(rng, n, p);
    TargetVector y(n);
    for (double& v : y) v = synth::uniform(rng, -5.0, 5.0);
    const TreeNode root = tree_fit(X, y);
    CHECK(mae(y, predict_tree(root, X)) == 0.0);
  }
}

TEST_CASE("strictly increasing feature transforms keep predictions") {
  SplitMix64 rng(33);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 3 + rng.next_below(25);
    FeatureMatrix X = synth::random_matrix(rng, n, 3);
    TargetVector y(n);
    for (double& v : y) v = synth::uniform(rng, 0.0, 10.0);

    const TreeNode before = tree_fit(X, y);
    const TargetVector pred_before = predict_tree(before, X);

    FeatureMatrix warped = X;
    for (std::size_t i = 0; i < n; ++i)
      warped.at(i, 1) = std::exp(warped.at(i, 1));
    const TreeNode after = tree_fit(warped, y);
    const TargetVector pred_after = predict_tree(after, warped);

    for (std::size_t i = 0; i < n; ++i)
      CHECK(pred_before[i] == pred_after[i]);
  }
}

TEST_CASE("min_samples_leaf and max_depth are honored") {
  SplitMix64 rng(34);
  const FeatureMatrix X = synth::random_matrix(rng, 40, 3);
  TargetVector y(40);
  for (double& v : y) v = synth::uniform(rng, -5.0, 5.0);

  TreeFitConfig config;
  config.min_samples_leaf = 4;
  check_leaf_sizes(tree_fit(X, y, config), 4);

  config = TreeFitConfig{};
  config.max_depth = 2;
  CHECK(depth_of(tree_fit(X, y, config)) <= 2);

  config.max_depth = 0;
  const TreeNode stump = tree_fit(X, y, config);
  CHECK(stump.is_leaf());
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= 40.0;
  CHECK(stump.value == mean);
}

TEST_CASE("ties break toward the lowest feature then lowest threshold") {
  // Both features separate the targets perfectly, so both candidate splits
  // score identically; feature 0 must win.
  const TreeNode root =
      tree_fit(make({{0.0, 5.0}, {1.0, 6.0}}), {1.0, 9.0});
  REQUIRE(!root.is_leaf());
  CHECK(root.feature == 0);
}

TEST_CASE("tree_fit validates its inputs") {
  FeatureMatrix X = make({{1.0}, {2.0}});
  CHECK_THROWS_AS(tree_fit(X, {1.0}), LengthMismatchError);
  X.at(0, 0) = missing_value();
  CHECK_THROWS_AS(tree_fit(X, {1.0, 2.0}), std::invalid_argument);
  FeatureMatrix empty(0, synth::feature_names(1));
  CHECK_THROWS_AS(tree_fit(empty, {}), EmptyError);
}

TEST_CASE("tree_equal and clone_tree agree") {
  SplitMix64 rng(35);
  const FeatureMatrix X = synth::random_matrix(rng, 20, 2);
  TargetVector y(20);
  for (double& v : y) v = synth::uniform(rng, -1.0, 1.0);
  const TreeNode root = tree_fit(X, y);
  const TreeNode copy = clone_tree(root);
  CHECK(tree_equal(root, copy));

  TreeNode other = tree_fit(X, TargetVector(20, 3.0));
  CHECK(!tree_equal(root, other));
}
