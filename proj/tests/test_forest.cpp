#include <algorithm>
#include <vector>

#include <doctest.h>

#include "ringloss/errors.hpp"
#include "ringloss/forest.hpp"
#include "ringloss/rng.hpp"
#include "support/synth.hpp"

using namespace ringloss;

namespace {

struct Instance {
  FeatureMatrix X;
  TargetVector y;
};

Instance random_instance(SplitMix64& rng, std::size_t max_n = 30,
                         std::size_t max_p = 4) {
  const std::size_t n = 2 + rng.next_below(max_n - 1);
  const std::size_t p = 1 + rng.next_below(max_p);
  Instance inst{synth::random_matrix(rng, n, p), TargetVector(n)};
  for (double& v : inst.y) v = synth::uniform(rng, -5.0, 5.0);
  return inst;
}

}  // namespace

TEST_CASE("the degenerate config collapses to a single CART tree") {
  SplitMix64 rng(41);
  for (int round = 0; round < 50; ++round) {
    const Instance inst = random_instance(rng);
    ForestConfig config;
    config.n_trees = 1;
    config.bootstrap = false;
    config.features_per_split = static_cast<int>(inst.X.cols());

    const ForestModel forest = forest_fit(inst.X, inst.y, config, 123);
    const TreeNode tree = tree_fit(inst.X, inst.y);
    REQUIRE(forest.trees.size() == 1);
    CHECK(tree_equal(forest.trees[0], tree));

    const TargetVector a = predict_forest(forest, inst.X);
    const TargetVector b = predict_tree(tree, inst.X);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("forest_fit is a pure function of inputs and seed") {
  SplitMix64 rng(42);
  const Instance inst = random_instance(rng, 25, 4);
  ForestConfig config;
  config.n_trees = 12;

  const ForestModel a = forest_fit(inst.X, inst.y, config, 7);
  const ForestModel b = forest_fit(inst.X, inst.y, config, 7);
  REQUIRE(a.trees.size() == b.trees.size());
  for (std::size_t t = 0; t < a.trees.size(); ++t)
    CHECK(tree_equal(a.trees[t], b.trees[t]));

  // A different seed almost surely grows a different ensemble.
  const ForestModel c = forest_fit(inst.X, inst.y, config, 8);
  bool any_difference = false;
  for (std::size_t t = 0; t < a.trees.size() && !any_difference; ++t)
    any_difference = !tree_equal(a.trees[t], c.trees[t]);
  CHECK(any_difference);
}

TEST_CASE("growing more trees never reshuffles the earlier ones") {
  SplitMix64 rng(43);
  const Instance inst = random_instance(rng, 25, 4);
  ForestConfig small;
  small.n_trees = 3;
  ForestConfig large;
  large.n_trees = 9;

  const ForestModel a = forest_fit(inst.X, inst.y, small, 99);
  const ForestModel b = forest_fit(inst.X, inst.y, large, 99);
  for (std::size_t t = 0; t < a.trees.size(); ++t)
    CHECK(tree_equal(a.trees[t], b.trees[t]));
}

TEST_CASE("a two-tree forest predicts the mean of its members") {
  SplitMix64 rng(44);
  const Instance inst = random_instance(rng, 20, 3);
  ForestConfig config;
  config.n_trees = 2;

  const ForestModel forest = forest_fit(inst.X, inst.y, config, 5);
  const TargetVector combined = predict_forest(forest, inst.X);
  const TargetVector first = predict_tree(forest.trees[0], inst.X);
  const TargetVector second = predict_tree(forest.trees[1], inst.X);
  for (std::size_t i = 0; i < combined.size(); ++i)
    CHECK(combined[i] == (first[i] + second[i]) / 2.0);
}

TEST_CASE("forest predictions stay inside the training target range") {
  SplitMix64 rng(45);
  for (int round = 0; round < 10; ++round) {
    const Instance inst = random_instance(rng);
    ForestConfig config;
    config.n_trees = 25;
    const ForestModel forest = forest_fit(inst.X, inst.y, config, 17);

    const double lo = *std::min_element(inst.y.begin(), inst.y.end());
    const double hi = *std::max_element(inst.y.begin(), inst.y.end());
    SplitMix64 qrng(round);
    const FeatureMatrix queries =
        synth::random_matrix(qrng, 15, inst.X.cols(), -4.0, 4.0);
    for (double v : predict_forest(forest, queries)) {
      CHECK(v >= lo);
      CHECK(v <= hi);
    }
  }
}

TEST_CASE("features_per_split defaults to max(1, p/3) and is validated") {
  ForestConfig config;
  CHECK(resolve_features_per_split(config, 31) == 10);
  CHECK(resolve_features_per_split(config, 3) == 1);
  CHECK(resolve_features_per_split(config, 1) == 1);
  config.features_per_split = 5;
  CHECK(resolve_features_per_split(config, 6) == 5);
  config.features_per_split = 7;
  CHECK_THROWS_AS(resolve_features_per_split(config, 6),
                  std::invalid_argument);
  config.features_per_split = 0;
  CHECK_THROWS_AS(resolve_features_per_split(config, 6),
                  std::invalid_argument);
}

TEST_CASE("forest_fit validates its inputs") {
  SplitMix64 rng(46);
  const Instance inst = random_instance(rng, 10, 2);
  ForestConfig config;
  config.n_trees = 0;
  CHECK_THROWS_AS(forest_fit(inst.X, inst.y, config, 1),
                  std::invalid_argument);
  config = ForestConfig{};
  CHECK_THROWS_AS(forest_fit(inst.X, TargetVector(inst.y.size() + 1, 0.0),
                             config, 1),
                  LengthMismatchError);
}
