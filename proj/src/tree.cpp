#include "ringloss/tree.hpp"

#include <algorithm>
#include <numeric>

namespace ringloss {

namespace detail {

namespace {

struct BestSplit {
  double score = std::numeric_limits<double>::infinity();
  int feature = -1;
  double threshold = 0.0;
};

TreeNode make_leaf(const TargetVector& y, const std::vector<std::size_t>& rows) {
  double sum = 0.0;
  for (std::size_t r : rows) sum += y[r];
  TreeNode leaf;
  leaf.value = sum / static_cast<double>(rows.size());
  leaf.count = static_cast<int>(rows.size());
  return leaf;
}

TreeNode grow(const FeatureMatrix& X, const TargetVector& y,
              std::vector<std::size_t> rows, const TreeFitConfig& cfg, int depth,
              const std::function<std::vector<int>()>& sample_features) {
  const std::size_t n = rows.size();

  double y_min = y[rows[0]], y_max = y[rows[0]];
  for (std::size_t r : rows) {
    y_min = std::min(y_min, y[r]);
    y_max = std::max(y_max, y[r]);
  }
  const bool pure = y_min == y_max;
  const bool too_small = n < 2 * static_cast<std::size_t>(cfg.min_samples_leaf);
  const bool at_depth = cfg.max_depth && depth >= *cfg.max_depth;
  if (pure || too_small || at_depth) return make_leaf(y, rows);

  double y_sum = 0.0, y_sq_sum = 0.0;
  for (std::size_t r : rows) {
    y_sum += y[r];
    y_sq_sum += y[r] * y[r];
  }
  const double parent_sse = y_sq_sum - y_sum * y_sum / static_cast<double>(n);

  // Scan candidate features in ascending order; with thresholds ascending
  // inside each feature and strict improvement required, equal scores keep
  // the lowest (feature, threshold) pair. The explicit tie comparison stays
  // as a guard against any other evaluation order.
  BestSplit best;
  std::vector<std::size_t> order(n);
  std::vector<double> values(n);
  for (int f : sample_features()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double va = X.at(rows[a], static_cast<std::size_t>(f));
      const double vb = X.at(rows[b], static_cast<std::size_t>(f));
      if (va != vb) return va < vb;
      return rows[a] < rows[b];
    });
    for (std::size_t i = 0; i < n; ++i)
      values[i] = X.at(rows[order[i]], static_cast<std::size_t>(f));

    double left_sum = 0.0, left_sq = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      const double yi = y[rows[order[i - 1]]];
      left_sum += yi;
      left_sq += yi * yi;
      if (values[i - 1] == values[i]) continue;
      const std::size_t n_left = i, n_right = n - i;
      if (n_left < static_cast<std::size_t>(cfg.min_samples_leaf) ||
          n_right < static_cast<std::size_t>(cfg.min_samples_leaf))
        continue;
      const double right_sum = y_sum - left_sum;
      const double right_sq = y_sq_sum - left_sq;
      const double sse = (left_sq - left_sum * left_sum / static_cast<double>(n_left)) +
                         (right_sq - right_sum * right_sum / static_cast<double>(n_right));
      // Midpoint of adjacent representable doubles can round up to the
      // right value; fall back to the left value so the <= partition always
      // matches the scanned child sizes.
      double threshold = std::midpoint(values[i - 1], values[i]);
      if (!(threshold < values[i])) threshold = values[i - 1];
      const bool better =
          sse < best.score ||
          (sse == best.score && (f < best.feature ||
                                 (f == best.feature && threshold < best.threshold)));
      if (better) best = {sse, f, threshold};
    }
  }

  if (best.feature < 0 || best.score >= parent_sse) return make_leaf(y, rows);

  std::vector<std::size_t> left_rows, right_rows;
  for (std::size_t r : rows) {
    if (X.at(r, static_cast<std::size_t>(best.feature)) <= best.threshold)
      left_rows.push_back(r);
    else
      right_rows.push_back(r);
  }

  TreeNode node;
  node.feature = best.feature;
  node.threshold = best.threshold;
  node.left = std::make_unique<TreeNode>(
      grow(X, y, std::move(left_rows), cfg, depth + 1, sample_features));
  node.right = std::make_unique<TreeNode>(
      grow(X, y, std::move(right_rows), cfg, depth + 1, sample_features));
  return node;
}

}  // namespace

TreeNode grow_tree(const FeatureMatrix& X, const TargetVector& y,
                   std::vector<std::size_t> rows, const TreeFitConfig& config,
                   const std::function<std::vector<int>()>& sample_features) {
  return grow(X, y, std::move(rows), config, 0, sample_features);
}

}  // namespace detail

TreeNode tree_fit(const FeatureMatrix& X, const TargetVector& y,
                  const TreeFitConfig& config) {
  if (X.rows() == 0) throw EmptyError("tree_fit: empty training set");
  if (X.rows() != y.size())
    throw LengthMismatchError("tree_fit: " + std::to_string(X.rows()) + " rows vs " +
                              std::to_string(y.size()) + " targets");
  if (X.has_missing()) throw std::invalid_argument("tree_fit: MISSING cells; impute first");
  if (config.min_samples_leaf < 1)
    throw std::invalid_argument("tree_fit: min_samples_leaf must be >= 1");

  std::vector<std::size_t> rows(X.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::vector<int> all_features(X.cols());
  std::iota(all_features.begin(), all_features.end(), 0);
  return detail::grow_tree(X, y, std::move(rows), config,
                           [&all_features] { return all_features; });
}

double predict_tree_row(const TreeNode& root, std::span<const double> row) {
  const TreeNode* node = &root;
  while (!node->is_leaf())
    node = row[static_cast<std::size_t>(node->feature)] <= node->threshold
               ? node->left.get()
               : node->right.get();
  return node->value;
}

TargetVector predict_tree(const TreeNode& root, const FeatureMatrix& X) {
  TargetVector out(X.rows());
  for (std::size_t r = 0; r < X.rows(); ++r) out[r] = predict_tree_row(root, X.row(r));
  return out;
}

bool tree_equal(const TreeNode& a, const TreeNode& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.value == b.value && a.count == b.count;
  return a.feature == b.feature && a.threshold == b.threshold &&
         tree_equal(*a.left, *b.left) && tree_equal(*a.right, *b.right);
}

TreeNode clone_tree(const TreeNode& node) {
  TreeNode out;
  out.feature = node.feature;
  out.threshold = node.threshold;
  out.value = node.value;
  out.count = node.count;
  if (!node.is_leaf()) {
    out.left = std::make_unique<TreeNode>(clone_tree(*node.left));
    out.right = std::make_unique<TreeNode>(clone_tree(*node.right));
  }
  return out;
}

}  // namespace ringloss
