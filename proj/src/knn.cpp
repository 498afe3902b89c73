#include "ringloss/knn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "ringloss/errors.hpp"
#include "ringloss/metrics.hpp"
#include "ringloss/rng.hpp"

namespace ringloss {

namespace {

void check_training_data(const FeatureMatrix& X, const TargetVector& y) {
  if (X.rows() == 0) throw EmptyError("cannot fit knn on empty data");
  if (y.size() != X.rows())
    throw LengthMismatchError("target length does not match row count");
  if (X.has_missing())
    throw std::invalid_argument("knn requires imputed features");
  for (double v : y)
    if (is_missing(v))
      throw std::invalid_argument("knn requires complete targets");
}

}  // namespace

KnnModel knn_fit(const FeatureMatrix& X, const TargetVector& y, int k) {
  check_training_data(X, y);
  if (k < 1 || static_cast<std::size_t>(k) > X.rows())
    throw InvalidKError("k must be between 1 and the training row count");
  return KnnModel{X, y, k};
}

TargetVector knn_predict(const FeatureMatrix& train_X,
                         const TargetVector& train_y, int k,
                         const FeatureMatrix& queries) {
  check_training_data(train_X, train_y);
  if (k < 1 || static_cast<std::size_t>(k) > train_X.rows())
    throw InvalidKError("k must be between 1 and the training row count");
  if (queries.cols() != train_X.cols())
    throw WidthMismatchError("query width does not match training width");
  if (queries.has_missing())
    throw std::invalid_argument("knn requires imputed query features");

  const std::size_t n = train_X.rows();
  const std::size_t p = train_X.cols();
  std::vector<std::pair<double, std::size_t>> order(n);
  TargetVector out(queries.rows());
  for (std::size_t q = 0; q < queries.rows(); ++q) {
    const auto query = queries.row(q);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = train_X.row(i);
      double dist = 0.0;
      for (std::size_t j = 0; j < p; ++j) {
        const double d = query[j] - row[j];
        dist += d * d;
      }
      order[i] = {dist, i};
    }
    std::sort(order.begin(), order.end());
    double sum = 0.0;
    for (int i = 0; i < k; ++i)
      sum += train_y[order[static_cast<std::size_t>(i)].second];
    out[q] = sum / static_cast<double>(k);
  }
  return out;
}

TargetVector predict_knn(const KnnModel& model, const FeatureMatrix& X) {
  return knn_predict(model.train_features, model.train_targets, model.k, X);
}

std::vector<int> default_k_candidates(std::size_t n_train) {
  std::vector<int> out;
  if (n_train < 2) return out;
  const std::size_t top = std::min<std::size_t>(10, n_train - 1);
  for (std::size_t k = 1; k <= top; ++k) out.push_back(static_cast<int>(k));
  return out;
}

int select_k(const FeatureMatrix& X, const TargetVector& y,
             const std::vector<int>& candidates, int folds,
             std::uint64_t seed) {
  check_training_data(X, y);
  const std::size_t n = X.rows();
  if (folds < 2 || static_cast<std::size_t>(folds) > n)
    throw InvalidFoldsError("folds must be between 2 and the row count");
  if (candidates.empty()) throw InvalidKError("no candidate k values");
  // The largest fold holds ceil(n / folds) rows, so every candidate must
  // fit in the smallest training side.
  const std::size_t largest_fold =
      (n + static_cast<std::size_t>(folds) - 1) /
      static_cast<std::size_t>(folds);
  const std::size_t min_train = n - largest_fold;
  for (int k : candidates)
    if (k < 1 || static_cast<std::size_t>(k) > min_train)
      throw InvalidKError("candidate k exceeds the usable training size");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(seed);
  fisher_yates_shuffle(order, rng);

  std::vector<double> totals(candidates.size(), 0.0);
  std::vector<char> in_val(n);
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> val_rows;
  for (int f = 0; f < folds; ++f) {
    std::fill(in_val.begin(), in_val.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (static_cast<int>(i % static_cast<std::size_t>(folds)) == f)
        in_val[order[i]] = 1;
    train_rows.clear();
    val_rows.clear();
    for (std::size_t r = 0; r < n; ++r)
      (in_val[r] ? val_rows : train_rows).push_back(r);
    if (val_rows.empty()) continue;  // folds <= n, so never on round-robin

    const FeatureMatrix train_X = X.select_rows(train_rows);
    const TargetVector train_y = select_rows(y, train_rows);
    const FeatureMatrix val_X = X.select_rows(val_rows);
    const TargetVector val_y = select_rows(y, val_rows);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const TargetVector preds =
          knn_predict(train_X, train_y, candidates[c], val_X);
      totals[c] += rmspe(val_y, preds);
    }
  }

  std::size_t best = 0;
  double best_score = totals[0];
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    const bool better = totals[c] < best_score ||
                        (totals[c] == best_score &&
                         candidates[c] < candidates[best]);
    if (better) {
      best = c;
      best_score = totals[c];
    }
  }
  return candidates[best];
}

}  // namespace ringloss
