#include "ringloss/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ringloss/rng.hpp"

namespace ringloss {

namespace {

void check_selection(const FeatureMatrix& X, std::span<const std::size_t> rows,
                     const char* op) {
  if (rows.empty())
    throw EmptySelectionError(std::string(op) + ": empty row selection");
  for (std::size_t r : rows)
    if (r >= X.rows())
      throw std::invalid_argument(std::string(op) + ": row index " +
                                  std::to_string(r) + " out of range");
}

void check_width(std::size_t params_width, const FeatureMatrix& X, const char* op) {
  if (params_width != X.cols())
    throw WidthMismatchError(std::string(op) + ": parameters have " +
                             std::to_string(params_width) + " columns, matrix has " +
                             std::to_string(X.cols()));
}

}  // namespace

ImputationParams impute_fit(const FeatureMatrix& X,
                            std::span<const std::size_t> restrict_to) {
  check_selection(X, restrict_to, "impute_fit");

  ImputationParams params;
  params.fill_values.resize(X.cols());
  for (std::size_t j = 0; j < X.cols(); ++j) {
    double sum = 0.0;
    std::size_t observed = 0, zeros = 0, ones = 0;
    bool binary = true;
    for (std::size_t r : restrict_to) {
      const double v = X.at(r, j);
      if (is_missing(v)) continue;
      ++observed;
      sum += v;
      if (v == 0.0)
        ++zeros;
      else if (v == 1.0)
        ++ones;
      else
        binary = false;
    }
    if (observed == 0) throw AllMissingError(j, X.feature_names()[j]);
    if (binary)
      params.fill_values[j] = ones > zeros ? 1.0 : 0.0;  // tie -> smaller value
    else
      params.fill_values[j] = sum / static_cast<double>(observed);
  }
  return params;
}

FeatureMatrix impute_apply(const ImputationParams& params, const FeatureMatrix& X) {
  check_width(params.fill_values.size(), X, "impute_apply");
  FeatureMatrix out = X;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      if (is_missing(out.at(i, j))) out.at(i, j) = params.fill_values[j];
  return out;
}

ScalerParams scaler_fit(const FeatureMatrix& X,
                        std::span<const std::size_t> restrict_to) {
  check_selection(X, restrict_to, "scaler_fit");

  const double n = static_cast<double>(restrict_to.size());
  ScalerParams params;
  params.means.resize(X.cols());
  params.stds.resize(X.cols());
  params.zero_variance_flags.resize(X.cols());

  for (std::size_t j = 0; j < X.cols(); ++j) {
    double lo = X.at(restrict_to.front(), j);
    double hi = lo;
    double sum = 0.0;
    for (std::size_t r : restrict_to) {
      const double v = X.at(r, j);
      if (is_missing(v))
        throw std::invalid_argument("scaler_fit: MISSING cell in column " +
                                    X.feature_names()[j] + "; impute first");
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    if (lo == hi) {
      // Constant column: take the constant itself as the mean so the fitted
      // rows standardize to exactly zero.
      params.means[j] = lo;
      params.stds[j] = 1.0;
      params.zero_variance_flags[j] = 1;
      continue;
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t r : restrict_to) {
      const double d = X.at(r, j) - mean;
      ss += d * d;
    }
    params.means[j] = mean;
    params.stds[j] = std::sqrt(ss / n);
    params.zero_variance_flags[j] = 0;
  }
  return params;
}

FeatureMatrix scaler_apply(const ScalerParams& params, const FeatureMatrix& X) {
  check_width(params.means.size(), X, "scaler_apply");
  FeatureMatrix out = X;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out.at(i, j) = (out.at(i, j) - params.means[j]) / params.stds[j];
  return out;
}

SplitIndices split_indices(std::size_t n, double ratio, std::uint64_t seed) {
  if (n < 2)
    throw DegenerateSplitError("need at least 2 rows to split, have " +
                               std::to_string(n));
  if (!(ratio > 0.0 && ratio < 1.0))
    throw DegenerateSplitError("split ratio must lie strictly between 0 and 1");

  const std::size_t n_train =
      static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));
  if (n_train < 1 || n - n_train < 1)
    throw DegenerateSplitError("ratio " + std::to_string(ratio) + " leaves an empty side for n = " +
                               std::to_string(n));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(seed);
  fisher_yates_shuffle(order, rng);

  SplitIndices split;
  split.seed = seed;
  split.ratio = ratio;
  split.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  split.test.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

FeatureMatrix apply_preprocess(const PreprocessParams& params, const FeatureMatrix& X) {
  return scaler_apply(params.scaler, impute_apply(params.imputation, X));
}

}  // namespace ringloss
