#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringloss/forest.hpp"
#include "ringloss/matrix.hpp"
#include "ringloss/model.hpp"
#include "ringloss/preprocess.hpp"
#include "ringloss/schema.hpp"
#include "ringloss/tree.hpp"

namespace ringloss {

// One regressor to fit and score.  Only the fields matching `kind` are
// read: ridge_eps for linear, tree/forest configs for those kinds, knn_k
// for knn (unset picks k by leave-one-out cross-validation).
struct MethodSpec {
  ModelKind kind = ModelKind::linear;
  std::string name;
  double ridge_eps = 1e-8;
  TreeFitConfig tree;
  ForestConfig forest;
  std::optional<int> knn_k;
};

// The standard four-way comparison, in report order.
std::vector<MethodSpec> default_methods();

struct EvalRow {
  std::string method_name;
  double mae = 0.0;
  double rmspe = 0.0;
};

struct EvalReport {
  std::vector<EvalRow> rows;  // one per requested method, request order
  std::uint64_t seed = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::string config_digest;  // hash of methods + seed + ratio
};

// The shared front half of every training run: split the rows, fit the
// imputer and scaler on the train side only, transform everything with
// those fitted parameters, and slice the two sides apart.
struct PreparedData {
  FeatureMatrix train_features;
  FeatureMatrix test_features;
  TargetVector train_targets;
  TargetVector test_targets;
  PreprocessParams params;
  SplitIndices split;
};

PreparedData prepare_data(const FeatureMatrix& X, const TargetVector& y,
                          std::uint64_t seed, double ratio);

// Fits one method on prepared training data.  For knn without an explicit
// k, picks it by leave-one-out cross-validated RMSPE over 1..min(10, n-1).
TrainedModel fit_method(const MethodSpec& spec, const FeatureMatrix& train_X,
                        const TargetVector& train_y,
                        const PreprocessParams& params, std::uint64_t seed);

// Fits and scores every method on one shared split of (X, y).  Data errors
// raised while fitting a method are rethrown with the method name prefixed.
EvalReport run_comparison(const FeatureMatrix& X, const TargetVector& y,
                          const std::vector<MethodSpec>& methods,
                          std::uint64_t seed, double ratio);

// Encodes the dataset and delegates to run_comparison.
// MissingTargetError when the dataset has no gross-loss column.
EvalReport compare_models(const Dataset& ds,
                          const std::vector<MethodSpec>& methods,
                          std::uint64_t seed, double ratio);

// Fixed-width text table with a header and one row per method.
std::string render_report_table(const EvalReport& report);

// FNV-1a 64-bit digest of the canonical method/seed/ratio description,
// rendered as 16 lowercase hex digits.
std::string config_digest(const std::vector<MethodSpec>& methods,
                          std::uint64_t seed, double ratio);

}  // namespace ringloss
