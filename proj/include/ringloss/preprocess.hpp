#pragma once

#include <cstdint>
#include <span>

#include "ringloss/matrix.hpp"

namespace ringloss {

// Per-column fill values for MISSING cells, fitted on training rows only:
// the training mean for continuous columns, the training mode for columns
// whose observed values are all 0/1 (ties resolve to the smaller value).
struct ImputationParams {
  std::vector<double> fill_values;
};

// z-score standardization parameters (z = (x - u) / s), fitted on training
// rows only. s is the population standard deviation (divide by count).
// Zero-variance columns store s = 1 and set their flag, so applying the
// transform never divides by zero and maps the fitted rows to exactly 0.
struct ScalerParams {
  std::vector<double> means;
  std::vector<double> stds;
  std::vector<std::uint8_t> zero_variance_flags;
};

// Disjoint, sorted train/test row indices covering 0..n-1.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  std::uint64_t seed = 0;
  double ratio = 0.0;
};

// Everything a fitted model needs to preprocess prediction-time data,
// plus the split configuration it was trained under.
struct PreprocessParams {
  ImputationParams imputation;
  ScalerParams scaler;
  std::uint64_t seed = 0;
  double ratio = 0.0;
};

// AllMissingError if some column has no observed value among restrict_to;
// EmptySelectionError if restrict_to is empty.
ImputationParams impute_fit(const FeatureMatrix& X,
                            std::span<const std::size_t> restrict_to);

// Replaces every MISSING cell by its column fill. Idempotent; the output
// has no MISSING cells. WidthMismatchError if widths differ.
FeatureMatrix impute_apply(const ImputationParams& params, const FeatureMatrix& X);

// Requires no MISSING cells among restrict_to rows (impute first).
ScalerParams scaler_fit(const FeatureMatrix& X, std::span<const std::size_t> restrict_to);

FeatureMatrix scaler_apply(const ScalerParams& params, const FeatureMatrix& X);

// Fisher-Yates shuffle of 0..n-1 driven by SplitMix64(seed); the first
// floor(ratio * n) shuffled indices form the train side, the rest the test
// side, both then sorted ascending. DegenerateSplitError when either side
// would be empty (or n < 2, or ratio outside (0, 1)).
SplitIndices split_indices(std::size_t n, double ratio, std::uint64_t seed);

// impute_apply followed by scaler_apply with the stored parameters.
FeatureMatrix apply_preprocess(const PreprocessParams& params, const FeatureMatrix& X);

}  // namespace ringloss
