#pragma once

#include "ringloss/matrix.hpp"

namespace ringloss {

// Multivariate least squares: intercept plus one coefficient per feature.
struct LinearModel {
  double intercept = 0.0;
  std::vector<double> coefficients;
  double ridge_eps = 0.0;
};

// Solves the normal equations of the intercept-augmented design matrix with
// a Cholesky factorization. If the Gram matrix is singular or too
// ill-conditioned to factor, the solve is retried once with ridge_eps added
// to every feature diagonal entry (the intercept is not penalized).
// SingularError when ridge_eps is 0 and the system is rank-deficient.
LinearModel linear_fit(const FeatureMatrix& X, const TargetVector& y, double ridge_eps);

TargetVector predict_linear(const LinearModel& model, const FeatureMatrix& X);

}  // namespace ringloss
