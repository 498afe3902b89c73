#include "ringloss/linear.hpp"

#include <cmath>

namespace ringloss {

namespace {

// Cholesky solve of the symmetric system G theta = b. Returns false when a
// pivot falls to `tolerance` or below, i.e. G is (numerically) not positive
// definite. G is row-major m x m and gets overwritten by L.
bool cholesky_solve(std::vector<double>& G, std::vector<double>& b, std::size_t m,
                    double tolerance) {
  for (std::size_t k = 0; k < m; ++k) {
    double d = G[k * m + k];
    for (std::size_t i = 0; i < k; ++i) d -= G[k * m + i] * G[k * m + i];
    if (!(d > tolerance)) return false;
    const double lkk = std::sqrt(d);
    G[k * m + k] = lkk;
    for (std::size_t r = k + 1; r < m; ++r) {
      double v = G[r * m + k];
      for (std::size_t i = 0; i < k; ++i) v -= G[r * m + i] * G[k * m + i];
      G[r * m + k] = v / lkk;
    }
  }
  // forward solve L z = b, then backward solve L^T theta = z
  for (std::size_t k = 0; k < m; ++k) {
    double v = b[k];
    for (std::size_t i = 0; i < k; ++i) v -= G[k * m + i] * b[i];
    b[k] = v / G[k * m + k];
  }
  for (std::size_t k = m; k-- > 0;) {
    double v = b[k];
    for (std::size_t i = k + 1; i < m; ++i) v -= G[i * m + k] * b[i];
    b[k] = v / G[k * m + k];
  }
  return true;
}

}  // namespace

LinearModel linear_fit(const FeatureMatrix& X, const TargetVector& y, double ridge_eps) {
  if (X.rows() == 0) throw EmptyError("linear_fit: empty training set");
  if (X.rows() != y.size())
    throw LengthMismatchError("linear_fit: " + std::to_string(X.rows()) + " rows vs " +
                              std::to_string(y.size()) + " targets");
  if (X.has_missing())
    throw std::invalid_argument("linear_fit: MISSING cells; impute first");
  if (ridge_eps < 0.0) throw std::invalid_argument("linear_fit: negative ridge_eps");

  const std::size_t n = X.rows();
  const std::size_t p = X.cols();
  const std::size_t m = p + 1;  // column 0 is the intercept

  // Gram matrix A^T A and right-hand side A^T y of the augmented design A = [1 X].
  std::vector<double> gram(m * m, 0.0);
  std::vector<double> rhs(m, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = X.row(r);
    gram[0] += 1.0;
    rhs[0] += y[r];
    for (std::size_t j = 0; j < p; ++j) {
      gram[(j + 1) * m + 0] += row[j];
      rhs[j + 1] += row[j] * y[r];
      for (std::size_t i = 0; i <= j; ++i) gram[(j + 1) * m + (i + 1)] += row[j] * row[i];
    }
  }
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r + 1; c < m; ++c) gram[r * m + c] = gram[c * m + r];

  double diag_max = 0.0;
  for (std::size_t k = 0; k < m; ++k) diag_max = std::max(diag_max, gram[k * m + k]);
  const double rank_tolerance = 1e-12 * std::max(diag_max, 1.0);

  std::vector<double> factor = gram;
  std::vector<double> solution = rhs;
  if (!cholesky_solve(factor, solution, m, rank_tolerance)) {
    if (ridge_eps == 0.0)
      throw SingularError("linear_fit: rank-deficient system and ridge_eps is 0");
    // The penalized Gram matrix is positive definite for any ridge_eps > 0,
    // so only require strictly positive pivots here.
    factor = gram;
    solution = rhs;
    for (std::size_t j = 1; j < m; ++j) factor[j * m + j] += ridge_eps;
    if (!cholesky_solve(factor, solution, m, 0.0))
      throw SingularError("linear_fit: system remains singular with ridge_eps " +
                          std::to_string(ridge_eps));
  }

  LinearModel model;
  model.intercept = solution[0];
  model.coefficients.assign(solution.begin() + 1, solution.end());
  model.ridge_eps = ridge_eps;
  for (double c : solution)
    if (!std::isfinite(c)) throw SingularError("linear_fit: non-finite solution");
  return model;
}

TargetVector predict_linear(const LinearModel& model, const FeatureMatrix& X) {
  if (model.coefficients.size() != X.cols())
    throw WidthMismatchError("predict_linear: model has " +
                             std::to_string(model.coefficients.size()) +
                             " coefficients, matrix has " + std::to_string(X.cols()) +
                             " columns");
  TargetVector out(X.rows());
  for (std::size_t r = 0; r < X.rows(); ++r) {
    const auto row = X.row(r);
    double v = model.intercept;
    for (std::size_t j = 0; j < X.cols(); ++j) v += model.coefficients[j] * row[j];
    out[r] = v;
  }
  return out;
}

}  // namespace ringloss
