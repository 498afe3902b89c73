#include "ringloss/metrics.hpp"

#include <cmath>

#include "ringloss/errors.hpp"

namespace ringloss {

namespace {

void check_pair(const TargetVector& truth, const TargetVector& predictions) {
  if (truth.size() != predictions.size())
    throw LengthMismatchError("truth and prediction lengths differ");
  if (truth.empty()) throw EmptyError("metrics need at least one pair");
}

}  // namespace

double mae(const TargetVector& truth, const TargetVector& predictions) {
  check_pair(truth, predictions);
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i)
    sum += std::abs(truth[i] - predictions[i]);
  return sum / static_cast<double>(truth.size());
}

double rmspe(const TargetVector& truth, const TargetVector& predictions) {
  check_pair(truth, predictions);
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = truth[i] - predictions[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(truth.size()));
}

}  // namespace ringloss
