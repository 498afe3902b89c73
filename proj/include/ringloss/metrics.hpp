#pragma once

#include "ringloss/matrix.hpp"

namespace ringloss {

// Mean absolute error: sum(|truth_i - pred_i|) / n, summed in index order.
double mae(const TargetVector& truth, const TargetVector& predictions);

// Root mean squared prediction error: sqrt(sum((truth_i - pred_i)^2) / n).
double rmspe(const TargetVector& truth, const TargetVector& predictions);

}  // namespace ringloss
