#pragma once

#include <cstdint>
#include <vector>

#include "ringloss/matrix.hpp"

namespace ringloss {

// K-nearest-neighbour regressor.  Fitting just stores the training data;
// prediction averages the targets of the k nearest rows under squared
// Euclidean distance.  Distance ties resolve to the lower row index, so
// predictions are deterministic.
struct KnnModel {
  FeatureMatrix train_features;
  TargetVector train_targets;
  int k = 1;
};

// Validates 1 <= k <= n and stores the data verbatim.
KnnModel knn_fit(const FeatureMatrix& X, const TargetVector& y, int k);

// Predicts each query row as the mean target of its k nearest training
// rows; neighbour targets are summed in (distance, index) sorted order.
TargetVector knn_predict(const FeatureMatrix& train_X,
                         const TargetVector& train_y, int k,
                         const FeatureMatrix& queries);

TargetVector predict_knn(const KnnModel& model, const FeatureMatrix& X);

// Candidate list used when k is not given explicitly: 1..min(10, n-1).
std::vector<int> default_k_candidates(std::size_t n_train);

// Picks k by cross-validated RMSPE.  Rows are shuffled once with the seed,
// dealt round-robin into `folds` validation folds, and each candidate k is
// scored by the mean RMSPE over folds; the smallest k wins ties.
// folds == n gives leave-one-out.
int select_k(const FeatureMatrix& X, const TargetVector& y,
             const std::vector<int>& candidates, int folds,
             std::uint64_t seed);

}  // namespace ringloss
