#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ringloss/errors.hpp"

namespace ringloss {

// The distinguished MISSING cell marker. Parsed data never contains NaN
// otherwise (the CSV reader rejects non-finite numbers), so NaN is free to
// mean "absent".
inline double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }

inline bool is_missing(double x) { return std::isnan(x); }

// Dense row-major numeric design matrix with named columns and per-cell
// MISSING capability.
class FeatureMatrix {
public:
  FeatureMatrix() = default;

  FeatureMatrix(std::size_t rows, std::vector<std::string> feature_names)
      : rows_(rows),
        cols_(feature_names.size()),
        cells_(rows * feature_names.size(), missing_value()),
        names_(std::move(feature_names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate feature name: " + names_[i]);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  double& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {cells_.data() + i * cols_, cols_};
  }

  const std::vector<std::string>& feature_names() const { return names_; }

  bool has_missing() const {
    for (double c : cells_)
      if (is_missing(c)) return true;
    return false;
  }

  FeatureMatrix select_rows(std::span<const std::size_t> indices) const {
    FeatureMatrix out(indices.size(), names_);
    for (std::size_t i = 0; i < indices.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(indices[i], j);
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
  std::vector<std::string> names_;
};

using TargetVector = std::vector<double>;

inline TargetVector select_rows(const TargetVector& y,
                                std::span<const std::size_t> indices) {
  TargetVector out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(y[i]);
  return out;
}

}  // namespace ringloss
