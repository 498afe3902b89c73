#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ringloss/forest.hpp"
#include "ringloss/knn.hpp"
#include "ringloss/linear.hpp"
#include "ringloss/matrix.hpp"
#include "ringloss/preprocess.hpp"
#include "ringloss/tree.hpp"

namespace ringloss {

enum class ModelKind { linear, tree, forest, knn };

const char* model_kind_name(ModelKind kind);
ModelKind parse_model_kind(const std::string& name);  // throws FormatError

// A fitted regressor bundled with everything needed to reproduce its
// inputs: the preprocessing parameters fitted on the training rows and the
// encoded feature names the payload was trained against.
//
// TreeNode owns its children through unique_ptr, so TrainedModel is
// move-only; use clone_tree when a copy of a tree payload is needed.
struct TrainedModel {
  std::variant<LinearModel, TreeNode, ForestModel, KnnModel> payload;
  PreprocessParams preprocess;
  std::vector<std::string> feature_names;
  std::uint64_t training_seed = 0;

  ModelKind kind() const {
    return static_cast<ModelKind>(payload.index());
  }
};

// Predicts from already-preprocessed feature rows (imputed and scaled with
// the model's own parameters).  Throws WidthMismatchError when the width
// differs from the training width.
TargetVector predict(const TrainedModel& model, const FeatureMatrix& X);

}  // namespace ringloss
