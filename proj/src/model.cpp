#include "ringloss/model.hpp"

#include <stdexcept>

#include "ringloss/errors.hpp"

namespace ringloss {

const char* model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::linear: return "linear";
    case ModelKind::tree: return "tree";
    case ModelKind::forest: return "forest";
    case ModelKind::knn: return "knn";
  }
  throw std::invalid_argument("unknown model kind");
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "linear") return ModelKind::linear;
  if (name == "tree") return ModelKind::tree;
  if (name == "forest") return ModelKind::forest;
  if (name == "knn") return ModelKind::knn;
  throw FormatError("unknown model kind: " + name);
}

TargetVector predict(const TrainedModel& model, const FeatureMatrix& X) {
  if (X.cols() != model.feature_names.size())
    throw WidthMismatchError("feature width does not match the model");
  if (X.has_missing())
    throw std::invalid_argument("predict requires imputed features");
  return std::visit(
      [&X](const auto& payload) -> TargetVector {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, LinearModel>)
          return predict_linear(payload, X);
        else if constexpr (std::is_same_v<T, TreeNode>)
          return predict_tree(payload, X);
        else if constexpr (std::is_same_v<T, ForestModel>)
          return predict_forest(payload, X);
        else
          return predict_knn(payload, X);
      },
      model.payload);
}

}  // namespace ringloss
