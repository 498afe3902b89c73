#include "ringloss/serialize.hpp"

#include <utility>

#include "ringloss/errors.hpp"
#include "ringloss/io_util.hpp"

namespace ringloss {

using ojson = nlohmann::ordered_json;

namespace {

ojson tree_to_json(const TreeNode& node) {
  ojson j;
  j["leaf"] = node.is_leaf();
  if (node.is_leaf()) {
    j["value"] = node.value;
    j["count"] = node.count;
  } else {
    j["feature"] = node.feature;
    j["threshold"] = node.threshold;
    j["left"] = tree_to_json(*node.left);
    j["right"] = tree_to_json(*node.right);
  }
  return j;
}

ojson optional_int_to_json(const std::optional<int>& v) {
  if (v) return ojson(*v);
  return ojson(nullptr);
}

ojson payload_to_json(const TrainedModel& model) {
  ojson j;
  switch (model.kind()) {
    case ModelKind::linear: {
      const auto& m = std::get<LinearModel>(model.payload);
      j["intercept"] = m.intercept;
      j["coefficients"] = m.coefficients;
      j["ridge_eps"] = m.ridge_eps;
      break;
    }
    case ModelKind::tree:
      j = tree_to_json(std::get<TreeNode>(model.payload));
      break;
    case ModelKind::forest: {
      const auto& m = std::get<ForestModel>(model.payload);
      ojson config;
      config["n_trees"] = m.config.n_trees;
      config["bootstrap"] = m.config.bootstrap;
      config["features_per_split"] =
          optional_int_to_json(m.config.features_per_split);
      config["min_samples_leaf"] = m.config.min_samples_leaf;
      config["max_depth"] = optional_int_to_json(m.config.max_depth);
      j["config"] = std::move(config);
      j["master_seed"] = m.master_seed;
      ojson trees = ojson::array();
      for (const TreeNode& tree : m.trees) trees.push_back(tree_to_json(tree));
      j["trees"] = std::move(trees);
      break;
    }
    case ModelKind::knn: {
      const auto& m = std::get<KnnModel>(model.payload);
      j["k"] = m.k;
      j["train_targets"] = m.train_targets;
      ojson rows = ojson::array();
      for (std::size_t i = 0; i < m.train_features.rows(); ++i) {
        ojson row = ojson::array();
        for (double v : m.train_features.row(i)) row.push_back(v);
        rows.push_back(std::move(row));
      }
      j["train_features"] = std::move(rows);
      break;
    }
  }
  return j;
}

const ojson& require(const ojson& j, const char* key) {
  if (!j.is_object())
    throw FormatError(std::string("expected an object around key: ") + key);
  auto it = j.find(key);
  if (it == j.end())
    throw FormatError(std::string("missing key: ") + key);
  return *it;
}

std::optional<int> optional_int_from_json(const ojson& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

TreeNode tree_from_json(const ojson& j) {
  TreeNode node;
  if (require(j, "leaf").get<bool>()) {
    node.value = require(j, "value").get<double>();
    node.count = require(j, "count").get<int>();
  } else {
    node.feature = require(j, "feature").get<int>();
    node.threshold = require(j, "threshold").get<double>();
    node.left = std::make_unique<TreeNode>(tree_from_json(require(j, "left")));
    node.right =
        std::make_unique<TreeNode>(tree_from_json(require(j, "right")));
  }
  return node;
}

}  // namespace

ojson model_to_json(const TrainedModel& model) {
  ojson j;
  j["format_version"] = 1;
  j["model_kind"] = model_kind_name(model.kind());
  j["training_seed"] = model.training_seed;
  j["feature_names"] = model.feature_names;
  ojson pre;
  pre["fill_values"] = model.preprocess.imputation.fill_values;
  pre["means"] = model.preprocess.scaler.means;
  pre["stds"] = model.preprocess.scaler.stds;
  ojson flags = ojson::array();
  for (std::uint8_t f : model.preprocess.scaler.zero_variance_flags)
    flags.push_back(f != 0);
  pre["zero_variance_flags"] = std::move(flags);
  pre["seed"] = model.preprocess.seed;
  pre["ratio"] = model.preprocess.ratio;
  j["preprocess"] = std::move(pre);
  j["payload"] = payload_to_json(model);
  return j;
}

TrainedModel model_from_json(const ojson& doc) {
  try {
    const ojson& version = require(doc, "format_version");
    if (!version.is_number_integer())
      throw FormatError("format_version must be an integer");
    if (version.get<int>() != 1)
      throw VersionError("unsupported format_version: " + version.dump());

    TrainedModel model;
    model.training_seed = require(doc, "training_seed").get<std::uint64_t>();
    model.feature_names =
        require(doc, "feature_names").get<std::vector<std::string>>();

    const ojson& pre = require(doc, "preprocess");
    model.preprocess.imputation.fill_values =
        require(pre, "fill_values").get<std::vector<double>>();
    model.preprocess.scaler.means =
        require(pre, "means").get<std::vector<double>>();
    model.preprocess.scaler.stds =
        require(pre, "stds").get<std::vector<double>>();
    for (const ojson& f : require(pre, "zero_variance_flags"))
      model.preprocess.scaler.zero_variance_flags.push_back(f.get<bool>() ? 1
                                                                          : 0);
    model.preprocess.seed = require(pre, "seed").get<std::uint64_t>();
    model.preprocess.ratio = require(pre, "ratio").get<double>();

    const ModelKind kind =
        parse_model_kind(require(doc, "model_kind").get<std::string>());
    const ojson& payload = require(doc, "payload");
    switch (kind) {
      case ModelKind::linear: {
        LinearModel m;
        m.intercept = require(payload, "intercept").get<double>();
        m.coefficients =
            require(payload, "coefficients").get<std::vector<double>>();
        m.ridge_eps = require(payload, "ridge_eps").get<double>();
        model.payload = std::move(m);
        break;
      }
      case ModelKind::tree:
        model.payload = tree_from_json(payload);
        break;
      case ModelKind::forest: {
        ForestModel m;
        const ojson& config = require(payload, "config");
        m.config.n_trees = require(config, "n_trees").get<int>();
        m.config.bootstrap = require(config, "bootstrap").get<bool>();
        m.config.features_per_split =
            optional_int_from_json(require(config, "features_per_split"));
        m.config.min_samples_leaf =
            require(config, "min_samples_leaf").get<int>();
        m.config.max_depth =
            optional_int_from_json(require(config, "max_depth"));
        m.master_seed = require(payload, "master_seed").get<std::uint64_t>();
        const ojson& trees = require(payload, "trees");
        if (!trees.is_array()) throw FormatError("trees must be an array");
        for (const ojson& tree : trees)
          m.trees.push_back(tree_from_json(tree));
        model.payload = std::move(m);
        break;
      }
      case ModelKind::knn: {
        KnnModel m;
        m.k = require(payload, "k").get<int>();
        m.train_targets =
            require(payload, "train_targets").get<std::vector<double>>();
        const ojson& rows = require(payload, "train_features");
        if (!rows.is_array())
          throw FormatError("train_features must be an array");
        FeatureMatrix X(rows.size(), model.feature_names);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const auto row = rows[i].get<std::vector<double>>();
          if (row.size() != X.cols())
            throw FormatError("train_features row width mismatch");
          for (std::size_t jx = 0; jx < row.size(); ++jx)
            X.at(i, jx) = row[jx];
        }
        m.train_features = std::move(X);
        model.payload = std::move(m);
        break;
      }
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed model document: ") + e.what());
  }
}

void save_model(const TrainedModel& model, const std::string& path) {
  atomic_write_text(path, model_to_json(model).dump(2) + "\n");
}

TrainedModel load_model(const std::string& path) {
  const std::string text = read_text_file(path);
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed model document: ") + e.what());
  }
  return model_from_json(doc);
}

ojson report_to_json(const EvalReport& report) {
  ojson j;
  j["schema_version"] = 1;
  j["seed"] = report.seed;
  j["n_train"] = report.n_train;
  j["n_test"] = report.n_test;
  j["config_digest"] = report.config_digest;
  ojson rows = ojson::array();
  for (const EvalRow& row : report.rows) {
    ojson r;
    r["method_name"] = row.method_name;
    r["mae"] = row.mae;
    r["rmspe"] = row.rmspe;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

void save_report(const EvalReport& report, const std::string& path) {
  atomic_write_text(path, report_to_json(report).dump(2) + "\n");
}

}  // namespace ringloss
