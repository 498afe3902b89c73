#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringloss/csv.hpp"
#include "ringloss/encode.hpp"
#include "ringloss/errors.hpp"
#include "ringloss/io_util.hpp"
#include "ringloss/metrics.hpp"
#include "ringloss/model.hpp"
#include "ringloss/report.hpp"
#include "ringloss/serialize.hpp"

namespace {

using namespace ringloss;

// Exit codes: 0 success, 1 usage, 2 data/schema, 3 io/format.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitFile = 3;

struct TrainArgs {
  std::string data;
  std::string model_out;
  std::string method;
  std::uint64_t seed = 0;
  double ratio = 0.8;
  int trees = 100;
  std::optional<int> k;
  bool k_auto = false;
  double ridge_eps = 1e-8;
};

struct CompareArgs {
  std::string data;
  std::uint64_t seed = 0;
  double ratio = 0.8;
  std::string out;
};

struct PredictArgs {
  std::string model;
  std::string input;
  std::string out;
};

struct EvaluateArgs {
  std::string model;
  std::string data;
};

int run_validate(const std::string& data_path) {
  const Dataset ds = parse_csv_file(data_path);
  std::size_t bad_rows = 0;
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const auto violations = record_violations(ds.records[i]);
    if (violations.empty()) continue;
    ++bad_rows;
    // Row i sits on file line i + 2: the header is line 1 and the parser
    // accepts no interior blank lines.
    for (const std::string& v : violations)
      std::printf("%s:%zu: %s\n", ds.source_name.c_str(), i + 2, v.c_str());
  }
  if (bad_rows != 0) {
    std::printf("%zu of %zu rows have violations\n", bad_rows,
                ds.records.size());
    return kExitData;
  }
  std::printf("%zu rows, no violations\n", ds.records.size());
  return kExitOk;
}

MethodSpec method_spec_from_args(const TrainArgs& args) {
  MethodSpec spec;
  if (args.method == "linear") {
    spec.kind = ModelKind::linear;
    spec.name = "Linear Regression";
    spec.ridge_eps = args.ridge_eps;
  } else if (args.method == "tree") {
    spec.kind = ModelKind::tree;
    spec.name = "Decision Tree Regressor";
  } else if (args.method == "forest") {
    spec.kind = ModelKind::forest;
    spec.name = "Random Forest Regressor";
    spec.forest.n_trees = args.trees;
  } else {
    spec.kind = ModelKind::knn;
    spec.name = "K-Nearest Neighbour Regressor";
    spec.knn_k = args.k;  // unset (or --k-auto) means cross-validated
  }
  return spec;
}

int run_train(const TrainArgs& args) {
  const Dataset ds = parse_csv_file(args.data);
  const Encoded enc = encode_features(ds);
  if (!enc.targets)
    throw MissingTargetError("training data has no gross_loss_pct values");
  const MethodSpec spec = method_spec_from_args(args);

  const PreparedData prepared =
      prepare_data(enc.features, *enc.targets, args.seed, args.ratio);
  const TrainedModel model =
      fit_method(spec, prepared.train_features, prepared.train_targets,
                 prepared.params, args.seed);
  save_model(model, args.model_out);

  const TargetVector preds = predict(model, prepared.test_features);
  std::printf("train rows: %zu, test rows: %zu\n",
              prepared.split.train.size(), prepared.split.test.size());
  if (model.kind() == ModelKind::knn)
    std::printf("k: %d\n", std::get<KnnModel>(model.payload).k);
  std::printf("test MAE:   %.6g\n", mae(prepared.test_targets, preds));
  std::printf("test RMSPE: %.6g\n", rmspe(prepared.test_targets, preds));
  std::printf("model written to %s\n", args.model_out.c_str());
  return kExitOk;
}

int run_compare(const CompareArgs& args) {
  const Dataset ds = parse_csv_file(args.data);
  const EvalReport report =
      compare_models(ds, default_methods(), args.seed, args.ratio);
  std::fputs(render_report_table(report).c_str(), stdout);
  if (!args.out.empty()) {
    save_report(report, args.out);
    std::printf("report written to %s\n", args.out.c_str());
  }
  return kExitOk;
}

int run_predict(const PredictArgs& args) {
  const TrainedModel model = load_model(args.model);
  const Dataset ds = parse_csv_file(args.input);
  // Deliberately never looks at gross_loss_pct: predictions are a pure
  // function of the attribute columns.
  const FeatureMatrix raw = encode_features_only(ds);
  if (raw.cols() != model.feature_names.size())
    throw WidthMismatchError("input width does not match the model");
  const FeatureMatrix prepared = apply_preprocess(model.preprocess, raw);
  const TargetVector preds = predict(model, prepared);

  std::string out_text = csv_header_line(ds.has_target_column);
  out_text += ",predicted_gross_loss_pct\n";
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    out_text += csv_record_line(ds.records[i], ds.has_target_column);
    out_text += ',';
    out_text += format_double(preds[i]);
    out_text += '\n';
  }
  atomic_write_text(args.out, out_text);
  std::printf("%zu predictions written to %s\n", preds.size(),
              args.out.c_str());
  return kExitOk;
}

int run_evaluate(const EvaluateArgs& args) {
  const TrainedModel model = load_model(args.model);
  const Dataset ds = parse_csv_file(args.data);
  const Encoded enc = encode_features(ds);
  if (!enc.targets)
    throw MissingTargetError("evaluation data has no gross_loss_pct values");
  if (enc.features.cols() != model.feature_names.size())
    throw WidthMismatchError("data width does not match the model");
  const FeatureMatrix prepared =
      apply_preprocess(model.preprocess, enc.features);
  const TargetVector preds = predict(model, prepared);
  std::printf("rows: %zu\n", ds.records.size());
  std::printf("MAE:   %.6g\n", mae(*enc.targets, preds));
  std::printf("RMSPE: %.6g\n", rmspe(*enc.targets, preds));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ring gross-metal-loss estimation toolkit"};
  app.require_subcommand(1);

  std::string validate_data;
  CLI::App* validate = app.add_subcommand(
      "validate", "Check a ring CSV against the schema rules");
  validate->add_option("--data", validate_data, "Input CSV")->required();

  TrainArgs train_args;
  CLI::App* train =
      app.add_subcommand("train", "Fit one regressor and save the model");
  train->add_option("--data", train_args.data, "Labeled input CSV")
      ->required();
  train->add_option("--model-out", train_args.model_out, "Model file to write")
      ->required();
  train
      ->add_option("--method", train_args.method,
                   "Regressor: linear, tree, forest or knn")
      ->required()
      ->check(CLI::IsMember({"linear", "tree", "forest", "knn"}));
  train->add_option("--seed", train_args.seed, "Split/training seed")
      ->required();
  train->add_option("--ratio", train_args.ratio,
                    "Train fraction (default 0.8)");
  train->add_option("--trees", train_args.trees,
                    "Forest size (forest method only)");
  auto* k_opt = train->add_option("--k", train_args.k,
                                  "Neighbour count (knn method only)");
  train
      ->add_flag("--k-auto", train_args.k_auto,
                 "Pick k by cross-validation (knn default)")
      ->excludes(k_opt);
  train->add_option("--ridge-eps", train_args.ridge_eps,
                    "Ridge fallback strength (linear method only)");

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand(
      "compare", "Fit and score all four regressors on one split");
  compare->add_option("--data", compare_args.data, "Labeled input CSV")
      ->required();
  compare->add_option("--seed", compare_args.seed, "Split/training seed")
      ->required();
  compare->add_option("--ratio", compare_args.ratio,
                      "Train fraction (default 0.8)");
  compare->add_option("--out", compare_args.out, "Report JSON to write");

  PredictArgs predict_args;
  CLI::App* predict_cmd = app.add_subcommand(
      "predict", "Apply a saved model to new records");
  predict_cmd->add_option("--model", predict_args.model, "Saved model file")
      ->required();
  predict_cmd->add_option("--input", predict_args.input, "Input CSV")
      ->required();
  predict_cmd->add_option("--out", predict_args.out, "Output CSV to write")
      ->required();

  EvaluateArgs evaluate_args;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score a saved model on labeled data");
  evaluate->add_option("--model", evaluate_args.model, "Saved model file")
      ->required();
  evaluate->add_option("--data", evaluate_args.data, "Labeled input CSV")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n\n%s", e.what(), app.help().c_str());
    return kExitUsage;
  }

  try {
    if (*validate) return run_validate(validate_data);
    if (*train) return run_train(train_args);
    if (*compare) return run_compare(compare_args);
    if (*predict_cmd) return run_predict(predict_args);
    return run_evaluate(evaluate_args);
  } catch (const FileError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFile;
  } catch (const DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return kExitFile;
  }
}
