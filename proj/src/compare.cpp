#include "ringloss/report.hpp"

#include <cinttypes>
#include <cstdio>

#include "ringloss/csv.hpp"
#include "ringloss/encode.hpp"
#include "ringloss/errors.hpp"
#include "ringloss/knn.hpp"
#include "ringloss/linear.hpp"
#include "ringloss/metrics.hpp"

namespace ringloss {

std::vector<MethodSpec> default_methods() {
  std::vector<MethodSpec> methods(4);
  methods[0].kind = ModelKind::linear;
  methods[0].name = "Linear Regression";
  methods[1].kind = ModelKind::forest;
  methods[1].name = "Random Forest Regressor";
  methods[2].kind = ModelKind::tree;
  methods[2].name = "Decision Tree Regressor";
  methods[3].kind = ModelKind::knn;
  methods[3].name = "K-Nearest Neighbour Regressor";
  return methods;
}

PreparedData prepare_data(const FeatureMatrix& X, const TargetVector& y,
                          std::uint64_t seed, double ratio) {
  if (y.size() != X.rows())
    throw LengthMismatchError("target length does not match row count");
  PreparedData out;
  out.split = split_indices(X.rows(), ratio, seed);
  out.params.imputation = impute_fit(X, out.split.train);
  const FeatureMatrix imputed = impute_apply(out.params.imputation, X);
  out.params.scaler = scaler_fit(imputed, out.split.train);
  out.params.seed = seed;
  out.params.ratio = ratio;
  const FeatureMatrix standardized = scaler_apply(out.params.scaler, imputed);
  out.train_features = standardized.select_rows(out.split.train);
  out.test_features = standardized.select_rows(out.split.test);
  out.train_targets = select_rows(y, out.split.train);
  out.test_targets = select_rows(y, out.split.test);
  return out;
}

TrainedModel fit_method(const MethodSpec& spec, const FeatureMatrix& train_X,
                        const TargetVector& train_y,
                        const PreprocessParams& params, std::uint64_t seed) {
  TrainedModel model;
  model.preprocess = params;
  model.feature_names = train_X.feature_names();
  model.training_seed = seed;
  switch (spec.kind) {
    case ModelKind::linear:
      model.payload = linear_fit(train_X, train_y, spec.ridge_eps);
      break;
    case ModelKind::tree:
      model.payload = tree_fit(train_X, train_y, spec.tree);
      break;
    case ModelKind::forest:
      model.payload = forest_fit(train_X, train_y, spec.forest, seed);
      break;
    case ModelKind::knn: {
      const int n = static_cast<int>(train_X.rows());
      const int k = spec.knn_k
                        ? *spec.knn_k
                        : select_k(train_X, train_y,
                                   default_k_candidates(train_X.rows()), n,
                                   seed);
      model.payload = knn_fit(train_X, train_y, k);
      break;
    }
  }
  return model;
}

namespace {

// Rethrows fit-time data errors with the method name prefixed, keeping the
// dynamic type so callers can still catch the specific condition.
template <typename Fn>
auto with_method_context(const std::string& name, Fn&& fn) {
  const auto tag = [&name](const char* what) { return name + ": " + what; };
  try {
    return fn();
  } catch (const SingularError& e) {
    throw SingularError(tag(e.what()));
  } catch (const InvalidKError& e) {
    throw InvalidKError(tag(e.what()));
  } catch (const InvalidFoldsError& e) {
    throw InvalidFoldsError(tag(e.what()));
  } catch (const WidthMismatchError& e) {
    throw WidthMismatchError(tag(e.what()));
  } catch (const LengthMismatchError& e) {
    throw LengthMismatchError(tag(e.what()));
  } catch (const EmptyError& e) {
    throw EmptyError(tag(e.what()));
  } catch (const DataError& e) {
    throw DataError(tag(e.what()));
  }
}

void append_int_or(std::string& out, const std::optional<int>& v,
                   const char* fallback) {
  if (v)
    out += std::to_string(*v);
  else
    out += fallback;
}

}  // namespace

std::string config_digest(const std::vector<MethodSpec>& methods,
                          std::uint64_t seed, double ratio) {
  std::string canon;
  for (const MethodSpec& m : methods) {
    if (!canon.empty()) canon += ';';
    canon += model_kind_name(m.kind);
    canon += '|';
    canon += m.name;
    switch (m.kind) {
      case ModelKind::linear:
        canon += "|eps=";
        canon += format_double(m.ridge_eps);
        break;
      case ModelKind::tree:
        canon += "|min_leaf=" + std::to_string(m.tree.min_samples_leaf) +
                 "|max_depth=";
        append_int_or(canon, m.tree.max_depth, "none");
        break;
      case ModelKind::forest:
        canon += "|trees=" + std::to_string(m.forest.n_trees) +
                 "|bootstrap=" + (m.forest.bootstrap ? "1" : "0") + "|mtry=";
        append_int_or(canon, m.forest.features_per_split, "auto");
        canon += "|min_leaf=" + std::to_string(m.forest.min_samples_leaf) +
                 "|max_depth=";
        append_int_or(canon, m.forest.max_depth, "none");
        break;
      case ModelKind::knn:
        canon += "|k=";
        append_int_or(canon, m.knn_k, "auto");
        break;
    }
  }
  canon += "|seed=" + std::to_string(seed);
  canon += "|ratio=" + format_double(ratio);

  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : canon) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, hash);
  return buf;
}

EvalReport run_comparison(const FeatureMatrix& X, const TargetVector& y,
                          const std::vector<MethodSpec>& methods,
                          std::uint64_t seed, double ratio) {
  if (methods.empty()) throw EmptyError("no methods requested");
  const PreparedData prepared = prepare_data(X, y, seed, ratio);

  EvalReport report;
  report.seed = seed;
  report.n_train = prepared.split.train.size();
  report.n_test = prepared.split.test.size();
  report.config_digest = config_digest(methods, seed, ratio);
  report.rows.reserve(methods.size());
  for (const MethodSpec& spec : methods) {
    const TargetVector preds = with_method_context(spec.name, [&] {
      const TrainedModel model = fit_method(
          spec, prepared.train_features, prepared.train_targets,
          prepared.params, seed);
      return predict(model, prepared.test_features);
    });
    EvalRow row;
    row.method_name = spec.name;
    row.mae = mae(prepared.test_targets, preds);
    row.rmspe = rmspe(prepared.test_targets, preds);
    report.rows.push_back(std::move(row));
  }
  return report;
}

EvalReport compare_models(const Dataset& ds,
                          const std::vector<MethodSpec>& methods,
                          std::uint64_t seed, double ratio) {
  const Encoded enc = encode_features(ds);
  if (!enc.targets)
    throw MissingTargetError("dataset has no gross_loss_pct values");
  return run_comparison(enc.features, *enc.targets, methods, seed, ratio);
}

std::string render_report_table(const EvalReport& report) {
  std::string out;
  char line[96];
  std::snprintf(line, sizeof line, "%-32s %9s %9s\n", "Method", "MAE",
                "RMSPE");
  out += line;
  for (const EvalRow& row : report.rows) {
    std::snprintf(line, sizeof line, "%-32s %9.4f %9.4f\n",
                  row.method_name.c_str(), row.mae, row.rmspe);
    out += line;
  }
  return out;
}

}  // namespace ringloss
