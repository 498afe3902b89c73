#include "ringloss/encode.hpp"

namespace ringloss {

namespace {

double cell_of_real(const std::optional<double>& v) {
  return v ? *v : missing_value();
}
double cell_of_int(const std::optional<int>& v) {
  return v ? static_cast<double>(*v) : missing_value();
}
double cell_of_bool(const std::optional<bool>& v) {
  return v ? (*v ? 1.0 : 0.0) : missing_value();
}

void encode_record(const RingRecord& r, FeatureMatrix& m, std::size_t i) {
  std::size_t j = 0;
  const auto put = [&](double v) { m.at(i, j++) = v; };

  put(cell_of_real(r.volume_mm3));
  put(cell_of_real(r.surface_area_mm2));
  put(static_cast<double>(r.metal.karat));
  for (std::size_t code = 0; code < kMetalCount; ++code)
    put(r.metal.metal == static_cast<Metal>(code) ? 1.0 : 0.0);
  put(cell_of_real(r.weight_per_piece_g));
  put(cell_of_int(r.total_lot_quantity));
  put(cell_of_real(r.total_weight_of_lot_g));
  put(cell_of_real(r.inner_diameter_mm));
  put(cell_of_real(r.outer_diameter_mm));
  put(cell_of_real(r.min_shank_thickness_mm));
  put(cell_of_real(r.max_shank_thickness_mm));
  put(cell_of_real(r.min_shank_width_mm));
  put(cell_of_real(r.max_shank_width_mm));
  put(cell_of_real(r.total_height_mm));
  put(cell_of_real(r.top_height_mm));
  put(cell_of_int(r.num_components));
  put(cell_of_int(r.num_rings));
  put(cell_of_int(r.tone));
  put(cell_of_bool(r.true_miracle));
  put(cell_of_int(r.num_true_miracle));
  put(cell_of_int(r.diamonds_set));
  put(cell_of_bool(r.filigree));
  put(cell_of_bool(r.j_back));
  put(cell_of_bool(r.gallery));
  put(cell_of_int(r.fake_beads));
  put(cell_of_bool(r.plating));
}

}  // namespace

const std::vector<std::string>& encoded_feature_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {"volume_mm3", "surface_area_mm2", "karat"};
    for (std::string_view code : kMetalCodes) n.push_back("metal_" + std::string(code));
    const std::vector<std::string> rest = {
        "weight_per_piece_g", "total_lot_quantity", "total_weight_of_lot_g",
        "inner_diameter_mm",  "outer_diameter_mm",  "min_shank_thickness_mm",
        "max_shank_thickness_mm", "min_shank_width_mm", "max_shank_width_mm",
        "total_height_mm",    "top_height_mm",      "num_components",
        "num_rings",          "tone",               "true_miracle",
        "num_true_miracle",   "diamonds_set",       "filigree",
        "j_back",             "gallery",            "fake_beads",
        "plating"};
    n.insert(n.end(), rest.begin(), rest.end());
    return n;
  }();
  return names;
}

FeatureMatrix encode_features_only(const Dataset& ds) {
  if (ds.records.empty()) throw EmptyError("cannot encode an empty dataset");
  FeatureMatrix m(ds.records.size(), encoded_feature_names());
  for (std::size_t i = 0; i < ds.records.size(); ++i) encode_record(ds.records[i], m, i);
  return m;
}

Encoded encode_features(const Dataset& ds) {
  Encoded out{encode_features_only(ds), std::nullopt};

  std::size_t with_target = 0;
  for (const RingRecord& r : ds.records)
    if (r.gross_loss_pct) ++with_target;
  if (with_target == ds.records.size()) {
    TargetVector y;
    y.reserve(ds.records.size());
    for (const RingRecord& r : ds.records) y.push_back(*r.gross_loss_pct);
    out.targets = std::move(y);
  } else if (with_target != 0) {
    throw MixedTargetError(std::to_string(with_target) + " of " +
                           std::to_string(ds.records.size()) +
                           " records have gross_loss_pct; expected all or none");
  }
  return out;
}

}  // namespace ringloss
