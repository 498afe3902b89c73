#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringloss/errors.hpp"

namespace ringloss {

// Ring dataset schema.
//
// A dataset is a CSV file with the canonical 26-column header below
// (case-sensitive, matched by name, any column order accepted):
//
//   volume_mm3, surface_area_mm2, metal, weight_per_piece_g,
//   total_lot_quantity, total_weight_of_lot_g, inner_diameter_mm,
//   outer_diameter_mm, min_shank_thickness_mm, max_shank_thickness_mm,
//   min_shank_width_mm, max_shank_width_mm, total_height_mm, top_height_mm,
//   num_components, num_rings, tone, true_miracle, num_true_miracle,
//   diamonds_set, filigree, j_back, gallery, fake_beads, plating,
//   gross_loss_pct
//
// gross_loss_pct is the regression target (percent of lot metal weight lost
// during manufacturing) and the only column that may be absent; files meant
// for prediction omit it. Empty numeric cells mean MISSING. The metal cell
// uses the form "<karat>k-<code>" (e.g. "14k-WG") and must be present.
// Boolean cells are exactly "0" or "1".

enum class Metal { WG, YG, PG, SV, PT, PD };

inline constexpr std::size_t kMetalCount = 6;
inline constexpr std::array<std::string_view, kMetalCount> kMetalCodes = {
    "WG", "YG", "PG", "SV", "PT", "PD"};

struct MetalSpec {
  int karat = 0;  // caratage of fineness, 8..24
  Metal metal = Metal::WG;

  bool operator==(const MetalSpec&) const = default;
};

// Accepts "<karat>k-<code>", case-insensitive, karat in [8, 24], code one of
// WG YG PG SV PT PD. Anything else raises ParseError.
MetalSpec parse_metal(std::string_view text);

// Canonical form: lower-case k, upper-case code, no leading zeros.
std::string format_metal(const MetalSpec& spec);

// One ring's CAD and production attributes. Every field except `metal`
// may be MISSING (empty CSV cell); gross_loss_pct is absent on
// prediction-time records.
struct RingRecord {
  std::optional<double> volume_mm3;
  std::optional<double> surface_area_mm2;
  MetalSpec metal;
  std::optional<double> weight_per_piece_g;
  std::optional<int> total_lot_quantity;
  std::optional<double> total_weight_of_lot_g;
  std::optional<double> inner_diameter_mm;
  std::optional<double> outer_diameter_mm;
  std::optional<double> min_shank_thickness_mm;
  std::optional<double> max_shank_thickness_mm;
  std::optional<double> min_shank_width_mm;
  std::optional<double> max_shank_width_mm;
  std::optional<double> total_height_mm;
  std::optional<double> top_height_mm;
  std::optional<int> num_components;
  std::optional<int> num_rings;
  std::optional<int> tone;                 // count of metal colours, 1/2/3
  std::optional<bool> true_miracle;
  std::optional<int> num_true_miracle;
  std::optional<int> diamonds_set;         // handset + wax set, one count
  std::optional<bool> filigree;
  std::optional<bool> j_back;
  std::optional<bool> gallery;
  std::optional<int> fake_beads;
  std::optional<bool> plating;
  std::optional<double> gross_loss_pct;    // regression target

  bool operator==(const RingRecord&) const = default;
};

struct Dataset {
  std::vector<RingRecord> records;  // exactly CSV row order
  std::string source_name;
  int schema_version = 1;
  bool has_target_column = false;   // whether gross_loss_pct appeared in the header
};

// ---- column table -----------------------------------------------------

using RealField = std::optional<double> RingRecord::*;
using IntField = std::optional<int> RingRecord::*;
using BoolField = std::optional<bool> RingRecord::*;
struct MetalField {};

struct ColumnDef {
  std::string_view name;
  std::variant<RealField, IntField, BoolField, MetalField> field;
};

// The canonical header, in order. Index kTargetColumn is gross_loss_pct.
const std::array<ColumnDef, 26>& columns();
inline constexpr std::size_t kTargetColumn = 25;

// Value-level checks that are not parse errors: positivity and count bounds,
// tone in {1,2,3}, diameter/shank/height orderings, the true-miracle count
// rule, and gross loss in [0, 100). Returns one message per violation;
// empty means the record is clean.
std::vector<std::string> record_violations(const RingRecord& record);

}  // namespace ringloss
