#include "ringloss/schema.hpp"

#include <cctype>
#include <charconv>

namespace ringloss {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

MetalSpec parse_metal(std::string_view text) {
  const auto fail = [&] {
    throw ParseError("not a valid metal spec: \"" + std::string(text) +
                     "\" (expected \"<karat>k-<code>\", e.g. \"14k-WG\")");
  };

  const std::size_t dash = text.find('-');
  if (dash == std::string_view::npos || dash < 2) fail();

  const std::string_view karat_part = text.substr(0, dash - 1);
  const char k = text[dash - 1];
  if (k != 'k' && k != 'K') fail();

  int karat = 0;
  const auto [ptr, ec] =
      std::from_chars(karat_part.data(), karat_part.data() + karat_part.size(), karat);
  if (ec != std::errc() || ptr != karat_part.data() + karat_part.size()) fail();
  if (karat < 8 || karat > 24)
    throw ParseError("karat " + std::to_string(karat) + " out of range [8, 24] in \"" +
                     std::string(text) + "\"");

  const std::string code = upper(text.substr(dash + 1));
  for (std::size_t i = 0; i < kMetalCount; ++i)
    if (code == kMetalCodes[i]) return MetalSpec{karat, static_cast<Metal>(i)};
  throw ParseError("unknown metal code \"" + std::string(text.substr(dash + 1)) + "\"");
}

std::string format_metal(const MetalSpec& spec) {
  return std::to_string(spec.karat) + "k-" +
         std::string(kMetalCodes[static_cast<std::size_t>(spec.metal)]);
}

const std::array<ColumnDef, 26>& columns() {
  static const std::array<ColumnDef, 26> defs = {{
      {"volume_mm3", &RingRecord::volume_mm3},
      {"surface_area_mm2", &RingRecord::surface_area_mm2},
      {"metal", MetalField{}},
      {"weight_per_piece_g", &RingRecord::weight_per_piece_g},
      {"total_lot_quantity", &RingRecord::total_lot_quantity},
      {"total_weight_of_lot_g", &RingRecord::total_weight_of_lot_g},
      {"inner_diameter_mm", &RingRecord::inner_diameter_mm},
      {"outer_diameter_mm", &RingRecord::outer_diameter_mm},
      {"min_shank_thickness_mm", &RingRecord::min_shank_thickness_mm},
      {"max_shank_thickness_mm", &RingRecord::max_shank_thickness_mm},
      {"min_shank_width_mm", &RingRecord::min_shank_width_mm},
      {"max_shank_width_mm", &RingRecord::max_shank_width_mm},
      {"total_height_mm", &RingRecord::total_height_mm},
      {"top_height_mm", &RingRecord::top_height_mm},
      {"num_components", &RingRecord::num_components},
      {"num_rings", &RingRecord::num_rings},
      {"tone", &RingRecord::tone},
      {"true_miracle", &RingRecord::true_miracle},
      {"num_true_miracle", &RingRecord::num_true_miracle},
      {"diamonds_set", &RingRecord::diamonds_set},
      {"filigree", &RingRecord::filigree},
      {"j_back", &RingRecord::j_back},
      {"gallery", &RingRecord::gallery},
      {"fake_beads", &RingRecord::fake_beads},
      {"plating", &RingRecord::plating},
      {"gross_loss_pct", &RingRecord::gross_loss_pct},
  }};
  return defs;
}

std::vector<std::string> record_violations(const RingRecord& r) {
  std::vector<std::string> out;
  const auto positive = [&](const std::optional<double>& v, const char* name) {
    if (v && *v <= 0.0) out.push_back(std::string(name) + " must be > 0");
  };
  const auto at_least = [&](const std::optional<int>& v, int lo, const char* name) {
    if (v && *v < lo)
      out.push_back(std::string(name) + " must be >= " + std::to_string(lo));
  };

  positive(r.volume_mm3, "volume_mm3");
  positive(r.surface_area_mm2, "surface_area_mm2");
  positive(r.weight_per_piece_g, "weight_per_piece_g");
  positive(r.total_weight_of_lot_g, "total_weight_of_lot_g");
  at_least(r.total_lot_quantity, 1, "total_lot_quantity");
  at_least(r.num_components, 1, "num_components");
  at_least(r.num_rings, 1, "num_rings");
  at_least(r.num_true_miracle, 0, "num_true_miracle");
  at_least(r.diamonds_set, 0, "diamonds_set");
  at_least(r.fake_beads, 0, "fake_beads");

  if (r.tone && (*r.tone < 1 || *r.tone > 3)) out.push_back("tone must be 1, 2 or 3");

  if (r.inner_diameter_mm && r.outer_diameter_mm &&
      !(*r.inner_diameter_mm < *r.outer_diameter_mm))
    out.push_back("inner_diameter_mm must be less than outer_diameter_mm");
  if (r.min_shank_thickness_mm && r.max_shank_thickness_mm &&
      !(*r.min_shank_thickness_mm <= *r.max_shank_thickness_mm))
    out.push_back("min_shank_thickness_mm must not exceed max_shank_thickness_mm");
  if (r.min_shank_width_mm && r.max_shank_width_mm &&
      !(*r.min_shank_width_mm <= *r.max_shank_width_mm))
    out.push_back("min_shank_width_mm must not exceed max_shank_width_mm");
  if (r.top_height_mm && r.total_height_mm && !(*r.top_height_mm <= *r.total_height_mm))
    out.push_back("top_height_mm must not exceed total_height_mm");

  if (r.true_miracle && !*r.true_miracle && r.num_true_miracle && *r.num_true_miracle != 0)
    out.push_back("num_true_miracle must be 0 when true_miracle is 0");

  if (r.gross_loss_pct && (*r.gross_loss_pct < 0.0 || *r.gross_loss_pct >= 100.0))
    out.push_back("gross_loss_pct must lie in [0, 100)");

  return out;
}

}  // namespace ringloss
