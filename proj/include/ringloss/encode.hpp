#pragma once

#include <optional>

#include "ringloss/matrix.hpp"
#include "ringloss/schema.hpp"

namespace ringloss {

// Numeric encoding of the ring schema, fixed column order:
//
//   volume_mm3, surface_area_mm2,
//   karat, metal_WG, metal_YG, metal_PG, metal_SV, metal_PT, metal_PD,
//   then the remaining attributes in schema order (integers and tone as
//   plain numerics, flags as 0/1).
//
// 18 numeric pass-throughs + tone + 5 flags + karat + 6 one-hot = 31 columns.
// Row i depends on record i alone; MISSING fields become MISSING cells.
inline constexpr std::size_t kEncodedWidth = 31;

const std::vector<std::string>& encoded_feature_names();

struct Encoded {
  FeatureMatrix features;
  std::optional<TargetVector> targets;
};

// Targets are returned iff every record has gross_loss_pct; a mixture of
// present and absent targets raises MixedTargetError. EmptyError on an
// empty dataset.
Encoded encode_features(const Dataset& ds);

// Same feature encoding, but never inspects gross_loss_pct at all (the
// prediction path must be a pure function of the 25 attributes).
FeatureMatrix encode_features_only(const Dataset& ds);

}  // namespace ringloss
