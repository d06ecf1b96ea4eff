#pragma once

#include <json.hpp>

#include "surgeon/family.hpp"
#include "surgeon/int_matrix.hpp"
#include "surgeon/laurent.hpp"
#include "surgeon/presentation.hpp"
#include "surgeon/slope.hpp"

namespace surgeon {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);

// [p, q], or null for unfilled.
Json slope_json(const Slope& s);
Slope slope_from_json(const Json& j);

Json group_json(const AbelianGroup& g);
// {"exponent": coefficient, ...}
Json laurent_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json region_json(const TwistRegion& r);
TwistRegion region_from_json(const Json& j);

// Diagram, when present, is stored as PD text with its regions.
Json presentation_json(const SurgeryPresentation& p);
SurgeryPresentation presentation_from_json(const Json& j);

// Array of {move, presentation, homology}.
Json trace_json(const Trace& t);

Json sheet_json(const ValidationSheet& s);
Json slope_derivation_json(const SlopeDerivation& s);
Json report_json(const EvidenceReport& r);

Json asset_json(const FamilyAsset& a);
FamilyAsset asset_from_json(const Json& j);

}  // namespace surgeon
