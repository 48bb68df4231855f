#pragma once

#include "kirwan/weightlat.hpp"

#include <set>
#include <string>

namespace kirwan {

// SVG 1.1 rendering of the weight diagram: filled nodes for the weights,
// circled nodes for the index set, shaded chamber cone, axes. All geometry
// is computed exactly and only formatted to fixed precision on output.
std::string diagram_svg(const WeightSystem& ws, const ChamberDesc& chamber,
                        const std::set<Weight>& index);

} // namespace kirwan
