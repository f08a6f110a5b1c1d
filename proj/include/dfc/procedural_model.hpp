#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dfc/morphable_model.hpp"

namespace dfc {

/// Options for the procedurally generated head model. The mesh is a
/// lat-long ellipsoid with nose/eye/mouth/chin protrusions; identity and
/// expression basis columns are smooth random displacement fields
/// (Gaussian-bump mixtures) orthogonalized against each other.
struct ProceduralModelOptions {
    int rings = 22;     // latitude rows between the poles
    int segments = 32;  // longitude divisions
    int identity_rank = 16;
    int expression_rank = 8;
    std::uint64_t seed = 1;
};

MorphableModel build_procedural_model(const ProceduralModelOptions& opts = {});

/// The 21 landmark names every evaluation-ready model must carry, in
/// canonical order.
const std::vector<std::string>& standard_landmark_names();

/// Contour landmarks (excluded by the visible-inner evaluation protocol).
bool is_contour_landmark(const std::string& name);

} // namespace dfc
