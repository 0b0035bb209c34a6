#pragma once

#include <string>

#include "tsurf/flow.hpp"
#include "tsurf/surface.hpp"

namespace tsurf {

// Deterministic SVG emitters. Both charts are drawn in natural coordinates
// (the reflected chart opens downward, touching the other at the origin),
// scaled by 30 with the y-axis flipped for screen space. All floats are
// rendered with three decimals, so equal inputs give byte-identical output.
std::string render_surface_svg(const Surface& h, long window);
std::string render_cylinders_svg(const Surface& h, DirectionKind direction, long count);
std::string render_geodesic_svg(const Surface& h, const TraceResult& result, long window);

}  // namespace tsurf
