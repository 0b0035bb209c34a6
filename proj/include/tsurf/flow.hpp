#pragma once

#include <cstdint>
#include <vector>

#include "tsurf/surface.hpp"

namespace tsurf {

// Symbolic itinerary of a straight-line trajectory: the sequence of crossed
// edges. Consecutive symbols always bound a common triangle and never repeat
// (crossings are transverse, so the trajectory cannot re-cross its entry
// edge immediately).
struct Code {
    std::vector<EdgeLabel> symbols;
    long anchor = 0;  // index of the first symbol crossed at or after the start

    friend bool operator==(const Code&, const Code&) = default;
};

enum class TerminalKind : std::uint8_t { CrossingBudgetExhausted, HitSingularity, LeftWindow };

// Maximal straight piece of a trajectory inside one chart.
struct ChartSegment {
    Component comp;
    Vec2 from, to;
};

struct TraceResult {
    Code code;
    TriRef start_tri{};  // triangle the motion starts in (a containing one, for edge runs)
    TerminalKind terminal;
    VertexRef hit_vertex{};  // valid when terminal == HitSingularity
    Rational hit_time;       // exact ray parameter of the hit, same validity
    Rational elapsed;        // ray parameter consumed by the recorded segments
    Vec2 holonomy;           // sum of per-chart displacements
    SurfacePoint end;        // where the trace stopped, in its chart
    std::vector<ChartSegment> segments;
};

// Flows from start along the (nonzero, rational) direction, recording every
// crossed edge, until max_crossings symbols, a vertex hit, or the vertex
// window cap. Starts on an edge belong to the triangle ahead of the motion;
// motion along an edge runs straight into the forward endpoint.
TraceResult trace(const Surface& h, const SurfacePoint& start, const Vec2& direction,
                  long max_crossings);

// Flows out of a vertex. The direction must point into one of the angular
// sectors at the origin (or along an incident edge); otherwise
// no_sector_error. A HitSingularity terminal is a saddle connection.
TraceResult separatrix(const Surface& h, const VertexRef& origin, const Vec2& direction,
                       long max_crossings);

struct SaddleConnection {
    VertexRef start, end;
    int start_class, end_class;  // 0 = singularity class of vertex (+,0), 1 = the other
    Vec2 holonomy;
    Code code;

    friend bool operator==(const SaddleConnection&, const SaddleConnection&) = default;
};

// Scales a rational direction to its primitive integer representative.
Vec2 primitive_direction(const Vec2& d);

// Launches separatrices from every vertex with |k| <= launch_window in both
// +-direction, collects the singularity-to-singularity hits, canonicalizes
// each connection to nonnegative holonomy and deduplicates the two traversal
// senses. Results are sorted by (holonomy, start, code).
std::vector<SaddleConnection> find_saddle_connections(const Surface& h, const Vec2& direction,
                                                      long budget, long launch_window = 4);

}  // namespace tsurf
