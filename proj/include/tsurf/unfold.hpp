#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsurf/flow.hpp"
#include "tsurf/group.hpp"
#include "tsurf/surface.hpp"

namespace tsurf {

struct DevelopedTriangle {
    TriRef ref;
    Vec2 offset;  // developed position = chart coordinates + offset
    std::array<Vec2, 3> corners;
};

// Shared edge between consecutive developed triangles, oriented so the next
// triangle in the chain lies to the right of top - bottom. Any direction that
// crosses the chain in order then sees `top` as its upper endpoint.
struct DevelopedSegment {
    EdgeLabel label;
    Vec2 bottom, top;
};

struct Development {
    Rational c;
    Vec2 direction;  // reference direction; (0,0) when unspecified
    std::vector<DevelopedTriangle> tris;
    std::vector<DevelopedSegment> segs;  // segs[j] joins tris[j] and tris[j+1]
};

// Lays the triangle chain of a code out in the plane of the start triangle's
// chart; chart transitions contribute translation offsets. Validates that
// every symbol is an edge of the running triangle and that the code never
// backtracks (malformed_code_error otherwise).
Development develop(const Surface& h, const TriRef& start, const Code& code,
                    const Vec2& direction = Vec2{0, 0});

// Open cone of directions that cross the developed segments in order.
// Bounded and nonempty cones are the strict directions between lower and
// upper (counterclockwise); a boundary ray is included (closed) exactly when
// only cross-segment constraints are tight there, i.e. the degenerate
// trajectory is a chain through cone points rather than parallel to a
// segment.
struct FeasibilityCone {
    bool nonempty = false;
    bool unconstrained = false;  // no segments: every direction crosses trivially
    Vec2 lower{}, upper{};
    bool closed_lower = false, closed_upper = false;

    bool contains(const Vec2& u) const;  // honest set membership, boundary per closed flags
    bool strictly_contains(const Vec2& u) const;
};

FeasibilityCone feasibility_cone(const Development& dev);

// The convex region V = { p in the developed union : height(p) in I } in the
// sheared frame where dev.direction is the positive x-axis. I is the open
// intersection of the segment height intervals. Certificates are computed
// exactly: convexity via turning signs, and the homeomorphism content via
// "the strip-clipped triangles tile V with pairwise disjoint interiors".
struct RegionV {
    Mat2 shear;  // developed frame -> sheared frame
    Rational lo, hi;
    std::vector<Vec2> polygon;  // CCW, sheared frame
    bool convex_certified = false;
    bool tiling_certified = false;
};

RegionV region_V(const Development& dev);

// Transplants a code (with its start label) onto the surface with parameter
// c_prime and reports whether some direction there realizes it.
struct CrossSurfaceReport {
    Rational c, c_prime;
    TriRef start;
    Code code;
    bool feasible = false;
    FeasibilityCone cone;
};

CrossSurfaceReport cross_surface_check(const TriRef& start, const Code& code, const Rational& c,
                                       const Rational& c_prime);

// Start anchor for cross-parameter code comparison: a vertex (separatrix
// start), the core curve of a horizontal cylinder, or a canonical scan over
// vertices near the origin for the first label present on both surfaces.
struct CompareStart {
    enum class Kind : std::uint8_t { Canonical, Vertex, CoreCurve } kind = Kind::Canonical;
    VertexRef vertex{};
    long cylinder = 1;
};

struct CompareReport {
    GroupWord word;
    Vec2 base;
    Rational c;
    Vec2 u_c, u_1;  // compared directions on S_c and S_1
    bool started = false;
    std::string note;  // why not started, or terminal mismatch details
    CompareStart start{};
    VertexRef start_vertex{};  // resolved anchor when started from a vertex
    TraceResult trace_c, trace_1;
    long common_prefix = 0;
    bool full_agreement = false;
};

// Traces the two directions phi_pair(word, base, c) from the same
// label-specified start on S_c and S_1 and compares the codes.
CompareReport directional_code_compare(const GroupWord& word, const Vec2& base, const Rational& c,
                                       const CompareStart& start, long max_crossings);

}  // namespace tsurf
