#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "tsurf/errors.hpp"
#include "tsurf/flow.hpp"
#include "tsurf/unfold.hpp"

using namespace tsurf;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }
Vec2 v2(long x, long y) { return {Rational(x), Rational(y)}; }

Code make_code(std::vector<EdgeLabel> syms) {
    Code c;
    c.symbols = std::move(syms);
    return c;
}

// The vertical itinerary out of trapezoid 1: alternating diagonals and chords.
Code staircase_code() {
    return make_code({diagonal_edge(1, Component::Plus), chord_edge(2, Component::Plus),
                      diagonal_edge(2, Component::Plus), chord_edge(3, Component::Plus)});
}

const TriRef kR1Plus{Component::Plus, 1, true};

}  // namespace

TEST_CASE("develop lays a glued boundary crossing out by a translation") {
    Surface h(q(1));
    Development dev = develop(h, kR1Plus, make_code({boundary_edge(0)}));

    CHECK(dev.c == q(1));
    CHECK(dev.direction == Vec2{q(0), q(0)});
    REQUIRE(dev.tris.size() == 2);
    REQUIRE(dev.segs.size() == 1);

    CHECK(dev.tris[0].ref == kR1Plus);
    CHECK(dev.tris[0].offset == v2(0, 0));
    CHECK(dev.tris[0].corners[0] == v2(0, 0));
    CHECK(dev.tris[0].corners[1] == v2(1, 1));
    CHECK(dev.tris[0].corners[2] == v2(2, 4));

    // Crossing e_0 out of the plus chart shifts the minus chart by P_0 + P_1.
    CHECK(dev.tris[1].ref == TriRef{Component::Minus, 1, true});
    CHECK(dev.tris[1].offset == v2(1, 1));
    CHECK(dev.tris[1].corners[0] == v2(1, 1));
    CHECK(dev.tris[1].corners[1] == v2(0, 0));
    CHECK(dev.tris[1].corners[2] == v2(-1, -3));

    // The next triangle sits to the right of top - bottom.
    CHECK(dev.segs[0].label == boundary_edge(0));
    CHECK(dev.segs[0].bottom == v2(0, 0));
    CHECK(dev.segs[0].top == v2(1, 1));
}

TEST_CASE("develop keeps a single-chart itinerary at zero offset") {
    Surface h(q(1));
    Development dev = develop(h, kR1Plus, staircase_code(), v2(0, 1));

    CHECK(dev.direction == v2(0, 1));
    REQUIRE(dev.tris.size() == 5);
    REQUIRE(dev.segs.size() == 4);
    for (const DevelopedTriangle& t : dev.tris) CHECK(t.offset == v2(0, 0));
    CHECK(dev.tris[1].ref == TriRef{Component::Plus, 1, false});
    CHECK(dev.tris[2].ref == TriRef{Component::Plus, 2, true});
    CHECK(dev.tris[3].ref == TriRef{Component::Plus, 2, false});
    CHECK(dev.tris[4].ref == TriRef{Component::Plus, 3, true});

    // Every shared edge is oriented with the upcoming triangle on its right.
    CHECK(dev.segs[0].bottom == v2(2, 4));
    CHECK(dev.segs[0].top == v2(0, 0));
    CHECK(dev.segs[1].bottom == v2(2, 4));
    CHECK(dev.segs[1].top == v2(-1, 1));
    CHECK(dev.segs[2].bottom == v2(3, 9));
    CHECK(dev.segs[2].top == v2(-1, 1));
    CHECK(dev.segs[3].bottom == v2(3, 9));
    CHECK(dev.segs[3].top == v2(-2, 4));
}

TEST_CASE("develop rejects malformed itineraries") {
    Surface h(q(1));
    // Immediate re-crossing of the entry edge.
    CHECK_THROWS_AS(
        develop(h, kR1Plus,
                make_code({diagonal_edge(1, Component::Plus), diagonal_edge(1, Component::Plus)})),
        malformed_code_error);
    // e_5 is not an edge of trapezoid 1's right triangle.
    CHECK_THROWS_AS(develop(h, kR1Plus, make_code({boundary_edge(5)})), malformed_code_error);
    // After d_1 the itinerary sits in the left triangle, which has no e_0.
    CHECK_THROWS_AS(
        develop(h, kR1Plus, make_code({diagonal_edge(1, Component::Plus), boundary_edge(0)})),
        malformed_code_error);
}

TEST_CASE("empty itineraries leave the direction cone unconstrained") {
    Surface h(q(1));
    FeasibilityCone cone = feasibility_cone(develop(h, kR1Plus, Code{}));
    CHECK(cone.nonempty);
    CHECK(cone.unconstrained);
    CHECK(cone.contains(v2(1, 0)));
    CHECK(cone.contains(v2(0, 1)));
    CHECK(cone.contains(v2(-3, -7)));
    CHECK(cone.strictly_contains(v2(5, -1)));
    CHECK_FALSE(cone.contains(v2(0, 0)));
}

TEST_CASE("a single crossing constrains directions to an open half-plane") {
    Surface h(q(1));
    FeasibilityCone cone =
        feasibility_cone(develop(h, kR1Plus, make_code({diagonal_edge(1, Component::Plus)})));

    CHECK(cone.nonempty);
    CHECK_FALSE(cone.unconstrained);
    CHECK(cone.lower == v2(2, 4));
    CHECK(cone.upper == v2(-2, -4));
    // Both boundary rays run parallel to the crossed edge, so neither closes.
    CHECK_FALSE(cone.closed_lower);
    CHECK_FALSE(cone.closed_upper);

    CHECK(cone.strictly_contains(v2(0, 1)));
    CHECK(cone.strictly_contains(v2(-1, -1)));
    CHECK(cone.strictly_contains(v2(-1, 0)));
    CHECK_FALSE(cone.contains(v2(1, 0)));
    CHECK_FALSE(cone.contains(v2(1, 2)));    // parallel to the lower ray
    CHECK_FALSE(cone.contains(v2(-1, -2)));  // parallel to the upper ray
}

TEST_CASE("the staircase cone folds four crossings into one angular interval") {
    Surface h(q(1));
    FeasibilityCone cone = feasibility_cone(develop(h, kR1Plus, staircase_code()));

    CHECK(cone.nonempty);
    CHECK_FALSE(cone.unconstrained);
    // Binding pairs: top of d_1 against bottom of d_2 and top of s_3 against
    // bottom of d_1, i.e. the lines P_0 P_3 and P_-2 P_2.
    CHECK(cone.lower == v2(3, 9));
    CHECK(cone.upper == v2(-4, 0));
    // Both degenerate trajectories pass through cone points, not along edges.
    CHECK(cone.closed_lower);
    CHECK(cone.closed_upper);

    CHECK(cone.strictly_contains(v2(0, 1)));
    CHECK(cone.strictly_contains(v2(-1, 1)));
    CHECK(cone.contains(v2(1, 3)));
    CHECK_FALSE(cone.strictly_contains(v2(1, 3)));
    CHECK(cone.contains(v2(-1, 0)));
    CHECK_FALSE(cone.strictly_contains(v2(-1, 0)));
    CHECK_FALSE(cone.contains(v2(1, 0)));
    CHECK_FALSE(cone.contains(v2(0, -1)));
    CHECK_FALSE(cone.contains(v2(1, 2)));
    CHECK_FALSE(cone.contains(v2(1, 1)));
}

TEST_CASE("a corrupted tail symbol expels the vertical from the cone") {
    Surface h(q(1));
    // Swap the final chord for the boundary edge of the same left triangle.
    Code mutant = make_code({diagonal_edge(1, Component::Plus), chord_edge(2, Component::Plus),
                             diagonal_edge(2, Component::Plus), boundary_edge(-2)});
    Development dev = develop(h, kR1Plus, mutant);  // still a legal chain
    REQUIRE(dev.segs.size() == 4);
    FeasibilityCone cone = feasibility_cone(dev);
    // The mutant is realizable, but only by directions that bend away from
    // the vertical the original itinerary came from.
    CHECK(cone.nonempty);
    CHECK_FALSE(cone.contains(v2(0, 1)));
    CHECK(cone.strictly_contains(v2(-1, 0)));
}

TEST_CASE("region of constant itinerary: single triangle") {
    Surface h(q(1));
    RegionV rv = region_V(develop(h, kR1Plus, Code{}, v2(1, 0)));
    CHECK(rv.lo == q(0));
    CHECK(rv.hi == q(4));
    REQUIRE(rv.polygon.size() == 3);
    CHECK(rv.convex_certified);
    CHECK(rv.tiling_certified);
}

TEST_CASE("region of constant itinerary: staircase strip") {
    Surface h(q(1));
    RegionV rv = region_V(develop(h, kR1Plus, staircase_code(), v2(0, 1)));

    // Quarter-turn shear: heights are -x, and the crossing intervals pin the
    // strip to -2 < -x < 0.
    CHECK(rv.shear == Mat2{q(0), q(1), q(-1), q(0)});
    CHECK(rv.lo == q(-2));
    CHECK(rv.hi == q(0));
    CHECK(rv.lo < q(-1, 2));  // the trace from x = 1/2 sits inside the strip
    CHECK(q(-1, 2) < rv.hi);
    CHECK(rv.polygon.size() >= 3);
    CHECK(rv.convex_certified);
    CHECK(rv.tiling_certified);
}

TEST_CASE("region degenerates when the direction fights the itinerary") {
    Surface h(q(1));
    Development dev = develop(h, kR1Plus, staircase_code(), v2(1, 0));
    try {
        region_V(dev);
        FAIL("expected the height interval to collapse");
    } catch (const degenerate_interval_error& e) {
        CHECK(e.lo == q(4));
        CHECK(e.hi == q(4));
    }
    // Without a reference direction there is no sheared frame at all.
    CHECK_THROWS_AS(region_V(develop(h, kR1Plus, staircase_code())), std::domain_error);
}

TEST_CASE("itineraries transplant across the parameter family") {
    CrossSurfaceReport rep = cross_surface_check(kR1Plus, staircase_code(), q(1), q(5, 4));
    CHECK(rep.c == q(1));
    CHECK(rep.c_prime == q(5, 4));
    CHECK(rep.feasible);
    CHECK(rep.cone.contains(v2(0, 1)));

    // And back down again.
    CHECK(cross_surface_check(kR1Plus, staircase_code(), q(5, 4), q(1)).feasible);

    // A backtracking code fails to develop anywhere; that is a verdict, not an error.
    Code bad = make_code({diagonal_edge(1, Component::Plus), diagonal_edge(1, Component::Plus)});
    CHECK_FALSE(cross_surface_check(kR1Plus, bad, q(1), q(5, 4)).feasible);
}

TEST_CASE("code comparison: parameter-independent word traced on both surfaces") {
    GroupWord d = parse_word("BA");
    CompareReport rep = directional_code_compare(d, v2(1, 1), q(2), CompareStart{}, 100);

    CHECK(rep.u_c == v2(3, 1));
    CHECK(rep.u_1 == v2(3, 1));
    REQUIRE(rep.started);
    CHECK(rep.start_vertex == VertexRef{Component::Minus, 1});

    std::vector<EdgeLabel> want{diagonal_edge(1, Component::Minus), boundary_edge(-1),
                                diagonal_edge(1, Component::Plus)};
    CHECK(rep.trace_c.code.symbols == want);
    CHECK(rep.trace_1.code.symbols == want);
    CHECK(rep.common_prefix == 3);
    CHECK(rep.full_agreement);
    CHECK(rep.trace_c.terminal == TerminalKind::HitSingularity);
    CHECK(rep.trace_c.hit_vertex == rep.trace_1.hit_vertex);
}

TEST_CASE("code comparison: edge-parallel directions agree along the shared diagonal") {
    GroupWord e = parse_word("-CB");
    CompareReport rep = directional_code_compare(e, v2(1, 0), q(5, 4), CompareStart{}, 100);

    CHECK(rep.u_c == Vec2{q(-5, 4), q(-9, 4)});
    CHECK(rep.u_1 == v2(-1, -2));
    REQUIRE(rep.started);
    CHECK(rep.start_vertex == VertexRef{Component::Minus, 0});
    CHECK(rep.trace_c.code.symbols.empty());
    CHECK(rep.trace_1.code.symbols.empty());
    CHECK(rep.common_prefix == 0);
    CHECK(rep.full_agreement);
    CHECK(rep.trace_c.terminal == TerminalKind::HitSingularity);
    CHECK(rep.trace_c.hit_vertex == VertexRef{Component::Minus, 2});
    CHECK(rep.trace_1.hit_vertex == VertexRef{Component::Minus, 2});
}

TEST_CASE("code comparison: canonical scan finds the horizontal separatrix") {
    CompareReport rep =
        directional_code_compare(GroupWord{}, v2(1, 0), q(7, 3), CompareStart{}, 50);
    REQUIRE(rep.started);
    CHECK(rep.start_vertex == VertexRef{Component::Minus, 1});
    std::vector<EdgeLabel> want{diagonal_edge(1, Component::Minus)};
    CHECK(rep.trace_c.code.symbols == want);
    CHECK(rep.trace_1.code.symbols == want);
    CHECK(rep.full_agreement);
    CHECK(rep.trace_c.hit_vertex == VertexRef{Component::Minus, -1});
    CHECK(rep.trace_c.holonomy == v2(2, 0));
    CHECK(rep.trace_1.holonomy == v2(2, 0));
}

TEST_CASE("code comparison: core-curve anchor runs around the first cylinder") {
    CompareStart start;
    start.kind = CompareStart::Kind::CoreCurve;
    start.cylinder = 1;
    CompareReport rep = directional_code_compare(GroupWord{}, v2(1, 0), q(2), start, 12);

    REQUIRE(rep.started);
    CHECK(rep.note.empty());
    CHECK(rep.common_prefix == 12);
    CHECK(rep.full_agreement);
    CHECK(rep.trace_c.terminal == TerminalKind::CrossingBudgetExhausted);
    CHECK(rep.trace_1.terminal == TerminalKind::CrossingBudgetExhausted);

    std::vector<EdgeLabel> period{diagonal_edge(1, Component::Plus), boundary_edge(0),
                                  diagonal_edge(1, Component::Minus), boundary_edge(-1)};
    std::vector<EdgeLabel> want;
    for (int rep3 = 0; rep3 < 3; ++rep3) want.insert(want.end(), period.begin(), period.end());
    CHECK(rep.trace_c.code.symbols == want);
    CHECK(rep.trace_1.code.symbols == want);
}

TEST_CASE("code comparison: vertex anchors honor the sector test") {
    CompareStart at_plus1;
    at_plus1.kind = CompareStart::Kind::Vertex;
    at_plus1.vertex = VertexRef{Component::Plus, 1};
    // The central involution turns the base around: both compared directions
    // are (-1,0), which points into the sector at vertex 1.
    CompareReport rep =
        directional_code_compare(parse_word("-"), v2(1, 0), q(5, 4), at_plus1, 50);
    REQUIRE(rep.started);
    CHECK(rep.start_vertex == VertexRef{Component::Plus, 1});
    std::vector<EdgeLabel> want{diagonal_edge(1, Component::Plus)};
    CHECK(rep.trace_c.code.symbols == want);
    CHECK(rep.full_agreement);
    CHECK(rep.trace_c.hit_vertex == VertexRef{Component::Plus, -1});

    CompareStart at_origin;
    at_origin.kind = CompareStart::Kind::Vertex;
    at_origin.vertex = VertexRef{Component::Plus, 0};
    CompareReport none =
        directional_code_compare(GroupWord{}, v2(1, 0), q(5, 4), at_origin, 50);
    CHECK_FALSE(none.started);
    CHECK(none.note == "direction points into no sector at (+,0)");
}
