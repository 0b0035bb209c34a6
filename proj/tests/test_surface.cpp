#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "tsurf/surface.hpp"

using namespace tsurf;

namespace {
Vec2 v2(long x, long y) { return {Rational(x), Rational(y)}; }
Rational q(long n, long d) { return {n, d}; }
}  // namespace

TEST_CASE("square-parameter vertices lie on the integer parabola") {
    Surface h(Rational(1));
    for (long k = -6; k <= 6; ++k) CHECK(h.vertex(k) == v2(k, k * k));
}

TEST_CASE("first vertices are parameter-independent") {
    for (const char* cs : {"1", "5/4", "2", "7/3"}) {
        Surface h(Rational::parse(cs));
        CHECK(h.vertex(0) == v2(0, 0));
        CHECK(h.vertex(1) == v2(1, 1));
        CHECK(h.vertex(-1) == v2(-1, 1));
    }
}

TEST_CASE("boundary map and its orbit at c = 5/4") {
    Surface h(q(5, 4));
    AffineMap t = h.boundary_map();
    CHECK(t.linear == Mat2{q(5, 4), q(1, 4), q(9, 4), q(5, 4)});
    CHECK(t.translation == v2(1, 1));
    CHECK(t(v2(1, 1)) == Vec2{q(5, 2), q(9, 2)});
    CHECK(h.vertex(2) == Vec2{q(5, 2), q(9, 2)});
    CHECK(h.vertex(3) == Vec2{q(21, 4), q(49, 4)});
}

TEST_CASE("coordinates satisfy the three-term recurrence") {
    // x_{k+1} = 2c x_k - x_{k-1};  y picks up the constant 2 from the
    // inhomogeneous part of the step map.
    for (const char* cs : {"1", "5/4", "7/3"}) {
        Rational c = Rational::parse(cs);
        Surface h(c);
        for (long k = -8; k <= 8; ++k) {
            CHECK(h.vertex(k + 1).x == Rational(2) * c * h.vertex(k).x - h.vertex(k - 1).x);
            CHECK(h.vertex(k + 1).y ==
                  Rational(2) * c * h.vertex(k).y - h.vertex(k - 1).y + Rational(2));
        }
    }
}

TEST_CASE("mirror and index-swap symmetries fix the vertex set") {
    for (const char* cs : {"1", "5/4", "2", "7/3"}) {
        Surface h(Rational::parse(cs));
        AffineMap r = h.reflection(), u = h.index_swap_symmetry();
        for (long k = -12; k <= 12; ++k) {
            CHECK(r(h.vertex(k)) == h.vertex(-k));
            CHECK(u(h.vertex(k)) == h.vertex(1 - k));
        }
        // both are involutions
        CHECK(compose(r, r).linear == Mat2::identity());
        CHECK(compose(u, u).linear == Mat2::identity());
        CHECK(compose(u, u).translation == v2(0, 0));
    }
}

TEST_CASE("vertex extension respects the hard window cap") {
    Surface h(Rational(1), 2, 8);
    CHECK(h.vertex(8) == v2(8, 64));
    CHECK(h.vertex(-8) == v2(-8, 64));
    CHECK_THROWS_AS(h.vertex(9), window_limit_error);
    CHECK(h.materialized_window() >= 8);
    CHECK_THROWS_AS(Surface(q(1, 2)), std::domain_error);   // c < 1
    CHECK_THROWS_AS(Surface(Rational(1), 9, 8), std::domain_error);
}

TEST_CASE("chord levels increase strictly from zero") {
    Surface h(q(5, 4));
    CHECK(h.chord_level(1) == Rational(0));
    for (long n = 1; n <= 10; ++n) CHECK(h.chord_level(n) < h.chord_level(n + 1));
}

TEST_CASE("gluing transfers are translations pairing the edge endpoints crosswise") {
    Surface h1(Rational(1));
    CHECK(h1.gluing_transfer(0).linear == Mat2::identity());
    CHECK(h1.gluing_transfer(0).translation == v2(-1, -1));
    CHECK(h1.gluing_transfer(-1).translation == v2(1, -1));
    for (const char* cs : {"1", "5/4", "2"}) {
        Surface h(Rational::parse(cs));
        for (long k = -3; k <= 3; ++k) {
            AffineMap g = h.gluing_transfer(k);
            CHECK(g.linear == Mat2::identity());
            CHECK(g(h.vertex(k)) == -h.vertex(k + 1));      // (+,k)   lands on (-,k+1)
            CHECK(g(h.vertex(k + 1)) == -h.vertex(k));      // (+,k+1) lands on (-,k)
        }
    }
}

TEST_CASE("triangle combinatorics: vertices, edges, neighbours") {
    TriRef r1{Component::Plus, 1, true}, l1{Component::Plus, 1, false};
    auto vr = tri_vertex_refs(r1);
    CHECK(vr[0] == VertexRef{Component::Plus, 0});
    CHECK(vr[1] == VertexRef{Component::Plus, 1});
    CHECK(vr[2] == VertexRef{Component::Plus, 2});
    auto vl = tri_vertex_refs(l1);
    CHECK(vl[0] == VertexRef{Component::Plus, 0});
    CHECK(vl[1] == VertexRef{Component::Plus, 2});
    CHECK(vl[2] == VertexRef{Component::Plus, -1});

    auto er = tri_edge_labels(r1);
    CHECK(er[0] == boundary_edge(0));
    CHECK(er[1] == boundary_edge(1));
    CHECK(er[2] == diagonal_edge(1, Component::Plus));
    auto el = tri_edge_labels(l1);
    CHECK(el[0] == diagonal_edge(1, Component::Plus));
    CHECK(el[1] == chord_edge(2, Component::Plus));
    CHECK(el[2] == boundary_edge(-1));

    CHECK(across(r1, diagonal_edge(1, Component::Plus)) == l1);
    CHECK(across(l1, diagonal_edge(1, Component::Plus)) == r1);
    CHECK(across(r1, boundary_edge(1)) == TriRef{Component::Minus, 1, true});
    CHECK(across(l1, chord_edge(2, Component::Plus)) == TriRef{Component::Plus, 2, true});

    TriRef r2{Component::Plus, 2, true};
    auto e2 = tri_edge_labels(r2);
    CHECK(e2[0] == chord_edge(2, Component::Plus));
    CHECK(e2[1] == boundary_edge(2));
    CHECK(e2[2] == diagonal_edge(2, Component::Plus));
}

TEST_CASE("incident triangles walk the corner sectors") {
    auto at0 = incident_triangles({Component::Plus, 0});
    REQUIRE(at0.size() == 2);
    CHECK(at0[0] == TriRef{Component::Plus, 1, true});
    CHECK(at0[1] == TriRef{Component::Plus, 1, false});
    auto at1 = incident_triangles({Component::Plus, 1});
    REQUIRE(at1.size() == 1);
    CHECK(at1[0] == TriRef{Component::Plus, 1, true});
    auto at2 = incident_triangles({Component::Minus, 2});
    REQUIRE(at2.size() == 3);
    CHECK(at2[0] == TriRef{Component::Minus, 1, true});
    CHECK(at2[1] == TriRef{Component::Minus, 1, false});
    CHECK(at2[2] == TriRef{Component::Minus, 2, true});
    auto atm1 = incident_triangles({Component::Plus, -1});
    REQUIRE(atm1.size() == 3);
    CHECK(atm1[0] == TriRef{Component::Plus, 1, false});
    CHECK(atm1[1] == TriRef{Component::Plus, 2, true});
    CHECK(atm1[2] == TriRef{Component::Plus, 2, false});
}

TEST_CASE("locate distinguishes interior, edge, vertex and outside") {
    Surface h(Rational(1));

    LocateResult in = h.locate({Component::Plus, {q(1, 2), q(3, 4)}});
    CHECK(in.kind == LocateResult::Kind::Interior);
    REQUIRE(in.tris.size() == 1);
    CHECK(in.tris[0] == TriRef{Component::Plus, 1, true});

    LocateResult in_l = h.locate({Component::Plus, {q(-1, 2), q(3, 4)}});
    CHECK(in_l.kind == LocateResult::Kind::Interior);
    CHECK(in_l.tris[0] == TriRef{Component::Plus, 1, false});

    LocateResult in_m = h.locate({Component::Minus, {q(-1, 2), q(-3, 4)}});
    CHECK(in_m.kind == LocateResult::Kind::Interior);
    CHECK(in_m.tris[0] == TriRef{Component::Minus, 1, true});

    LocateResult on_e0 = h.locate({Component::Plus, {q(1, 2), q(1, 2)}});
    CHECK(on_e0.kind == LocateResult::Kind::OnEdge);
    CHECK(on_e0.edge == boundary_edge(0));
    REQUIRE(on_e0.tris.size() == 2);
    CHECK(on_e0.tris[0] == TriRef{Component::Plus, 1, true});
    CHECK(on_e0.tris[1] == TriRef{Component::Minus, 1, true});

    LocateResult on_d1 = h.locate({Component::Plus, {Rational(1), Rational(2)}});
    CHECK(on_d1.kind == LocateResult::Kind::OnEdge);
    CHECK(on_d1.edge == diagonal_edge(1, Component::Plus));
    REQUIRE(on_d1.tris.size() == 2);
    CHECK(on_d1.tris[0] == TriRef{Component::Plus, 1, true});
    CHECK(on_d1.tris[1] == TriRef{Component::Plus, 1, false});

    LocateResult on_s2 = h.locate({Component::Plus, {q(1, 2), q(5, 2)}});
    CHECK(on_s2.kind == LocateResult::Kind::OnEdge);
    CHECK(on_s2.edge == chord_edge(2, Component::Plus));

    LocateResult at = h.locate({Component::Plus, {Rational(2), Rational(4)}});
    CHECK(at.kind == LocateResult::Kind::AtVertex);
    CHECK(at.vertex == VertexRef{Component::Plus, 2});
    LocateResult at_m = h.locate({Component::Minus, {Rational(-2), Rational(-4)}});
    CHECK(at_m.kind == LocateResult::Kind::AtVertex);
    CHECK(at_m.vertex == VertexRef{Component::Minus, 2});

    CHECK_THROWS_AS(h.locate({Component::Plus, {Rational(0), Rational(-1)}}), outside_surface_error);
    CHECK_THROWS_AS(h.locate({Component::Plus, {Rational(3), Rational(3)}}), outside_surface_error);
    CHECK_THROWS_AS(h.locate({Component::Minus, {q(1, 2), q(3, 4)}}), outside_surface_error);
}

TEST_CASE("two cone point classes, split by chart parity") {
    for (const char* cs : {"1", "5/4"}) {
        Surface h(Rational::parse(cs));
        for (long w = 1; w <= 6; ++w) {
            auto classes = h.singularity_classes(w);
            REQUIRE(classes.size() == 2);
            // class 0 is the one containing (+,0)
            bool found = false;
            for (const VertexRef& v : classes[0])
                if (v == VertexRef{Component::Plus, 0}) found = true;
            CHECK(found);
            for (std::size_t i = 0; i < 2; ++i) {
                bool plus_even = false;
                for (const VertexRef& v : classes[i])
                    if (v.comp == Component::Plus && v.k % 2 == 0) plus_even = true;
                for (const VertexRef& v : classes[i]) {
                    bool even = v.k % 2 == 0;
                    CHECK(((v.comp == Component::Plus) == plus_even) == even);
                }
            }
        }
    }
}

TEST_CASE("horizontal cylinder ladder at the square parameter") {
    Surface h(Rational(1));
    auto cyls = h.cylinders(DirectionKind::Horizontal, 3);
    REQUIRE(cyls.size() == 3);
    CHECK(cyls[0].area == Rational(2));
    CHECK(cyls[0].circumference_sq == Rational(4));
    CHECK(cyls[1].area == Rational(18));
    CHECK(cyls[1].circumference_sq == Rational(36));
    CHECK(cyls[2].area == Rational(50));
    for (const Cylinder& c : cyls) CHECK(c.modulus == q(1, 2));
}

TEST_CASE("slope-one cylinder ladder and moduli") {
    Surface h1(Rational(1));
    auto s1 = h1.cylinders(DirectionKind::SlopeOne, 2);
    CHECK(s1[0].area == Rational(8));
    CHECK(s1[0].circumference_sq == Rational(32));
    CHECK(s1[0].modulus == q(1, 4));
    CHECK(s1[1].modulus == q(1, 4));

    Surface h54(q(5, 4));
    auto s54 = h54.cylinders(DirectionKind::SlopeOne, 4);
    CHECK(s54[0].area == Rational(9));
    CHECK(s54[0].circumference_sq == q(81, 2));
    for (const Cylinder& c : s54) CHECK(c.modulus == q(2, 9));

    for (const char* cs : {"2", "7/3"}) {
        Rational c = Rational::parse(cs);
        Surface h(c);
        Rational expect = Rational(1) / (Rational(2) * c + Rational(2));
        for (const Cylinder& cyl : h.cylinders(DirectionKind::SlopeOne, 6))
            CHECK(cyl.modulus == expect);
    }
}

TEST_CASE("area-minimal cylinder signatures") {
    Surface h(Rational(1));
    CylinderSignature hor = h.smallest_cylinder_signature(DirectionKind::Horizontal);
    CHECK(hor.index == 1);
    CHECK(hor.area == Rational(2));
    CHECK(hor.boundary_cone_points == 2);
    CylinderSignature slo = h.smallest_cylinder_signature(DirectionKind::SlopeOne);
    CHECK(slo.index == 1);
    CHECK(slo.area == Rational(8));
    CHECK(slo.boundary_cone_points == 4);
}

TEST_CASE("triangulation lists every edge in the window once") {
    Surface h(q(5, 4));
    for (long w : {1L, 2L, 5L}) {
        auto edges = h.triangulation(w);
        CHECK(static_cast<long>(edges.size()) == 6 * w - 1);
        CHECK(std::is_sorted(edges.begin(), edges.end(),
                             [](const TriangulationEdge& a, const TriangulationEdge& b) {
                                 return a.label.kind < b.label.kind;
                             }));
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) CHECK(!(edges[i].label == edges[i + 1].label));
    }
}
