#include "tsurf/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tsurf {

std::string vertex_ref_str(const VertexRef& v) {
    return std::string("(") + component_char(v.comp) + "," + std::to_string(v.k) + ")";
}

std::string edge_str(const EdgeLabel& e) {
    switch (e.kind) {
        case EdgeKind::Boundary: return "e" + std::to_string(e.n);
        case EdgeKind::Chord: return "s" + std::to_string(e.n) + component_char(e.comp);
        case EdgeKind::Diagonal: return "d" + std::to_string(e.n) + component_char(e.comp);
    }
    return "?";
}

std::string tri_str(const TriRef& t) {
    return std::string(t.right ? "R" : "L") + std::to_string(t.n) + component_char(t.comp);
}

std::array<VertexRef, 3> tri_vertex_refs(const TriRef& t) {
    if (t.right) return {VertexRef{t.comp, 1 - t.n}, {t.comp, t.n}, {t.comp, t.n + 1}};
    return {VertexRef{t.comp, 1 - t.n}, {t.comp, t.n + 1}, {t.comp, -t.n}};
}

std::array<EdgeLabel, 3> tri_edge_labels(const TriRef& t) {
    if (t.right) {
        EdgeLabel low = t.n == 1 ? boundary_edge(0) : chord_edge(t.n, t.comp);
        return {low, boundary_edge(t.n), diagonal_edge(t.n, t.comp)};
    }
    return {diagonal_edge(t.n, t.comp), chord_edge(t.n + 1, t.comp), boundary_edge(-t.n)};
}

std::pair<TriRef, TriRef> edge_sides(const EdgeLabel& e) {
    switch (e.kind) {
        case EdgeKind::Boundary: {
            long n = e.n >= 1 ? e.n : (e.n == 0 ? 1 : -e.n);
            bool right = e.n >= 0;
            return {TriRef{Component::Plus, n, right}, TriRef{Component::Minus, n, right}};
        }
        case EdgeKind::Chord:
            return {TriRef{e.comp, e.n - 1, false}, TriRef{e.comp, e.n, true}};
        case EdgeKind::Diagonal:
            return {TriRef{e.comp, e.n, true}, TriRef{e.comp, e.n, false}};
    }
    throw std::logic_error("edge_sides: bad kind");
}

int edge_index_in(const TriRef& t, const EdgeLabel& e) {
    auto labels = tri_edge_labels(t);
    for (int i = 0; i < 3; ++i)
        if (labels[i] == e) return i;
    return -1;
}

TriRef across(const TriRef& from, const EdgeLabel& e) {
    auto [a, b] = edge_sides(e);
    if (e.kind == EdgeKind::Boundary) {
        // Boundary sides differ only in component.
        if (from.n != a.n || from.right != a.right)
            throw malformed_code_error("edge " + edge_str(e) + " is not incident to " + tri_str(from));
        return from.comp == Component::Plus ? b : a;
    }
    if (from == a) return b;
    if (from == b) return a;
    throw malformed_code_error("edge " + edge_str(e) + " is not incident to " + tri_str(from));
}

std::vector<TriRef> incident_triangles(const VertexRef& v) {
    const Component c = v.comp;
    if (v.k == 0) return {TriRef{c, 1, true}, {c, 1, false}};
    if (v.k == 1) return {TriRef{c, 1, true}};
    if (v.k >= 2) return {TriRef{c, v.k - 1, true}, {c, v.k - 1, false}, {c, v.k, true}};
    long m = -v.k;
    return {TriRef{c, m, false}, {c, m + 1, true}, {c, m + 1, false}};
}

std::pair<VertexRef, VertexRef> edge_endpoint_refs(const EdgeLabel& e, Component chart) {
    switch (e.kind) {
        case EdgeKind::Boundary: return {VertexRef{chart, e.n}, {chart, e.n + 1}};
        case EdgeKind::Chord: return {VertexRef{e.comp, 1 - e.n}, {e.comp, e.n}};
        case EdgeKind::Diagonal: return {VertexRef{e.comp, 1 - e.n}, {e.comp, e.n + 1}};
    }
    throw std::logic_error("edge_endpoint_refs: bad kind");
}

Surface::Surface(Rational c, long initial_window, long max_window)
    : c_(std::move(c)), max_window_(max_window) {
    if (c_ < Rational(1)) throw std::domain_error("surface: parameter must be >= 1");
    if (initial_window < 0 || max_window_ < 1 || initial_window > max_window_)
        throw std::domain_error("surface: bad window bounds");
    Rational cm1 = c_ - 1, cp1 = c_ + 1;
    step_ = {Mat2{c_, cm1, cp1, c_}, Vec2{1, 1}};
    step_inv_ = inverse(step_);
    pos_.push_back(Vec2{0, 0});
    neg_.push_back(Vec2{0, 0});
    std::lock_guard<std::mutex> lock(cache_mu_);
    extend_to(initial_window);
    extend_to(-initial_window);
}

Surface build_surface(Rational c, long initial_window, long max_window) {
    return Surface(std::move(c), initial_window, max_window);
}

void Surface::extend_to(long k) const {
    if (k >= 0) {
        while (static_cast<long>(pos_.size()) <= k) pos_.push_back(step_(pos_.back()));
    } else {
        while (static_cast<long>(neg_.size()) <= -k) neg_.push_back(step_inv_(neg_.back()));
    }
}

long Surface::materialized_window() const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    return std::min<long>(pos_.size(), neg_.size()) - 1;
}

Vec2 Surface::vertex(long k) const {
    long a = k >= 0 ? k : -k;
    if (a > max_window_) throw window_limit_error(k);
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto& side = k >= 0 ? pos_ : neg_;
    if (static_cast<long>(side.size()) <= a) {
        // Grow geometrically so repeated small extensions stay amortized.
        long target = std::min(std::max(2 * (static_cast<long>(side.size()) - 1), a), max_window_);
        extend_to(k >= 0 ? target : -target);
    }
    return side[a];
}

Vec2 Surface::vertex_point(const VertexRef& v) const {
    Vec2 p = vertex(v.k);
    return v.comp == Component::Plus ? p : -p;
}

AffineMap Surface::reflection() const {
    return {Mat2{-1, 0, 0, 1}, Vec2{0, 0}};
}

AffineMap Surface::index_swap_symmetry() const {
    return {Mat2{-c_, c_ - 1, -(c_ + 1), c_}, Vec2{1, 1}};
}

AffineMap Surface::gluing_transfer(long k) const {
    return {Mat2::identity(), -(vertex(k) + vertex(k + 1))};
}

Rational Surface::chord_level(long n) const {
    if (n < 1) throw std::domain_error("chord_level: n must be >= 1");
    Vec2 p = vertex(n);
    return p.y - p.x;
}

std::array<Vec2, 3> Surface::tri_coords(const TriRef& t) const {
    auto refs = tri_vertex_refs(t);
    return {vertex_point(refs[0]), vertex_point(refs[1]), vertex_point(refs[2])};
}

std::pair<Vec2, Vec2> Surface::edge_coords(const EdgeLabel& e, Component chart) const {
    if (e.kind != EdgeKind::Boundary && chart != e.comp)
        throw std::logic_error("edge_coords: edge lives in the other component");
    auto [a, b] = edge_endpoint_refs(e, chart);
    return {vertex_point(a), vertex_point(b)};
}

LocateResult Surface::locate(const SurfacePoint& p) const {
    const Component comp = p.comp;
    Vec2 q = comp == Component::Plus ? p.pos : -p.pos;
    Rational lam = q.y - q.x;
    if (lam.sign() < 0) throw outside_surface_error("point below the boundary hull");

    auto at_vertex = [&](long k) {
        LocateResult r;
        r.kind = LocateResult::Kind::AtVertex;
        r.vertex = {comp, k};
        for (const TriRef& t : incident_triangles(r.vertex)) r.tris.push_back(t);
        return r;
    };
    auto on_edge = [&](EdgeLabel e) {
        LocateResult r;
        r.kind = LocateResult::Kind::OnEdge;
        e.comp = e.kind == EdgeKind::Boundary ? Component::Plus : comp;
        r.edge = e;
        auto [s0, s1] = edge_sides(r.edge);
        if (e.kind == EdgeKind::Boundary) {
            // Same-chart side first.
            TriRef near = comp == Component::Plus ? s0 : s1;
            r.tris = {near, across(near, r.edge)};
        } else {
            r.tris = {s0, s1};
        }
        return r;
    };

    // Chord levels increase with n; find the slope-one band containing lam.
    if (lam.sign() == 0) {
        // Level of the degenerate chord: the glued edge through vertices 0 and 1.
        if (q == vertex(0)) return at_vertex(0);
        if (q == vertex(1)) return at_vertex(1);
        if (q.x > Rational(0) && q.x < vertex(1).x) return on_edge(boundary_edge(0));
        throw outside_surface_error("point below the boundary hull");
    }
    long n = 1;
    while (chord_level(n + 1) < lam) ++n;  // throws window_limit_error at the cap
    Rational hi = chord_level(n + 1);

    if (lam == chord_level(n)) {  // only reachable for n >= 2
        Vec2 a = vertex(1 - n), b = vertex(n);
        if (q == a) return at_vertex(1 - n);
        if (q == b) return at_vertex(n);
        if (q.x > a.x && q.x < b.x) return on_edge(chord_edge(n, comp));
        throw outside_surface_error("point outside the hull at a chord level");
    }
    if (lam == hi) {
        Vec2 a = vertex(-n), b = vertex(n + 1);
        if (q == a) return at_vertex(-n);
        if (q == b) return at_vertex(n + 1);
        if (q.x > a.x && q.x < b.x) return on_edge(chord_edge(n + 1, comp));
        throw outside_surface_error("point outside the hull at a chord level");
    }

    // Strictly inside band n: test the two hull edges, then the diagonal.
    Vec2 pn = vertex(n), pn1 = vertex(n + 1), qn = vertex(-n), q1n = vertex(1 - n);
    Rational right_side = wedge(pn1 - pn, q - pn);
    if (right_side.sign() < 0) throw outside_surface_error("point beyond the right hull edge");
    if (right_side.sign() == 0) return on_edge(boundary_edge(n));
    Rational left_side = wedge(q1n - qn, q - qn);
    if (left_side.sign() < 0) throw outside_surface_error("point beyond the left hull edge");
    if (left_side.sign() == 0) return on_edge(boundary_edge(-n));

    Rational diag = wedge(pn1 - q1n, q - q1n);
    if (diag.sign() == 0) return on_edge(diagonal_edge(n, comp));
    LocateResult r;
    r.kind = LocateResult::Kind::Interior;
    r.tris = {TriRef{comp, n, diag.sign() < 0}};
    return r;
}

std::vector<TriangulationEdge> Surface::triangulation(long window) const {
    if (window < 1) throw std::domain_error("triangulation: window must be >= 1");
    vertex(window + 1);
    vertex(-(window + 1));
    std::vector<TriangulationEdge> out;
    for (long k = -window; k <= window; ++k) {
        auto [a, b] = edge_endpoint_refs(boundary_edge(k), Component::Plus);
        out.push_back({boundary_edge(k), a, b});
    }
    for (Component comp : {Component::Plus, Component::Minus}) {
        for (long n = 2; n <= window; ++n) {
            auto [a, b] = edge_endpoint_refs(chord_edge(n, comp), comp);
            out.push_back({chord_edge(n, comp), a, b});
        }
    }
    for (Component comp : {Component::Plus, Component::Minus}) {
        for (long n = 1; n <= window; ++n) {
            auto [a, b] = edge_endpoint_refs(diagonal_edge(n, comp), comp);
            out.push_back({diagonal_edge(n, comp), a, b});
        }
    }
    auto comp_rank = [](const EdgeLabel& e) {
        if (e.kind == EdgeKind::Boundary) return 2;
        return e.comp == Component::Plus ? 0 : 1;
    };
    std::sort(out.begin(), out.end(), [&](const TriangulationEdge& x, const TriangulationEdge& y) {
        if (x.label.kind != y.label.kind) return x.label.kind < y.label.kind;
        if (comp_rank(x.label) != comp_rank(y.label)) return comp_rank(x.label) < comp_rank(y.label);
        return x.label.n < y.label.n;
    });
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<VertexRef>> Surface::singularity_classes(long window) const {
    if (window < 1) throw std::domain_error("singularity_classes: window must be >= 1");
    const long w = window;
    auto idx = [&](Component c, long k) {
        return static_cast<int>((c == Component::Plus ? 0 : 2 * w + 1) + (k + w));
    };
    UnionFind uf(2 * (2 * static_cast<int>(w) + 1));
    // The gluing of boundary edge k identifies vertex (+,k) with (-,k+1)
    // and (+,k+1) with (-,k).
    for (long k = -w; k <= w - 1; ++k) {
        uf.unite(idx(Component::Plus, k), idx(Component::Minus, k + 1));
        uf.unite(idx(Component::Plus, k + 1), idx(Component::Minus, k));
    }
    std::map<int, std::vector<VertexRef>> classes;
    for (Component c : {Component::Plus, Component::Minus})
        for (long k = -w; k <= w; ++k) classes[uf.find(idx(c, k))].push_back({c, k});
    std::vector<std::vector<VertexRef>> out;
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    // Canonical order: the class of (+,0) first, then by smallest member.
    auto has_origin = [](const std::vector<VertexRef>& cls) {
        return std::find(cls.begin(), cls.end(), VertexRef{Component::Plus, 0}) != cls.end();
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        bool ao = has_origin(a), bo = has_origin(b);
        if (ao != bo) return ao;
        return a.front() < b.front();
    });
    return out;
}

std::vector<Cylinder> Surface::cylinders(DirectionKind dir, long count) const {
    if (count < 1) throw std::domain_error("cylinders: count must be >= 1");
    std::vector<Cylinder> out;
    out.reserve(count);
    for (long n = 1; n <= count; ++n) {
        if (dir == DirectionKind::Horizontal) {
            // Band between the horizontal chords at heights y_{n-1} and y_n,
            // appearing once in each component.
            Vec2 a = vertex(n - 1), b = vertex(n);
            Rational circ = 2 * (a.x + b.x);
            Rational height = b.y - a.y;
            Rational area = circ * height;
            out.push_back({dir, n, circ * circ, area, height / circ});
        } else {
            // Band between slope-one chords n and n+1: one trapezoid per
            // component. Width is level gap / sqrt(2) and circumference is
            // area / width, so circumference^2 = 8*trap_area^2 / gap^2 stays
            // rational.
            Vec2 v0 = vertex(1 - n), v1 = vertex(n), v2 = vertex(n + 1), v3 = vertex(-n);
            Rational twice_trap =
                wedge(v0, v1) + wedge(v1, v2) + wedge(v2, v3) + wedge(v3, v0);
            Rational trap_area = twice_trap / 2;
            if (trap_area.sign() <= 0) throw std::logic_error("cylinders: degenerate trapezoid");
            Rational gap = chord_level(n + 1) - chord_level(n);
            Rational area = 2 * trap_area;
            Rational circ_sq = (Rational(8) * trap_area * trap_area) / (gap * gap);
            out.push_back({dir, n, circ_sq, area, area / circ_sq});
        }
    }
    return out;
}

namespace {

// One saddle connection (or a degenerate stop at a single cone point) of a
// cylinder boundary circle, as a chart segment between two vertices.
struct BoundaryArc {
    VertexRef a, b;
    bool degenerate() const { return a == b; }
};

}  // namespace

CylinderSignature Surface::smallest_cylinder_signature(DirectionKind dir) const {
    const long scan = std::min<long>(std::max<long>(materialized_window(), 8), max_window_ - 1);
    auto cyls = cylinders(dir, scan);
    const Cylinder* best = &cyls.front();
    for (const Cylinder& c : cyls)
        if (c.area < best->area) best = &c;
    const long m = best->index;

    std::vector<std::vector<BoundaryArc>> circles;
    const auto P = Component::Plus, M = Component::Minus;
    if (dir == DirectionKind::Horizontal) {
        circles = {{{{P, 1 - m}, {P, m - 1}}, {{M, m}, {M, -m}}},
                   {{{P, -m}, {P, m}}, {{M, m - 1}, {M, 1 - m}}}};
    } else {
        circles = {{{{P, 1 - m}, {P, m}}, {{M, m + 1}, {M, -m}}},
                   {{{P, -m}, {P, m + 1}}, {{M, m}, {M, 1 - m}}}};
    }

    // Certify each circle: arcs parallel to the cylinder direction, consecutive
    // endpoints at the same singular point.
    auto classes = singularity_classes(m + 2);
    auto class_of = [&](const VertexRef& v) {
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (const VertexRef& w : classes[i])
                if (w == v) return i;
        throw std::logic_error("cylinder boundary: vertex escapes the class window");
    };
    Vec2 u = dir == DirectionKind::Horizontal ? Vec2{1, 0} : Vec2{1, 1};
    int visits = 0;
    for (const auto& circle : circles) {
        int arcs = 0;
        for (std::size_t i = 0; i < circle.size(); ++i) {
            const BoundaryArc& arc = circle[i];
            const BoundaryArc& next = circle[(i + 1) % circle.size()];
            if (class_of(arc.b) != class_of(next.a))
                throw std::logic_error("cylinder boundary circle does not close up");
            if (arc.degenerate()) continue;
            if (wedge(vertex_point(arc.b) - vertex_point(arc.a), u).sign() != 0)
                throw std::logic_error("cylinder boundary arc not parallel to the core direction");
            ++arcs;
        }
        if (arcs == 0) throw std::logic_error("cylinder boundary circle has no length");
        visits += arcs;
    }
    return {m, best->area, visits};
}

}  // namespace tsurf
