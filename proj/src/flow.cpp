#include "tsurf/flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsurf {

namespace {

Rational ray_parameter(const Vec2& dir, const Vec2& displacement) {
    return dir.x.sign() != 0 ? displacement.x / dir.x : displacement.y / dir.y;
}

// Straight run along an edge into its forward endpoint; crosses nothing.
TraceResult edge_run(const Surface& h, const TriRef& home, Component comp, const Vec2& pos,
                     const Vec2& dir, const VertexRef& ra, const VertexRef& rb) {
    Vec2 a = h.vertex_point(ra), b = h.vertex_point(rb);
    bool toward_b = dot(dir, b - a).sign() > 0;
    VertexRef target = toward_b ? rb : ra;
    Vec2 tp = toward_b ? b : a;
    Vec2 dv = tp - pos;
    TraceResult res;
    res.start_tri = home;
    res.terminal = TerminalKind::HitSingularity;
    res.hit_vertex = target;
    res.hit_time = ray_parameter(dir, dv);
    res.elapsed = res.hit_time;
    res.holonomy = dv;
    res.end = {comp, tp};
    if (!dv.is_zero()) res.segments.push_back({comp, pos, tp});
    return res;
}

// Core stepper: pos is inside tri (interior, or on its boundary with the
// motion transverse and inward). Every event is exact.
TraceResult run(const Surface& h, TriRef tri, Vec2 pos, const Vec2& dir, long budget) {
    TraceResult res;
    res.start_tri = tri;
    res.holonomy = {0, 0};
    Vec2 seg_from = pos;
    auto flush = [&](const Vec2& upto) {
        if (!(upto == seg_from)) res.segments.push_back({tri.comp, seg_from, upto});
    };
    long crossed = 0;
    try {
        while (true) {
            auto corners = h.tri_coords(tri);
            auto refs = tri_vertex_refs(tri);
            for (int i = 0; i < 3; ++i) {
                Vec2 dv = corners[i] - pos;
                if (dv.is_zero()) continue;
                if (wedge(dir, dv).sign() == 0 && dot(dir, dv).sign() > 0) {
                    res.elapsed += ray_parameter(dir, dv);
                    res.holonomy += dv;
                    flush(corners[i]);
                    res.terminal = TerminalKind::HitSingularity;
                    res.hit_vertex = refs[i];
                    res.hit_time = res.elapsed;
                    res.end = {tri.comp, corners[i]};
                    return res;
                }
            }
            if (crossed == budget) {
                flush(pos);
                res.terminal = TerminalKind::CrossingBudgetExhausted;
                res.end = {tri.comp, pos};
                return res;
            }

            auto labels = tri_edge_labels(tri);
            int exit_i = -1;
            Rational t_exit;
            for (int i = 0; i < 3; ++i) {
                Vec2 a = corners[i], e = corners[(i + 1) % 3] - corners[i];
                Rational w = wedge(dir, e);
                if (w.sign() == 0) continue;
                Rational t = wedge(a - pos, e) / w;
                if (t.sign() <= 0) continue;
                Rational s = wedge(a - pos, dir) / w;
                if (s.sign() <= 0 || s >= Rational(1)) continue;
                exit_i = i;
                t_exit = t;
                break;
            }
            if (exit_i < 0) throw std::logic_error("tracer: no exit event in a triangle");

            Vec2 cross_pt = pos + t_exit * dir;
            res.elapsed += t_exit;
            res.holonomy += cross_pt - pos;
            const EdgeLabel sym = labels[exit_i];
            res.code.symbols.push_back(sym);
            ++crossed;
            TriRef next = across(tri, sym);
            if (sym.kind == EdgeKind::Boundary) {
                flush(cross_pt);
                AffineMap g = h.gluing_transfer(sym.n);
                pos = tri.comp == Component::Plus ? g(cross_pt) : inverse(g)(cross_pt);
                seg_from = pos;
            } else {
                pos = cross_pt;
            }
            tri = next;
        }
    } catch (const window_limit_error&) {
        flush(pos);
        res.terminal = TerminalKind::LeftWindow;
        res.end = {tri.comp, pos};
        return res;
    }
}

}  // namespace

TraceResult trace(const Surface& h, const SurfacePoint& start, const Vec2& direction,
                  long max_crossings) {
    if (direction.is_zero()) throw std::domain_error("trace: zero direction");
    if (max_crossings < 0) throw std::domain_error("trace: negative crossing budget");
    LocateResult loc = h.locate(start);
    switch (loc.kind) {
        case LocateResult::Kind::AtVertex:
            return separatrix(h, loc.vertex, direction, max_crossings);
        case LocateResult::Kind::Interior:
            return run(h, loc.tris.front(), start.pos, direction, max_crossings);
        case LocateResult::Kind::OnEdge: {
            for (const TriRef& t : loc.tris) {
                int i = edge_index_in(t, loc.edge);
                auto corners = h.tri_coords(t);
                Vec2 e = corners[(i + 1) % 3] - corners[i];
                if (wedge(e, direction).sign() > 0) {  // motion enters this side
                    Vec2 p = start.pos;
                    if (t.comp != start.comp) {
                        AffineMap g = h.gluing_transfer(loc.edge.n);
                        p = start.comp == Component::Plus ? g(p) : inverse(g)(p);
                    }
                    return run(h, t, p, direction, max_crossings);
                }
            }
            // Parallel to the edge: straight into the forward endpoint.
            auto [ra, rb] = edge_endpoint_refs(loc.edge, start.comp);
            TriRef home = loc.tris.front();
            for (const TriRef& t : loc.tris)
                if (t.comp == start.comp) home = t;
            return edge_run(h, home, start.comp, start.pos, direction, ra, rb);
        }
    }
    throw std::logic_error("trace: unhandled locate kind");
}

TraceResult separatrix(const Surface& h, const VertexRef& origin, const Vec2& direction,
                       long max_crossings) {
    if (direction.is_zero()) throw std::domain_error("separatrix: zero direction");
    if (max_crossings < 0) throw std::domain_error("separatrix: negative crossing budget");
    for (const TriRef& t : incident_triangles(origin)) {
        auto refs = tri_vertex_refs(t);
        int j = 0;
        while (refs[j] != origin) ++j;
        auto corners = h.tri_coords(t);
        Vec2 ea = corners[(j + 1) % 3] - corners[j];
        Vec2 eb = corners[(j + 2) % 3] - corners[j];
        Rational wa = wedge(ea, direction), wb = wedge(direction, eb);
        if (wa.sign() == 0 && dot(ea, direction).sign() > 0)
            return edge_run(h, t, t.comp, corners[j], direction, refs[j], refs[(j + 1) % 3]);
        if (wb.sign() == 0 && dot(eb, direction).sign() > 0)
            return edge_run(h, t, t.comp, corners[j], direction, refs[j], refs[(j + 2) % 3]);
        if (wa.sign() > 0 && wb.sign() > 0) return run(h, t, corners[j], direction, max_crossings);
    }
    throw no_sector_error("direction (" + direction.x.str() + "," + direction.y.str() +
                          ") points into no sector at vertex " + vertex_ref_str(origin));
}

Vec2 primitive_direction(const Vec2& d) {
    if (d.is_zero()) throw std::domain_error("direction: zero vector");
    mpz_class dx = d.x.den(), dy = d.y.den();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    mpz_class p = d.x.num() * (l / dx), q = d.y.num() * (l / dy);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return {Rational(mpz_class(p / g)), Rational(mpz_class(q / g))};
}

std::vector<SaddleConnection> find_saddle_connections(const Surface& h, const Vec2& direction,
                                                      long budget, long launch_window) {
    Vec2 d = primitive_direction(direction);
    std::vector<SaddleConnection> found;
    for (long k = -launch_window; k <= launch_window; ++k) {
        for (Component comp : {Component::Plus, Component::Minus}) {
            for (int sgn : {1, -1}) {
                Vec2 dd = sgn > 0 ? d : -d;
                TraceResult r;
                try {
                    r = separatrix(h, VertexRef{comp, k}, dd, budget);
                } catch (const no_sector_error&) {
                    continue;
                } catch (const window_limit_error&) {
                    continue;
                }
                if (r.terminal != TerminalKind::HitSingularity) continue;
                SaddleConnection sc{VertexRef{comp, k}, r.hit_vertex, 0, 0, r.holonomy,
                                    std::move(r.code)};
                // Canonical traversal sense: nonnegative holonomy.
                if (sc.holonomy.x.sign() < 0 ||
                    (sc.holonomy.x.sign() == 0 && sc.holonomy.y.sign() < 0)) {
                    std::swap(sc.start, sc.end);
                    sc.holonomy = -sc.holonomy;
                    std::reverse(sc.code.symbols.begin(), sc.code.symbols.end());
                }
                found.push_back(std::move(sc));
            }
        }
    }

    auto key_less = [](const SaddleConnection& a, const SaddleConnection& b) {
        if (a.holonomy.x != b.holonomy.x) return a.holonomy.x < b.holonomy.x;
        if (a.holonomy.y != b.holonomy.y) return a.holonomy.y < b.holonomy.y;
        if (a.start != b.start) return a.start < b.start;
        return a.code.symbols < b.code.symbols;
    };
    auto key_eq = [](const SaddleConnection& a, const SaddleConnection& b) {
        return a.holonomy == b.holonomy && a.start == b.start && a.code.symbols == b.code.symbols;
    };
    std::sort(found.begin(), found.end(), key_less);
    found.erase(std::unique(found.begin(), found.end(), key_eq), found.end());

    if (!found.empty()) {
        long w = 1;
        for (const SaddleConnection& sc : found)
            w = std::max({w, std::abs(sc.start.k), std::abs(sc.end.k)});
        auto classes = h.singularity_classes(w + 1);
        auto class_id = [&](const VertexRef& v) {
            for (const auto& cls : classes) {
                bool has_v = std::find(cls.begin(), cls.end(), v) != cls.end();
                if (!has_v) continue;
                bool has_origin =
                    std::find(cls.begin(), cls.end(), VertexRef{Component::Plus, 0}) != cls.end();
                return has_origin ? 0 : 1;
            }
            throw std::logic_error("saddle connection endpoint escapes the class window");
        };
        for (SaddleConnection& sc : found) {
            sc.start_class = class_id(sc.start);
            sc.end_class = class_id(sc.end);
        }
    }
    return found;
}

}  // namespace tsurf
