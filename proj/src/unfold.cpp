#include "tsurf/unfold.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsurf {

Development develop(const Surface& h, const TriRef& start, const Code& code,
                    const Vec2& direction) {
    Development dev;
    dev.c = h.c();
    dev.direction = direction;
    TriRef cur = start;
    Vec2 offset{0, 0};
    auto place = [&](const TriRef& t, const Vec2& off) {
        auto cc = h.tri_coords(t);
        return DevelopedTriangle{t, off, {cc[0] + off, cc[1] + off, cc[2] + off}};
    };
    dev.tris.push_back(place(cur, offset));
    const EdgeLabel* prev = nullptr;
    for (const EdgeLabel& sym : code.symbols) {
        if (prev && *prev == sym)
            throw malformed_code_error("code backtracks at " + edge_str(sym));
        int i = edge_index_in(cur, sym);
        if (i < 0)
            throw malformed_code_error("symbol " + edge_str(sym) + " is not an edge of " +
                                       tri_str(cur));
        Vec2 ea = dev.tris.back().corners[i];
        Vec2 eb = dev.tris.back().corners[(i + 1) % 3];
        TriRef next = across(cur, sym);
        if (sym.kind == EdgeKind::Boundary) {
            Vec2 step = h.vertex(sym.n) + h.vertex(sym.n + 1);
            offset += cur.comp == Component::Plus ? step : -step;
        }
        DevelopedTriangle ndt = place(next, offset);
        int ni = edge_index_in(next, sym);
        Vec2 na = ndt.corners[ni], nb = ndt.corners[(ni + 1) % 3];
        if (!((na == ea && nb == eb) || (na == eb && nb == ea)))
            throw std::logic_error("develop: shared edge fails to coincide in the plane");
        Vec2 opp = ndt.corners[(ni + 2) % 3];
        Vec2 bottom = ea, top = eb;
        if (wedge(top - bottom, opp - bottom).sign() > 0) std::swap(bottom, top);
        dev.segs.push_back({sym, bottom, top});
        dev.tris.push_back(std::move(ndt));
        cur = next;
        prev = &sym;
    }
    return dev;
}

bool FeasibilityCone::strictly_contains(const Vec2& u) const {
    if (!nonempty || u.is_zero()) return false;
    if (unconstrained) return true;
    return wedge(lower, u).sign() > 0 && wedge(u, upper).sign() > 0;
}

bool FeasibilityCone::contains(const Vec2& u) const {
    if (strictly_contains(u)) return true;
    if (!nonempty || u.is_zero() || unconstrained) return false;
    if (closed_lower && wedge(lower, u).sign() == 0 && dot(lower, u).sign() > 0) return true;
    if (closed_upper && wedge(upper, u).sign() == 0 && dot(upper, u).sign() > 0) return true;
    return false;
}

FeasibilityCone feasibility_cone(const Development& dev) {
    FeasibilityCone cone;
    const auto& segs = dev.segs;
    if (segs.empty()) {
        cone.nonempty = true;
        cone.unconstrained = true;
        return cone;
    }
    // A direction u crosses s_1..s_K in order iff wedge(u, top_j - bottom_k) > 0
    // for all j,k: every top must sit strictly above every bottom in the frame
    // where u is horizontal. Fold the half-plane constraints into one angular
    // interval (lower, upper).
    bool have = false;
    Vec2 lo, hi;
    for (std::size_t j = 0; j < segs.size(); ++j) {
        for (std::size_t k = 0; k < segs.size(); ++k) {
            Vec2 w = segs[j].top - segs[k].bottom;
            if (w.is_zero()) return cone;  // a top equals a bottom: no strict transversal
            if (!have) {
                lo = -w;
                hi = w;
                have = true;
                continue;
            }
            int slo = wedge(lo, w).sign(), shi = wedge(hi, w).sign();
            if (slo > 0 && shi > 0) continue;
            if (slo == 0 && shi == 0) {
                // Half-plane state (lo = -hi) with w parallel to its boundary:
                // the same sense repeats the constraint, the opposite sense is
                // the complementary half-plane and the intersection is empty.
                if (dot(hi, w).sign() > 0) continue;
                return cone;
            }
            if (slo > 0)
                hi = w;
            else if (shi > 0)
                lo = -w;
            else
                return cone;  // empty
        }
    }
    cone.nonempty = true;
    cone.lower = lo;
    cone.upper = hi;
    // A boundary ray still admits a chain through cone points as long as it
    // is not parallel to any single segment.
    auto chain_possible = [&](const Vec2& b) {
        for (const DevelopedSegment& s : segs)
            if (wedge(b, s.top - s.bottom).sign() <= 0) return false;
        return true;
    };
    cone.closed_lower = chain_possible(lo);
    cone.closed_upper = chain_possible(hi);
    return cone;
}

namespace {

Rational twice_area(const std::vector<Vec2>& poly) {
    Rational s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += wedge(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

// Clips to the closed left side of the oriented line a -> b, exactly.
std::vector<Vec2> clip_half(const std::vector<Vec2>& poly, const Vec2& a, const Vec2& b) {
    std::vector<Vec2> out;
    const std::size_t n = poly.size();
    Vec2 e = b - a;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        int sp = wedge(e, p - a).sign();
        int sq = wedge(e, q - a).sign();
        if (sp >= 0) out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            Rational t = wedge(e, a - p) / wedge(e, q - p);
            out.push_back(p + t * (q - p));
        }
    }
    std::vector<Vec2> ded;
    for (const Vec2& p : out)
        if (ded.empty() || !(ded.back() == p)) ded.push_back(p);
    if (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
    return ded;
}

bool point_in_convex(const std::vector<Vec2>& poly, const Vec2& p) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        if (wedge(poly[(i + 1) % n] - poly[i], p - poly[i]).sign() < 0) return false;
    return true;
}

std::vector<Vec2> clip_convex(std::vector<Vec2> poly, const std::vector<Vec2>& by) {
    const std::size_t n = by.size();
    for (std::size_t i = 0; i < n && !poly.empty(); ++i)
        poly = clip_half(poly, by[i], by[(i + 1) % n]);
    if (poly.size() < 3) poly.clear();
    return poly;
}

}  // namespace

RegionV region_V(const Development& dev) {
    if (dev.direction.is_zero())
        throw std::domain_error("region_V: development carries no reference direction");
    RegionV rv;
    const Vec2& u = dev.direction;
    if (u.x.sign() != 0)
        rv.shear = {1, 0, -u.y / u.x, 1};  // unit-determinant shear sending u to the x-axis
    else
        rv.shear = {0, 1, -1, 0};  // quarter turn for vertical directions
    auto sh = [&](const Vec2& p) { return rv.shear * p; };

    bool first = true;
    if (dev.segs.empty()) {
        for (const Vec2& p : dev.tris.front().corners) {
            Rational y = sh(p).y;
            if (first) {
                rv.lo = rv.hi = y;
                first = false;
            } else {
                rv.lo = std::min(rv.lo, y);
                rv.hi = std::max(rv.hi, y);
            }
        }
    } else {
        for (const DevelopedSegment& s : dev.segs) {
            Rational yb = sh(s.bottom).y, yt = sh(s.top).y;
            Rational l = std::min(yb, yt), t = std::max(yb, yt);
            if (first) {
                rv.lo = l;
                rv.hi = t;
                first = false;
            } else {
                rv.lo = std::max(rv.lo, l);
                rv.hi = std::min(rv.hi, t);
            }
        }
    }
    if (!(rv.lo < rv.hi)) throw degenerate_interval_error(rv.lo, rv.hi);

    Rational xmin, xmax;
    bool fx = true;
    for (const DevelopedTriangle& t : dev.tris)
        for (const Vec2& p : t.corners) {
            Rational x = sh(p).x;
            if (fx) {
                xmin = xmax = x;
                fx = false;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
            }
        }

    // V is cut from the height strip by the non-shared edges of the first and
    // last triangles; the tiling certificate below is what makes this honest.
    std::vector<Vec2> poly{
        {xmin - 1, rv.lo}, {xmax + 1, rv.lo}, {xmax + 1, rv.hi}, {xmin - 1, rv.hi}};
    auto tri_sheared = [&](const DevelopedTriangle& t) {
        return std::vector<Vec2>{sh(t.corners[0]), sh(t.corners[1]), sh(t.corners[2])};
    };
    auto clip_by_nonshared = [&](const DevelopedTriangle& t, const Vec2* sa, const Vec2* sb) {
        auto cs = tri_sheared(t);
        for (int i = 0; i < 3; ++i) {
            const Vec2& a = t.corners[i];
            const Vec2& b = t.corners[(i + 1) % 3];
            if (sa && ((a == *sa && b == *sb) || (a == *sb && b == *sa))) continue;
            // Only edges whose height span meets the open strip can carry the
            // entry/exit boundary; a line through the others would re-enter the
            // strip elsewhere and cut V illegally.
            const Vec2& p = cs[i];
            const Vec2& q = cs[(i + 1) % 3];
            if (!(std::min(p.y, q.y) < rv.hi && std::max(p.y, q.y) > rv.lo)) continue;
            poly = clip_half(poly, p, q);
        }
    };
    if (dev.segs.empty()) {
        clip_by_nonshared(dev.tris.front(), nullptr, nullptr);
    } else {
        clip_by_nonshared(dev.tris.front(), &dev.segs.front().bottom, &dev.segs.front().top);
        clip_by_nonshared(dev.tris.back(), &dev.segs.back().bottom, &dev.segs.back().top);
    }
    if (poly.size() < 3) return rv;  // no certificates for a collapsed region
    rv.polygon = poly;

    rv.convex_certified = twice_area(poly).sign() > 0;
    for (std::size_t i = 0; i < poly.size() && rv.convex_certified; ++i) {
        Vec2 e1 = poly[(i + 1) % poly.size()] - poly[i];
        Vec2 e2 = poly[(i + 2) % poly.size()] - poly[(i + 1) % poly.size()];
        if (wedge(e1, e2).sign() < 0) rv.convex_certified = false;
    }

    bool ok = true;
    Rational total = 0;
    std::vector<std::vector<Vec2>> pieces;
    pieces.reserve(dev.tris.size());
    for (const DevelopedTriangle& t : dev.tris) {
        auto ts = tri_sheared(t);
        auto piece = clip_convex(ts, poly);
        total += twice_area(piece);
        // the strip-clipped triangle may not exceed V
        auto strip = clip_half(ts, {xmin - 1, rv.lo}, {xmax + 1, rv.lo});
        strip = clip_half(strip, {xmax + 1, rv.hi}, {xmin - 1, rv.hi});
        if (strip.size() >= 3)
            for (const Vec2& p : strip)
                if (!point_in_convex(poly, p)) ok = false;
        pieces.push_back(std::move(piece));
    }
    if (total != twice_area(poly)) ok = false;

    std::vector<std::pair<Rational, Rational>> xr(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].empty()) continue;
        Rational a = pieces[i][0].x, b = a;
        for (const Vec2& p : pieces[i]) {
            a = std::min(a, p.x);
            b = std::max(b, p.x);
        }
        xr[i] = {a, b};
    }
    for (std::size_t i = 0; i + 1 < pieces.size() && ok; ++i) {
        if (pieces[i].size() < 3) continue;
        for (std::size_t j = i + 1; j < pieces.size() && ok; ++j) {
            if (pieces[j].size() < 3) continue;
            if (!(xr[i].second > xr[j].first && xr[j].second > xr[i].first)) continue;
            auto inter = clip_convex(pieces[i], pieces[j]);
            if (!inter.empty() && twice_area(inter).sign() != 0) ok = false;
        }
    }
    rv.tiling_certified = ok;
    return rv;
}

CrossSurfaceReport cross_surface_check(const TriRef& start, const Code& code, const Rational& c,
                                       const Rational& c_prime) {
    CrossSurfaceReport rep;
    rep.c = c;
    rep.c_prime = c_prime;
    rep.start = start;
    rep.code = code;
    Surface target(c_prime);
    try {
        Development dev = develop(target, start, code);
        rep.cone = feasibility_cone(dev);
        rep.feasible = rep.cone.nonempty;
    } catch (const malformed_code_error&) {
        rep.feasible = false;
    }
    return rep;
}

CompareReport directional_code_compare(const GroupWord& word, const Vec2& base, const Rational& c,
                                       const CompareStart& start, long max_crossings) {
    CompareReport rep;
    rep.word = word;
    rep.base = base;
    rep.c = c;
    rep.start = start;
    auto [uc, u1] = phi_pair(word, base, c);
    rep.u_c = uc;
    rep.u_1 = u1;
    Surface sc(c), s1(Rational(1));

    auto compare_traces = [&](TraceResult&& tc, TraceResult&& t1) {
        rep.trace_c = std::move(tc);
        rep.trace_1 = std::move(t1);
        rep.started = true;
        const auto& a = rep.trace_c.code.symbols;
        const auto& b = rep.trace_1.code.symbols;
        std::size_t m = std::min(a.size(), b.size());
        std::size_t i = 0;
        while (i < m && a[i] == b[i]) ++i;
        rep.common_prefix = static_cast<long>(i);
        bool codes_equal = a.size() == b.size() && i == a.size();
        bool terminals_match =
            rep.trace_c.terminal == rep.trace_1.terminal &&
            (rep.trace_c.terminal != TerminalKind::HitSingularity ||
             rep.trace_c.hit_vertex == rep.trace_1.hit_vertex);
        rep.full_agreement = codes_equal && terminals_match;
        if (!codes_equal)
            rep.note = "codes diverge at symbol " + std::to_string(i);
        else if (!terminals_match)
            rep.note = "codes agree but terminals differ";
    };

    if (start.kind == CompareStart::Kind::CoreCurve) {
        long n = start.cylinder;
        auto mid = [&](const Surface& s) {
            Rational h = (s.vertex(n - 1).y + s.vertex(n).y) / 2;
            return SurfacePoint{Component::Plus, Vec2{0, h}};
        };
        compare_traces(trace(sc, mid(sc), uc, max_crossings),
                       trace(s1, mid(s1), u1, max_crossings));
        return rep;
    }

    // 0 = both tried fine, 1 = no sector on either side, 2 = one-sided
    auto try_vertex = [&](const VertexRef& v) {
        TraceResult tc, t1;
        bool okc = true, ok1 = true;
        std::string why;
        try {
            tc = separatrix(sc, v, uc, max_crossings);
        } catch (const no_sector_error& e) {
            okc = false;
            why = e.what();
        }
        try {
            t1 = separatrix(s1, v, u1, max_crossings);
        } catch (const no_sector_error& e) {
            ok1 = false;
            why = e.what();
        }
        if (okc != ok1) {
            if (rep.note.empty())
                rep.note = std::string("sector exists only on ") + (okc ? "the c" : "the 1") +
                           " side at " + vertex_ref_str(v) + ": " + why;
            return 2;
        }
        if (!okc) return 1;
        rep.start_vertex = v;
        compare_traces(std::move(tc), std::move(t1));
        return 0;
    };

    if (start.kind == CompareStart::Kind::Vertex) {
        int r = try_vertex(start.vertex);
        if (r == 1 && rep.note.empty())
            rep.note = "direction points into no sector at " + vertex_ref_str(start.vertex);
        return rep;
    }

    for (long a = 0; a <= 8; ++a) {
        for (long k : {a, -a}) {
            for (Component comp : {Component::Plus, Component::Minus}) {
                if (try_vertex(VertexRef{comp, k}) == 0) return rep;
            }
            if (a == 0) break;
        }
    }
    if (rep.note.empty()) rep.note = "no common sector found in the scan window";
    return rep;
}

}  // namespace tsurf
