#include "tsurf/json_io.hpp"

#include <algorithm>

namespace tsurf {

using nlohmann::json;

json rational_json(const Rational& r) { return r.str(); }

json vec_json(const Vec2& v) { return json::array({v.x.str(), v.y.str()}); }

json vertex_ref_json(const VertexRef& v) {
    return {{"component", std::string(1, component_char(v.comp))}, {"k", v.k}};
}

json edge_label_json(const EdgeLabel& e) {
    std::string comp;
    std::string kind;
    switch (e.kind) {
        case EdgeKind::Boundary:
            kind = "boundary";
            comp = "glued";
            break;
        case EdgeKind::Chord:
            kind = "chord";
            comp = std::string(1, component_char(e.comp));
            break;
        case EdgeKind::Diagonal:
            kind = "diagonal";
            comp = std::string(1, component_char(e.comp));
            break;
    }
    return {{"component", comp}, {"kind", kind}, {"n", e.n}};
}

json code_json(const Code& code) {
    json arr = json::array();
    for (const EdgeLabel& e : code.symbols) arr.push_back(edge_label_json(e));
    return arr;
}

namespace {

json point_json(const SurfacePoint& p) {
    return {{"component", std::string(1, component_char(p.comp))},
            {"x", p.pos.x.str()},
            {"y", p.pos.y.str()}};
}

json terminal_json(const TraceResult& r) {
    json t;
    switch (r.terminal) {
        case TerminalKind::CrossingBudgetExhausted:
            t["kind"] = "budget-exhausted";
            break;
        case TerminalKind::HitSingularity:
            t["kind"] = "hit-singularity";
            t["vertex"] = vertex_ref_json(r.hit_vertex);
            t["time"] = r.hit_time.str();
            break;
        case TerminalKind::LeftWindow:
            t["kind"] = "left-window";
            break;
    }
    return t;
}

std::string direction_kind_str(DirectionKind d) {
    return d == DirectionKind::Horizontal ? "horizontal" : "slope-one";
}

}  // namespace

json surface_dump_json(const Surface& h, long window) {
    json vertices = json::array();
    for (long k = -window; k <= window; ++k) {
        Vec2 p = h.vertex(k);
        vertices.push_back({{"k", k}, {"x", p.x.str()}, {"y", p.y.str()}});
    }
    json edges = json::array();
    for (const TriangulationEdge& e : h.triangulation(window)) edges.push_back(edge_label_json(e.label));
    json classes = json::array();
    for (const auto& cls : h.singularity_classes(window)) {
        json one = json::array();
        for (const VertexRef& v : cls) one.push_back(vertex_ref_json(v));
        classes.push_back(one);
    }
    return {{"c", h.c().str()},
            {"edges", edges},
            {"singularity_classes", classes},
            {"vertices", vertices},
            {"window", window}};
}

json cylinders_json(const Surface& h, DirectionKind direction, long count) {
    json arr = json::array();
    for (const Cylinder& cyl : h.cylinders(direction, count)) {
        arr.push_back({{"area", cyl.area.str()},
                       {"circumference_sq", cyl.circumference_sq.str()},
                       {"index", cyl.index},
                       {"modulus", cyl.modulus.str()}});
    }
    return {{"c", h.c().str()},
            {"count", count},
            {"cylinders", arr},
            {"direction", direction_kind_str(direction)}};
}

json trace_json(const Surface& h, const SurfacePoint& start, const Vec2& direction,
                const TraceResult& result) {
    return {{"c", h.c().str()},
            {"code", code_json(result.code)},
            {"direction", vec_json(direction)},
            {"end", point_json(result.end)},
            {"holonomy", vec_json(result.holonomy)},
            {"start", point_json(start)},
            {"terminal", terminal_json(result)}};
}

json separatrix_json(const Surface& h, const VertexRef& origin, const Vec2& direction,
                     const TraceResult& result) {
    return {{"c", h.c().str()},
            {"code", code_json(result.code)},
            {"direction", vec_json(direction)},
            {"end", point_json(result.end)},
            {"holonomy", vec_json(result.holonomy)},
            {"origin", vertex_ref_json(origin)},
            {"terminal", terminal_json(result)}};
}

json saddle_connections_json(const Surface& h, const Vec2& direction,
                             const std::vector<SaddleConnection>& conns) {
    json arr = json::array();
    for (const SaddleConnection& sc : conns) {
        arr.push_back({{"code", code_json(sc.code)},
                       {"end", vertex_ref_json(sc.end)},
                       {"end_class", sc.end_class},
                       {"holonomy", vec_json(sc.holonomy)},
                       {"start", vertex_ref_json(sc.start)},
                       {"start_class", sc.start_class}});
    }
    return {{"c", h.c().str()},
            {"connections", arr},
            {"count", static_cast<long>(conns.size())},
            {"direction", vec_json(direction)}};
}

json classify_json(const mpz_class& p, const mpz_class& q) {
    DirectionClass cls = classify_direction(p, q);
    return {{"class", direction_class_str(cls)},
            {"saddle_connections", cls != DirectionClass::VerticalLike}};
}

json reduce_json(const mpz_class& p, const mpz_class& q) {
    ReducedDirection rd = reduce_direction(p, q);
    Vec2 image = realize(rd.word, Rational(1)).matrix * rd.base;
    return {{"base", vec_json(rd.base)},
            {"direction", json::array({p.get_str(), q.get_str()})},
            {"image", vec_json(image)},
            {"word", word_str(rd.word)}};
}

json cone_json(const FeasibilityCone& cone) {
    json j;
    j["nonempty"] = cone.nonempty;
    j["unconstrained"] = cone.unconstrained;
    if (cone.nonempty && !cone.unconstrained) {
        j["closed_lower"] = cone.closed_lower;
        j["closed_upper"] = cone.closed_upper;
        j["lower"] = vec_json(cone.lower);
        j["upper"] = vec_json(cone.upper);
    } else {
        j["closed_lower"] = nullptr;
        j["closed_upper"] = nullptr;
        j["lower"] = nullptr;
        j["upper"] = nullptr;
    }
    return j;
}

json cross_surface_json(const CrossSurfaceReport& rep) {
    return {{"c", rep.c.str()},
            {"c_prime", rep.c_prime.str()},
            {"code", code_json(rep.code)},
            {"cone", cone_json(rep.cone)},
            {"feasible", rep.feasible},
            {"start", tri_str(rep.start)}};
}

json compare_json(const CompareReport& rep, const CrossSurfaceReport* cross) {
    json j;
    j["base"] = vec_json(rep.base);
    j["c"] = rep.c.str();
    j["c_prime"] = "1";
    j["code"] = code_json(rep.trace_c.code);
    j["code_1"] = code_json(rep.trace_1.code);
    j["common_prefix"] = rep.common_prefix;
    j["full_agreement"] = rep.full_agreement;
    j["note"] = rep.note;
    j["started"] = rep.started;
    j["u_1"] = vec_json(rep.u_1);
    j["u_c"] = vec_json(rep.u_c);
    j["word"] = word_str(rep.word);
    if (rep.started && rep.start.kind != CompareStart::Kind::CoreCurve)
        j["start_vertex"] = vertex_ref_json(rep.start_vertex);
    if (cross != nullptr) {
        j["cone"] = cone_json(cross->cone);
        j["feasible"] = cross->feasible;
    } else {
        j["cone"] = nullptr;
        j["feasible"] = false;
    }
    return j;
}

}  // namespace tsurf
