#include <gmpxx.h>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsurf/errors.hpp"
#include "tsurf/flow.hpp"
#include "tsurf/group.hpp"
#include "tsurf/json_io.hpp"
#include "tsurf/surface.hpp"
#include "tsurf/svg.hpp"
#include "tsurf/unfold.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace tsurf;

constexpr long kBudgetCap = 1'000'000;
constexpr long kWindowCap = 1 << 10;

mpz_class parse_integer(const std::string& s) {
    Rational r = Rational::parse(s);
    if (!r.is_integer()) throw std::domain_error("expected an integer, got '" + s + "'");
    return r.num();
}

Vec2 parse_int_direction(const std::vector<std::string>& v) {
    return {Rational(parse_integer(v[0])), Rational(parse_integer(v[1]))};
}

Vec2 parse_rat_direction(const std::vector<std::string>& v) {
    return {Rational::parse(v[0]), Rational::parse(v[1])};
}

Component parse_component(const std::string& s) {
    if (s == "+" || s == "plus") return Component::Plus;
    if (s == "-" || s == "minus") return Component::Minus;
    throw std::domain_error("component must be '+' or '-', got '" + s + "'");
}

DirectionKind parse_kind(const std::string& s) {
    if (s == "horizontal") return DirectionKind::Horizontal;
    if (s == "slope-one") return DirectionKind::SlopeOne;
    throw std::domain_error("direction family must be 'horizontal' or 'slope-one', got '" + s +
                            "'");
}

long checked_budget(long n) {
    if (n < 0 || n > kBudgetCap)
        throw std::domain_error("crossing budget must lie in [0, " + std::to_string(kBudgetCap) +
                                "]");
    return n;
}

long checked_window(long w, const char* what = "window") {
    if (w < 1 || w > kWindowCap)
        throw std::domain_error(std::string(what) + " must lie in [1, " +
                                std::to_string(kWindowCap) + "]");
    return w;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open '" + path + "' for writing");
    out << content;
}

std::string mat_str(const Mat2& m) {
    return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

// ---- verify suites ----------------------------------------------------------

struct CheckOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<CheckOutcome> suite_relations(const Rational& c) {
    std::vector<CheckOutcome> out;
    for (const RelationCheck& rc : verify_relations(c)) {
        out.push_back({"relation:" + rc.name, rc.pass,
                       "generator relation " + rc.name + " holds at c = " + c.str()});
    }
    return out;
}

std::vector<CheckOutcome> suite_moduli(const Rational& c, long window) {
    Surface h(c, 2, std::max<long>(kWindowCap, window + 2));
    std::vector<CheckOutcome> out;
    struct Fam {
        DirectionKind kind;
        const char* name;
        Rational expect;
    };
    for (const Fam& f : {Fam{DirectionKind::Horizontal, "horizontal", Rational(1, 2)},
                         Fam{DirectionKind::SlopeOne, "slope-one",
                             Rational(1) / (Rational(2) * c + Rational(2))}}) {
        CheckOutcome co{std::string("moduli:") + f.name, true,
                        "cylinders 1.." + std::to_string(window) + " all have modulus " +
                            f.expect.str()};
        for (const Cylinder& cyl : h.cylinders(f.kind, window)) {
            if (cyl.modulus != f.expect) {
                co.pass = false;
                co.detail = "cylinder " + std::to_string(cyl.index) + " has modulus " +
                            cyl.modulus.str() + ", expected " + f.expect.str();
                break;
            }
        }
        out.push_back(co);
    }
    return out;
}

std::vector<CheckOutcome> suite_parabolic(const Rational& c, long window) {
    Surface h(c, 2, std::max<long>(kWindowCap, window + 2));
    std::vector<CheckOutcome> out;
    {
        ParabolicCertificate cert = verify_parabolic(h, DirectionKind::Horizontal, Rational(2), window);
        Mat2 expect = realize(parse_word("D"), c).matrix;
        bool pass = cert.certified && cert.derivative == expect;
        out.push_back({"parabolic:horizontal", pass,
                       pass ? "shear by 2 along the horizontal cylinders is a Dehn twist power "
                              "with derivative " + mat_str(expect)
                            : "certification failed; derivative " + mat_str(cert.derivative) +
                              ", expected " + mat_str(expect)});
    }
    {
        Rational m = Rational(2) * c + Rational(2);
        ParabolicCertificate cert = verify_parabolic(h, DirectionKind::SlopeOne, m, window);
        Mat2 expect = realize(parse_word("E"), c).matrix;
        bool pass = cert.certified && cert.derivative == expect;
        out.push_back({"parabolic:slope-one", pass,
                       pass ? "shear by " + m.str() + " along the slope-one cylinders is a Dehn "
                              "twist power with derivative " + mat_str(expect)
                            : "certification failed; derivative " + mat_str(cert.derivative) +
                              ", expected " + mat_str(expect)});
    }
    return out;
}

std::vector<CheckOutcome> suite_symmetries(const Rational& c, long window) {
    Surface h(c, 2, std::max<long>(kWindowCap, window + 2));
    std::vector<CheckOutcome> out;
    {
        AffineMap r = h.reflection();
        bool pass = true;
        for (long k = -window; k <= window && pass; ++k) pass = r(h.vertex(k)) == h.vertex(-k);
        out.push_back({"symmetry:reflection", pass,
                       "the mirror map (x,y) -> (-x,y) exchanges vertices k and -k for |k| <= " +
                           std::to_string(window)});
    }
    {
        AffineMap u = h.index_swap_symmetry();
        bool pass = true;
        for (long k = -window; k <= window && pass; ++k)
            pass = u(h.vertex(k)) == h.vertex(1 - k);
        out.push_back({"symmetry:index-swap", pass,
                       "an affine involution exchanges vertices k and 1-k for |k| <= " +
                           std::to_string(window)});
    }
    {
        AffineMap t = h.boundary_map();
        bool pass = true;
        for (long k = -window; k < window && pass; ++k) pass = t(h.vertex(k)) == h.vertex(k + 1);
        out.push_back({"symmetry:boundary-step", pass,
                       "the boundary translation map sends vertex k to vertex k+1 for |k| < " +
                           std::to_string(window)});
    }
    return out;
}

std::vector<CheckOutcome> suite_singularities(const Rational& c, long window) {
    Surface h(c, 2, std::max<long>(kWindowCap, window + 2));
    long w = std::max<long>(2, window);
    auto classes = h.singularity_classes(w);
    std::vector<CheckOutcome> out;
    out.push_back({"singularities:count", classes.size() == 2,
                   "the edge identifications merge the cone points into exactly 2 classes "
                   "(window " + std::to_string(w) + "); found " + std::to_string(classes.size())});
    bool parity = classes.size() == 2;
    if (parity) {
        for (const auto& cls : classes) {
            bool has_plus_even = false;
            for (const VertexRef& v : cls)
                if (v.comp == Component::Plus && ((v.k % 2) == 0)) has_plus_even = true;
            for (const VertexRef& v : cls) {
                bool even = ((v.k % 2) == 0);
                bool expect_even = (v.comp == Component::Plus) == has_plus_even;
                if (even != expect_even) parity = false;
            }
        }
    }
    out.push_back({"singularities:parity", parity,
                   "each class consists of the even vertices of one chart and the odd vertices "
                   "of the other"});
    return out;
}

int run_verify(const Rational& c, const std::string& suite, long window, int threads) {
    std::vector<std::function<std::vector<CheckOutcome>()>> tasks;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("relations")) tasks.push_back([=] { return suite_relations(c); });
    if (want("moduli")) tasks.push_back([=] { return suite_moduli(c, window); });
    if (want("parabolic")) tasks.push_back([=] { return suite_parabolic(c, window); });
    if (want("symmetries")) tasks.push_back([=] { return suite_symmetries(c, window); });
    if (want("singularities")) tasks.push_back([=] { return suite_singularities(c, window); });
    if (tasks.empty())
        throw std::domain_error("unknown suite '" + suite +
                                "' (expected all, relations, moduli, parabolic, symmetries or "
                                "singularities)");

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
    std::vector<std::vector<CheckOutcome>> results(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(tasks.size()); ++i) results[i] = tasks[i]();

    bool all_pass = true;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& group : results) {
        for (const CheckOutcome& co : group) {
            all_pass = all_pass && co.pass;
            checks.push_back({{"detail", co.detail}, {"name", co.name}, {"pass", co.pass}});
        }
    }
    emit({{"c", c.str()}, {"checks", checks}, {"passed", all_pass}, {"suite", suite}});
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on a family of infinite translation surfaces"};
    app.require_subcommand(1);
    int rc = 0;

    // surface
    std::string su_c = "1";
    long su_window = 4;
    auto* su = app.add_subcommand("surface", "dump vertices, edges and cone point classes");
    su->add_option("--c", su_c, "surface parameter p/q, at least 1");
    su->add_option("--window", su_window, "vertex window half-width");
    su->callback([&] {
        Surface h(Rational::parse(su_c));
        emit(surface_dump_json(h, checked_window(su_window)));
    });

    // cylinders
    std::string cy_c = "1", cy_dir = "horizontal";
    long cy_count = 3;
    bool cy_sig = false;
    auto* cy = app.add_subcommand("cylinders", "list the cylinders of a parallel family");
    cy->add_option("--c", cy_c, "surface parameter p/q, at least 1");
    cy->add_option("--direction", cy_dir, "horizontal or slope-one");
    cy->add_option("--count", cy_count, "number of cylinders, innermost first");
    cy->add_flag("--signature", cy_sig, "include the area-minimal cylinder signature");
    cy->callback([&] {
        Surface h(Rational::parse(cy_c));
        DirectionKind kind = parse_kind(cy_dir);
        nlohmann::json j = cylinders_json(h, kind, checked_window(cy_count, "count"));
        if (cy_sig) {
            CylinderSignature sig = h.smallest_cylinder_signature(kind);
            j["smallest"] = {{"area", sig.area.str()},
                             {"boundary_cone_points", sig.boundary_cone_points},
                             {"index", sig.index}};
        }
        emit(j);
    });

    // trace
    std::string tr_c = "1", tr_comp = "+";
    std::vector<std::string> tr_start, tr_dir, tr_dir_rat;
    long tr_budget = 100;
    auto* tr = app.add_subcommand("trace", "flow a straight line and record its edge itinerary");
    tr->add_option("--c", tr_c, "surface parameter p/q, at least 1");
    tr->add_option("--start", tr_start, "start point x y (rationals)")->expected(2)->required();
    tr->add_option("--component", tr_comp, "chart of the start point, + or -");
    auto* tr_d = tr->add_option("--direction", tr_dir, "direction p q (integers)")->expected(2);
    auto* tr_dr = tr->add_option("--direction-rational", tr_dir_rat,
                                 "direction px/qx py/qy (rationals)")->expected(2);
    tr_d->excludes(tr_dr);
    tr->add_option("--max-crossings", tr_budget, "edge crossing budget");
    tr->callback([&] {
        Surface h(Rational::parse(tr_c));
        Vec2 dir;
        if (!tr_dir.empty())
            dir = parse_int_direction(tr_dir);
        else if (!tr_dir_rat.empty())
            dir = parse_rat_direction(tr_dir_rat);
        else
            throw std::domain_error("trace needs --direction or --direction-rational");
        SurfacePoint start{parse_component(tr_comp),
                           {Rational::parse(tr_start[0]), Rational::parse(tr_start[1])}};
        TraceResult res = trace(h, start, dir, checked_budget(tr_budget));
        emit(trace_json(h, start, dir, res));
    });

    // separatrix
    std::string se_c = "1", se_comp = "+";
    long se_vertex = 0, se_budget = 100;
    std::vector<std::string> se_dir, se_dir_rat;
    auto* se = app.add_subcommand("separatrix", "flow out of a cone point");
    se->add_option("--c", se_c, "surface parameter p/q, at least 1");
    se->add_option("--vertex", se_vertex, "vertex index k")->required();
    se->add_option("--component", se_comp, "chart of the vertex, + or -");
    auto* se_d = se->add_option("--direction", se_dir, "direction p q (integers)")->expected(2);
    auto* se_dr = se->add_option("--direction-rational", se_dir_rat,
                                 "direction px/qx py/qy (rationals)")->expected(2);
    se_d->excludes(se_dr);
    se->add_option("--max-crossings", se_budget, "edge crossing budget");
    se->callback([&] {
        Surface h(Rational::parse(se_c));
        Vec2 dir;
        if (!se_dir.empty())
            dir = parse_int_direction(se_dir);
        else if (!se_dir_rat.empty())
            dir = parse_rat_direction(se_dir_rat);
        else
            throw std::domain_error("separatrix needs --direction or --direction-rational");
        VertexRef origin{parse_component(se_comp), se_vertex};
        TraceResult res = separatrix(h, origin, dir, checked_budget(se_budget));
        emit(separatrix_json(h, origin, dir, res));
    });

    // classify
    std::vector<std::string> cl_dir;
    auto* cl = app.add_subcommand("classify", "parity class of an integer direction");
    cl->add_option("--direction", cl_dir, "direction p q (integers)")->expected(2)->required();
    cl->callback([&] {
        Vec2 d = parse_int_direction(cl_dir);
        emit(classify_json(d.x.num(), d.y.num()));
    });

    // reduce
    std::vector<std::string> rd_dir;
    auto* rd = app.add_subcommand("reduce", "word moving a primitive direction to its base ray");
    rd->add_option("--direction", rd_dir, "direction p q (coprime integers)")
        ->expected(2)
        ->required();
    rd->callback([&] {
        Vec2 d = parse_int_direction(rd_dir);
        emit(reduce_json(d.x.num(), d.y.num()));
    });

    // compare
    std::string cp_c, cp_word, cp_base = "horizontal", cp_start = "canonical", cp_vcomp = "+";
    long cp_budget = 100, cp_vertex = 0, cp_cyl = 1;
    auto* cp = app.add_subcommand(
        "compare", "trace matched directions on S_c and the square surface and compare codes");
    cp->add_option("--c", cp_c, "surface parameter p/q, greater than 1")->required();
    cp->add_option("--word", cp_word, "word over A,B,C,D,E,- applied to the base direction");
    cp->add_option("--base", cp_base, "base ray: horizontal or slope-one");
    cp->add_option("--max-crossings", cp_budget, "edge crossing budget");
    cp->add_option("--start", cp_start, "start anchor: canonical, vertex or core");
    cp->add_option("--vertex", cp_vertex, "vertex index for --start vertex");
    cp->add_option("--vertex-component", cp_vcomp, "chart for --start vertex");
    cp->add_option("--cylinder", cp_cyl, "cylinder index for --start core");
    cp->callback([&] {
        Rational c = Rational::parse(cp_c);
        GroupWord w = parse_word(cp_word);
        Vec2 base = parse_kind(cp_base) == DirectionKind::Horizontal ? Vec2{1, 0} : Vec2{1, 1};
        CompareStart anchor;
        if (cp_start == "canonical") {
            anchor.kind = CompareStart::Kind::Canonical;
        } else if (cp_start == "vertex") {
            anchor.kind = CompareStart::Kind::Vertex;
            anchor.vertex = {parse_component(cp_vcomp), cp_vertex};
        } else if (cp_start == "core") {
            anchor.kind = CompareStart::Kind::CoreCurve;
            anchor.cylinder = cp_cyl;
        } else {
            throw std::domain_error("start anchor must be canonical, vertex or core");
        }
        CompareReport rep = directional_code_compare(w, base, c, anchor, checked_budget(cp_budget));
        if (rep.started) {
            CrossSurfaceReport cross =
                cross_surface_check(rep.trace_c.start_tri, rep.trace_c.code, c, Rational(1));
            emit(compare_json(rep, &cross));
            if (!(rep.full_agreement && cross.feasible)) rc = 1;
        } else {
            emit(compare_json(rep, nullptr));
        }
    });

    // verify
    std::string vf_c = "1", vf_suite = "all";
    long vf_window = 20;
    int vf_threads = 0;
    auto* vf = app.add_subcommand("verify", "re-check the structural claims on a given surface");
    vf->add_option("--c", vf_c, "surface parameter p/q, at least 1");
    vf->add_option("--suite", vf_suite,
                   "all, relations, moduli, parabolic, symmetries or singularities");
    vf->add_option("--window", vf_window, "how far out to check");
    vf->add_option("--threads", vf_threads, "worker threads (0 = library default)");
    vf->callback(
        [&] { rc = run_verify(Rational::parse(vf_c), vf_suite, checked_window(vf_window), vf_threads); });

    // render
    std::string rn_c = "1", rn_what, rn_svg, rn_comp = "+";
    long rn_window = 4, rn_count = 3, rn_budget = 100;
    std::vector<std::string> rn_dir, rn_start;
    auto* rn = app.add_subcommand("render", "draw the surface, a cylinder family or a geodesic");
    rn->add_option("--c", rn_c, "surface parameter p/q, at least 1");
    rn->add_option("--what", rn_what, "surface, cylinders or geodesic")->required();
    rn->add_option("--svg", rn_svg, "output path, or - for stdout")->required();
    rn->add_option("--window", rn_window, "vertex window half-width");
    rn->add_option("--count", rn_count, "cylinders to shade (--what cylinders)");
    rn->add_option("--direction", rn_dir,
                   "cylinder family (one of horizontal, slope-one) or geodesic direction (two "
                   "rationals)")
        ->expected(1, 2);
    rn->add_option("--start", rn_start, "geodesic start point x y (rationals)")->expected(2);
    rn->add_option("--component", rn_comp, "chart of the geodesic start, + or -");
    rn->add_option("--max-crossings", rn_budget, "geodesic crossing budget");
    rn->callback([&] {
        Surface h(Rational::parse(rn_c));
        std::string content;
        if (rn_what == "surface") {
            content = render_surface_svg(h, checked_window(rn_window));
        } else if (rn_what == "cylinders") {
            if (rn_dir.size() != 1)
                throw std::domain_error("--what cylinders needs --direction horizontal|slope-one");
            content = render_cylinders_svg(h, parse_kind(rn_dir[0]), checked_window(rn_count, "count"));
        } else if (rn_what == "geodesic") {
            if (rn_dir.size() != 2)
                throw std::domain_error("--what geodesic needs --direction p q");
            if (rn_start.size() != 2)
                throw std::domain_error("--what geodesic needs --start x y");
            SurfacePoint start{parse_component(rn_comp),
                               {Rational::parse(rn_start[0]), Rational::parse(rn_start[1])}};
            TraceResult res =
                trace(h, start, parse_rat_direction(rn_dir), checked_budget(rn_budget));
            content = render_geodesic_svg(h, res, checked_window(rn_window));
        } else {
            throw std::domain_error("--what must be surface, cylinders or geodesic");
        }
        write_file(rn_svg, content);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
