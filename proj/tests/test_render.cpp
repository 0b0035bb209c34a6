#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "tsurf/flow.hpp"
#include "tsurf/surface.hpp"
#include "tsurf/svg.hpp"

using namespace tsurf;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::string fmt3(double v) {
    v = v * 1.0 + 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string vertex_circle(double cx, double cy) {
    return "<circle cx=\"" + fmt3(cx) + "\" cy=\"" + fmt3(cy) +
           "\" r=\"3.000\" fill=\"#111111\" stroke=\"none\"/>";
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliResult {
    int status;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(TSURF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("surface picture pins every vertex circle to the parabola grid") {
    Surface h(q(1));
    std::string svg = render_surface_svg(h, 4);

    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("viewBox=\"-160.000 -520.000 320.000 1040.000\"") != std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");

    for (long n = -4; n <= 4; ++n) {
        // One chart's vertices at (30n, -30n^2), the mirror chart's negated.
        CHECK(svg.find(vertex_circle(30.0 * n, -30.0 * n * n)) != std::string::npos);
        CHECK(svg.find(vertex_circle(-30.0 * n, 30.0 * n * n)) != std::string::npos);
    }
    // 9 vertices per chart; the origin pair shares one rendered position.
    CHECK(count_of(svg, "r=\"3.000\"") == 18);

    // Gluing labels cover exactly the window's boundary edges.
    CHECK(svg.find(">e0</text>") != std::string::npos);
    CHECK(svg.find(">e-4</text>") != std::string::npos);
    CHECK(svg.find(">e3</text>") != std::string::npos);
    CHECK(svg.find(">e4</text>") == std::string::npos);
}

TEST_CASE("slope-one shading follows the crossing trapezoids") {
    Surface h(q(5, 4));
    std::string svg = render_cylinders_svg(h, DirectionKind::SlopeOne, 2);

    CHECK(svg.find("<polygon points=\"0.000,0.000 30.000,-30.000 75.000,-135.000 "
                   "-30.000,-30.000\" fill=\"#4e79a7\" fill-opacity=\"0.45\" "
                   "stroke=\"#4e79a7\" stroke-width=\"1\"/>") != std::string::npos);
    CHECK(svg.find("<polygon points=\"0.000,0.000 -30.000,30.000 -75.000,135.000 "
                   "30.000,30.000\" fill=\"#4e79a7\"") != std::string::npos);
    CHECK(svg.find("<polygon points=\"-30.000,-30.000 75.000,-135.000 157.500,-367.500 "
                   "-75.000,-135.000\" fill=\"#f28e2b\"") != std::string::npos);
    CHECK(count_of(svg, "fill-opacity=\"0.45\"") == 4);  // two cylinders, two charts
}

TEST_CASE("geodesic picture draws one polyline per chart segment") {
    Surface h(q(1));
    TraceResult res = trace(h, {Component::Plus, {q(1, 2), q(3, 4)}}, {q(0), q(1)}, 4);
    std::string svg = render_geodesic_svg(h, res, 4);
    CHECK(svg.find("<polyline points=\"15.000,-22.500 15.000,-195.000\" fill=\"none\" "
                   "stroke=\"#c0392b\" stroke-width=\"1.6\"/>") != std::string::npos);
    CHECK(count_of(svg, "#c0392b") == 1);  // budget stop: no terminal marker

    TraceResult hit = separatrix(h, {Component::Plus, 1}, {q(-1), q(0)}, 10);
    std::string hsvg = render_geodesic_svg(h, hit, 4);
    CHECK(hsvg.find("<circle cx=\"-30.000\" cy=\"-30.000\" r=\"4.000\" fill=\"none\" "
                    "stroke=\"#c0392b\" stroke-width=\"1.6\"/>") != std::string::npos);
}

TEST_CASE("rendered bytes match the checked-in goldens") {
    std::string dir = TSURF_GOLDEN_DIR;
    CHECK(render_surface_svg(Surface(q(1)), 4) == slurp(dir + "/surface_c1_w4.svg"));
    CHECK(render_cylinders_svg(Surface(q(5, 4)), DirectionKind::SlopeOne, 3) ==
          slurp(dir + "/cylinders_slopeone_c54_w3.svg"));
}

TEST_CASE("command line: classify prints its verdict and exits cleanly") {
    CliResult r = run_cli("classify --direction 2 1");
    CHECK(r.status == 0);
    CHECK(r.out == "{\n  \"class\": \"vertical-like\",\n  \"saddle_connections\": false\n}\n");
}

TEST_CASE("command line: usage errors exit with status 2") {
    CHECK(run_cli("classify --direction 0 0").status == 2);
    CHECK(run_cli("surface --c 1/2").status == 2);   // parameter below 1
    CHECK(run_cli("surface --c abc").status == 2);   // unparseable rational
    CHECK(run_cli("render --what nonsense --svg -").status == 2);
    CHECK(run_cli("no-such-command").status == 2);
}

TEST_CASE("command line: verify and render round-trip") {
    CliResult v = run_cli("verify --c 5/4 --suite moduli --window 8");
    CHECK(v.status == 0);
    CHECK(v.out.find("\"passed\": true") != std::string::npos);

    CliResult r = run_cli("render --what surface --window 2 --svg -");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("<svg xmlns", 0) == 0);
    CHECK(r.out.find("</svg>") != std::string::npos);
}
