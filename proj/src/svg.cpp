#include "tsurf/svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace tsurf {

namespace {

constexpr double kScale = 30.0;

std::string fmt(double v) {
    v = v * 1.0 + 0.0;  // flush -0.0 to +0.0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct ScreenPoint {
    double x, y;
};

ScreenPoint screen(const Vec2& p) { return {kScale * p.x.to_double(), -kScale * p.y.to_double()}; }

std::string points_attr(const std::vector<Vec2>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        ScreenPoint sp = screen(pts[i]);
        if (i) s += ' ';
        s += fmt(sp.x) + "," + fmt(sp.y);
    }
    return s;
}

class Canvas {
public:
    void line(const Vec2& a, const Vec2& b, const std::string& style) {
        ScreenPoint sa = screen(a), sb = screen(b);
        body_ << "<line x1=\"" << fmt(sa.x) << "\" y1=\"" << fmt(sa.y) << "\" x2=\"" << fmt(sb.x)
              << "\" y2=\"" << fmt(sb.y) << "\" " << style << "/>\n";
    }
    void polygon(const std::vector<Vec2>& pts, const std::string& style) {
        body_ << "<polygon points=\"" << points_attr(pts) << "\" " << style << "/>\n";
    }
    void polyline(const std::vector<Vec2>& pts, const std::string& style) {
        body_ << "<polyline points=\"" << points_attr(pts) << "\" " << style << "/>\n";
    }
    void circle(const Vec2& p, double r, const std::string& style) {
        ScreenPoint sp = screen(p);
        body_ << "<circle cx=\"" << fmt(sp.x) << "\" cy=\"" << fmt(sp.y) << "\" r=\"" << fmt(r)
              << "\" " << style << "/>\n";
    }
    void text(const Vec2& p, double dx, double dy, const std::string& s) {
        ScreenPoint sp = screen(p);
        body_ << "<text x=\"" << fmt(sp.x + dx) << "\" y=\"" << fmt(sp.y + dy)
              << "\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"middle\">" << s
              << "</text>\n";
    }

    // Viewport sized to hold both charts at boundary window W.
    std::string finish(const Surface& h, long window) const {
        double xw = kScale * h.vertex(window).x.to_double();
        double yw = kScale * h.vertex(window).y.to_double();
        double m = 40.0;
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(-xw - m) << " "
            << fmt(-yw - m) << " " << fmt(2 * xw + 2 * m) << " " << fmt(2 * yw + 2 * m) << "\">\n";
        out << body_.str();
        out << "</svg>\n";
        return out.str();
    }

private:
    std::ostringstream body_;
};

Vec2 chart_point(const Surface& h, Component comp, long k) { return h.vertex_point({comp, k}); }

// Region between the boundary chain and the horizontal line through the
// outermost vertices; drawn for each chart.
std::vector<Vec2> chart_region(const Surface& h, Component comp, long window) {
    std::vector<Vec2> pts;
    for (long k = -window; k <= window; ++k) pts.push_back(chart_point(h, comp, k));
    return pts;  // closing edge P_W -> P_-W is horizontal: y(-W) = y(W)
}

void draw_background(Canvas& cv, const Surface& h, long window, bool label_edges) {
    for (Component comp : {Component::Plus, Component::Minus}) {
        cv.polygon(chart_region(h, comp, window),
                   "fill=\"#f2f2ef\" stroke=\"none\"");
    }
    for (Component comp : {Component::Plus, Component::Minus}) {
        // Interior chords and diagonals, thin.
        for (long n = 2; n <= window; ++n)
            cv.line(chart_point(h, comp, 1 - n), chart_point(h, comp, n),
                    "stroke=\"#999999\" stroke-width=\"1\"");
        for (long n = 1; n + 1 <= window; ++n)
            cv.line(chart_point(h, comp, n + 1), chart_point(h, comp, 1 - n),
                    "stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
        // Boundary edges, thick; matching labels mark the gluing.
        for (long k = -window; k < window; ++k) {
            Vec2 a = chart_point(h, comp, k), b = chart_point(h, comp, k + 1);
            cv.line(a, b, "stroke=\"#333333\" stroke-width=\"2\"");
            if (label_edges) {
                Vec2 mid = Rational(1, 2) * (a + b);
                double dy = comp == Component::Plus ? 14.0 : -6.0;
                cv.text(mid, 0.0, dy, "e" + std::to_string(k));
            }
        }
        for (long k = -window; k <= window; ++k)
            cv.circle(chart_point(h, comp, k), 3.0, "fill=\"#111111\" stroke=\"none\"");
    }
}

std::array<Vec2, 4> cylinder_quad(const Surface& h, Component comp, DirectionKind direction,
                                  long n) {
    auto p = [&](long k) { return chart_point(h, comp, k); };
    if (direction == DirectionKind::Horizontal) return {p(1 - n), p(n - 1), p(n), p(-n)};
    return {p(1 - n), p(n), p(n + 1), p(-n)};
}

const char* palette(long n) {
    static const char* colors[4] = {"#4e79a7", "#f28e2b", "#76b7b2", "#e15759"};
    return colors[(n - 1) % 4];
}

}  // namespace

std::string render_surface_svg(const Surface& h, long window) {
    Canvas cv;
    draw_background(cv, h, window, true);
    return cv.finish(h, window);
}

std::string render_cylinders_svg(const Surface& h, DirectionKind direction, long count) {
    long window = count + 1;
    Canvas cv;
    draw_background(cv, h, window, false);
    for (long n = 1; n <= count; ++n) {
        for (Component comp : {Component::Plus, Component::Minus}) {
            auto quad = cylinder_quad(h, comp, direction, n);
            cv.polygon({quad.begin(), quad.end()},
                       std::string("fill=\"") + palette(n) + "\" fill-opacity=\"0.45\" " +
                           "stroke=\"" + palette(n) + "\" stroke-width=\"1\"");
        }
    }
    return cv.finish(h, window);
}

std::string render_geodesic_svg(const Surface& h, const TraceResult& result, long window) {
    Canvas cv;
    draw_background(cv, h, window, false);
    for (const ChartSegment& seg : result.segments)
        cv.polyline({seg.from, seg.to},
                    "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.6\"");
    if (result.terminal == TerminalKind::HitSingularity)
        cv.circle(result.end.pos, 4.0, "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.6\"");
    return cv.finish(h, window);
}

}  // namespace tsurf
