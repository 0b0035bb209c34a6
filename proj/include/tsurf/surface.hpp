#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tsurf/errors.hpp"
#include "tsurf/linear.hpp"

namespace tsurf {

// The surface has two planar pieces glued along their boundaries; each piece is
// its own chart. Minus-chart coordinates are the point-reflection of Plus-chart
// coordinates, so every chart transition is a translation.
enum class Component : std::uint8_t { Plus, Minus };

inline Component other(Component c) { return c == Component::Plus ? Component::Minus : Component::Plus; }
inline char component_char(Component c) { return c == Component::Plus ? '+' : '-'; }

struct VertexRef {
    Component comp;
    long k;
    friend bool operator==(const VertexRef&, const VertexRef&) = default;
    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

std::string vertex_ref_str(const VertexRef& v);  // "(+,0)", "(-,3)"

enum class EdgeKind : std::uint8_t { Boundary, Chord, Diagonal };

// Alphabet of triangulation edges.
//   Boundary k (k in Z): glued pair of polygon boundary edges; one label covers both charts.
//   Chord n (n >= 2):    slope-one segment from vertex 1-n to vertex n, per component.
//   Diagonal n (n >= 1): trapezoid diagonal from vertex 1-n to vertex n+1, per component.
struct EdgeLabel {
    EdgeKind kind;
    long n;
    Component comp;  // normalized to Plus for Boundary labels

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
    friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

inline EdgeLabel boundary_edge(long k) { return {EdgeKind::Boundary, k, Component::Plus}; }
inline EdgeLabel chord_edge(long n, Component c) { return {EdgeKind::Chord, n, c}; }
inline EdgeLabel diagonal_edge(long n, Component c) { return {EdgeKind::Diagonal, n, c}; }

std::string edge_str(const EdgeLabel& e);  // "e0", "s2+", "d1-"

// Triangle of the fixed triangulation: trapezoid n >= 1 of a component, split by
// its diagonal into a right triangle (vertices 1-n, n, n+1) and a left triangle
// (vertices 1-n, n+1, -n). Vertex order is counterclockwise in both charts.
struct TriRef {
    Component comp;
    long n;
    bool right;
    friend bool operator==(const TriRef&, const TriRef&) = default;
    friend auto operator<=>(const TriRef&, const TriRef&) = default;
};

std::string tri_str(const TriRef& t);  // "R1+", "L3-"

// Chart-independent combinatorics of the triangulation.
std::array<VertexRef, 3> tri_vertex_refs(const TriRef& t);
std::array<EdgeLabel, 3> tri_edge_labels(const TriRef& t);  // edge i joins vertices i, i+1 (mod 3)
std::pair<TriRef, TriRef> edge_sides(const EdgeLabel& e);
TriRef across(const TriRef& from, const EdgeLabel& e);
int edge_index_in(const TriRef& t, const EdgeLabel& e);  // -1 when e is not an edge of t
// Incident triangles in counterclockwise sector order around the vertex.
std::vector<TriRef> incident_triangles(const VertexRef& v);
// Endpoint vertex refs of an edge; boundary labels report the chart asked for.
std::pair<VertexRef, VertexRef> edge_endpoint_refs(const EdgeLabel& e, Component chart);

struct SurfacePoint {
    Component comp;
    Vec2 pos;
    friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

enum class DirectionKind : std::uint8_t { Horizontal, SlopeOne };

struct Cylinder {
    DirectionKind direction;
    long index;  // n >= 1
    Rational circumference_sq;
    Rational area;
    Rational modulus;  // area / circumference_sq
};

struct CylinderSignature {
    long index;  // index of the minimal-area cylinder among those inspected
    Rational area;
    int boundary_cone_points;  // cone-point visits along the two boundary circles
};

struct LocateResult {
    enum class Kind : std::uint8_t { Interior, OnEdge, AtVertex } kind;
    std::vector<TriRef> tris;  // 1 (interior), 2 (edge) or the full incident fan (vertex)
    EdgeLabel edge{};          // valid when kind == OnEdge
    VertexRef vertex{};        // valid when kind == AtVertex
};

struct TriangulationEdge {
    EdgeLabel label;
    VertexRef a, b;  // boundary labels report Plus-chart endpoints
};

// Lazy exact model of one surface: parameter c >= 1, memoized vertex orbit,
// gluing translations and the fixed trapezoid triangulation. Logically
// immutable; the vertex cache is internally synchronized.
class Surface {
public:
    explicit Surface(Rational c, long initial_window = 2, long max_window = 1 << 10);

    const Rational& c() const { return c_; }
    long max_window() const { return max_window_; }
    long materialized_window() const;

    // P_k in Plus-chart coordinates; extends the cache on demand, throws
    // window_limit_error beyond the hard cap.
    Vec2 vertex(long k) const;
    Vec2 vertex_point(const VertexRef& v) const;  // chart coordinates

    AffineMap boundary_map() const { return step_; }         // P_k |-> P_{k+1}
    AffineMap reflection() const;                            // (x,y) |-> (-x,y), fixes the vertex set
    AffineMap index_swap_symmetry() const;                   // maps vertex k to vertex 1-k
    AffineMap gluing_transfer(long k) const;                 // Plus chart near edge k -> Minus chart

    Rational chord_level(long n) const;  // y_n - x_n, the slope-one level of chord n (n >= 1)

    std::array<Vec2, 3> tri_coords(const TriRef& t) const;
    std::pair<Vec2, Vec2> edge_coords(const EdgeLabel& e, Component chart) const;

    LocateResult locate(const SurfacePoint& p) const;

    // Edges whose label index lies in the window: boundary k in [-window, window],
    // chords and diagonals with n <= window. Sorted by (kind, chart, index).
    std::vector<TriangulationEdge> triangulation(long window) const;
    std::vector<std::vector<VertexRef>> singularity_classes(long window) const;
    std::vector<Cylinder> cylinders(DirectionKind dir, long count) const;
    CylinderSignature smallest_cylinder_signature(DirectionKind dir) const;

private:
    void extend_to(long k) const;  // requires cache_mu_ held

    Rational c_;
    long max_window_;
    AffineMap step_, step_inv_;

    mutable std::mutex cache_mu_;
    mutable std::vector<Vec2> pos_;  // pos_[k] = P_k
    mutable std::vector<Vec2> neg_;  // neg_[k] = P_{-k}
};

Surface build_surface(Rational c, long initial_window = 2, long max_window = 1 << 10);

}  // namespace tsurf
