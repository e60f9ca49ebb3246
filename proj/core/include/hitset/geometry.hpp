#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hitset/errors.hpp"

namespace hitset {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // lexicographic (x, y)
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, const Point& p) { return {s * p.x, s * p.y}; }
};

double dot(const Point& a, const Point& b);
double cross(const Point& a, const Point& b);
double norm(const Point& p);
double dist(const Point& a, const Point& b);
bool is_finite(const Point& p);

// Sign of the signed area of triangle (a,b,c): +1 counterclockwise, -1
// clockwise, 0 collinear. Filtered double evaluation with an exact
// expansion-arithmetic fallback, so the sign is correct for all finite
// inputs.
int orient(const Point& a, const Point& b, const Point& c);

// Signed area determinant as a double (adaptive, same sign as orient).
double orient_value(const Point& a, const Point& b, const Point& c);

struct ConvexPolygon {
    std::vector<Point> vertices;  // counterclockwise, strictly convex

    double area() const;
    Point centroid() const;
    // Closed containment with absolute slack `tol` on each edge line.
    bool contains(const Point& p, double tol = 0.0) const;
    // Signed distance to the boundary, positive inside.
    double boundary_clearance(const Point& p) const;
};

// Deduplicates, enforces counterclockwise order and strips collinear
// middle vertices. Throws invalid_input_error on degenerate input.
ConvexPolygon make_convex_polygon(std::vector<Point> vertices);

// Throws invalid_input_error unless `poly` satisfies the ConvexPolygon
// invariants (>= 3 vertices, strictly convex, counterclockwise).
void validate_polygon(const ConvexPolygon& poly);

struct AffineFrame {
    // p -> linear * p + translation
    std::array<double, 4> linear{1, 0, 0, 1};  // row-major a b / c d
    Point translation{0, 0};
    std::array<double, 4> inv_linear{1, 0, 0, 1};
    Point inv_translation{0, 0};

    Point map(const Point& p) const;
    Point unmap(const Point& p) const;
    double det() const { return linear[0] * linear[3] - linear[1] * linear[2]; }
};

// Frame with the given linear part; throws on singular matrices.
AffineFrame make_frame(const std::array<double, 4>& linear, const Point& translation);
// Frame mapping triangle (s0,s1,s2) onto (d0,d1,d2).
AffineFrame frame_from_triangles(const std::array<Point, 3>& src, const std::array<Point, 3>& dst);

// One tangent line's contact with the polygon: a vertex or a whole edge.
struct SupportSet {
    bool is_edge = false;
    std::size_t first = 0;   // vertex index; for an edge, the CCW-first endpoint
    std::size_t second = 0;  // == first for a vertex support
    Point a;                 // contact point(s)
    Point b;
    Point representative() const;  // vertex, or edge midpoint
};

// The two tangent lines of `poly` parallel to `direction`, each returned as
// its contact set. `lower` is the support in direction of the clockwise
// normal (-dir.y, dir.x) negated; concretely: lower maximizes dot with
// (dir.y, -dir.x), upper maximizes dot with (-dir.y, dir.x).
struct TangentPair {
    SupportSet lower;
    SupportSet upper;
};
TangentPair tangent_touch_sets(const ConvexPolygon& poly, const Point& direction);

// Contact set of the tangent line with outward normal `n` (support set of
// the polygon in direction n). `tie_tol` > 0 treats near-extreme adjacent
// vertices as an edge contact (relative to |edge| * |n|); 0 compares exactly.
SupportSet support_in_direction(const ConvexPolygon& poly, const Point& n, double tie_tol = 0.0);

// Indices of a maximum-area vertex triple, ties broken by lexicographically
// smallest (i,j,k). Brute force; intended for polygons of modest size.
std::array<std::size_t, 3> max_area_inscribed_triangle(const ConvexPolygon& poly);

// True iff `center` lies in `poly` and every edge line is at distance
// >= radius from it.
bool ball_in_body(const Point& center, double radius, const ConvexPolygon& poly);

struct TangentChord {
    Point line_point;  // p_i (triangle vertex)
    Point line_dir;    // direction of L_i (unit)
    Point touch;       // q_i on the opposite tangent L_i'
};

struct NormalizedBody {
    ConvexPolygon polygon;        // in the canonical frame
    AffineFrame frame;            // original -> canonical
    std::array<Point, 3> tin;     // p1, p2, p3 of the canonical triangle
    std::array<TangentChord, 3> tangents;  // (L_i, q_i) for i = 1,2,3
};

// Canonical triangle constants: center at the origin, p1 = (0,-1),
// side sqrt(3), incircle radius 1/2.
std::array<Point, 3> canonical_triangle();

// Affine-normalizes `poly`: the maximum-area inscribed triangle maps onto the
// canonical equilateral triangle, and the q_i touch points are picked on each
// far-side parallel tangent (edge supports take the midpoint).
NormalizedBody normalize_body(const ConvexPolygon& poly);

}  // namespace hitset
