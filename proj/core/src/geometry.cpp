#include "hitset/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hitset {

double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
double norm(const Point& p) { return std::hypot(p.x, p.y); }
double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }
bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

namespace {

// Error-free transformations (Dekker/Knuth). Each returns the rounded
// result in `x` and the exact roundoff in `y`, so a op b == x + y exactly.
inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bv = x - a;
    double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    double bv = a - x;
    double av = x + bv;
    y = (a - av) - (b - bv);
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

// Grows a nonoverlapping expansion (increasing magnitude) by one scalar.
inline void grow_expansion(std::vector<double>& e, double b) {
    double q = b;
    std::size_t out = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        double sum, err;
        two_sum(q, e[i], sum, err);
        if (err != 0.0) e[out++] = err;
        q = sum;
    }
    e.resize(out);
    e.push_back(q);
}

inline int expansion_sign(const std::vector<double>& e) {
    for (std::size_t i = e.size(); i-- > 0;) {
        if (e[i] > 0.0) return 1;
        if (e[i] < 0.0) return -1;
    }
    return 0;
}

inline double expansion_estimate(const std::vector<double>& e) {
    double s = 0.0;
    for (double c : e) s += c;  // ascending magnitude
    return s;
}

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;

// Exact expansion of the orientation determinant
// (a-c) x (b-c) = (ax-cx)(by-cy) - (ay-cy)(bx-cx).
std::vector<double> orient_expansion(const Point& a, const Point& b, const Point& c) {
    double acx, acxt, acy, acyt, bcx, bcxt, bcy, bcyt;
    two_diff(a.x, c.x, acx, acxt);
    two_diff(a.y, c.y, acy, acyt);
    two_diff(b.x, c.x, bcx, bcxt);
    two_diff(b.y, c.y, bcy, bcyt);

    std::vector<double> e;
    e.reserve(16);
    auto add_product = [&e](double u, double v, double sign) {
        double hi, lo;
        two_product(u, v, hi, lo);
        if (lo != 0.0) grow_expansion(e, sign * lo);
        if (hi != 0.0) grow_expansion(e, sign * hi);
    };
    add_product(acx, bcy, +1.0);
    add_product(acx, bcyt, +1.0);
    add_product(acxt, bcy, +1.0);
    add_product(acxt, bcyt, +1.0);
    add_product(acy, bcx, -1.0);
    add_product(acy, bcxt, -1.0);
    add_product(acyt, bcx, -1.0);
    add_product(acyt, bcxt, -1.0);
    return e;
}

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c))
        throw invalid_input_error("orient: non-finite coordinates");
    double detleft = (a.x - c.x) * (b.y - c.y);
    double detright = (a.y - c.y) * (b.x - c.x);
    double det = detleft - detright;
    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = -detleft - detright;
    } else {
        return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    }
    if (std::abs(det) >= kCcwErrBound * detsum) return det > 0.0 ? 1 : -1;
    return expansion_sign(orient_expansion(a, b, c));
}

double orient_value(const Point& a, const Point& b, const Point& c) {
    double detleft = (a.x - c.x) * (b.y - c.y);
    double detright = (a.y - c.y) * (b.x - c.x);
    double det = detleft - detright;
    double detsum = std::abs(detleft) + std::abs(detright);
    if (std::abs(det) >= kCcwErrBound * detsum) return det;
    return expansion_estimate(orient_expansion(a, b, c));
}

namespace {

// Exact sign of dot(vi - vj, n); used for support-set comparisons so that
// tangent contacts are consistent on symmetric polygons.
int support_compare(const Point& vi, const Point& vj, const Point& n) {
    double dx, dxt, dy, dyt;
    two_diff(vi.x, vj.x, dx, dxt);
    two_diff(vi.y, vj.y, dy, dyt);
    std::vector<double> e;
    e.reserve(8);
    auto add_product = [&e](double u, double v) {
        double hi, lo;
        two_product(u, v, hi, lo);
        if (lo != 0.0) grow_expansion(e, lo);
        if (hi != 0.0) grow_expansion(e, hi);
    };
    add_product(dx, n.x);
    add_product(dxt, n.x);
    add_product(dy, n.y);
    add_product(dyt, n.y);
    return expansion_sign(e);
}

}  // namespace

double ConvexPolygon::area() const {
    double s = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % vertices.size()];
        s += cross(p, q);
    }
    return 0.5 * s;
}

Point ConvexPolygon::centroid() const {
    double a6 = 0.0;
    Point c{0, 0};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % vertices.size()];
        double w = cross(p, q);
        a6 += w;
        c.x += (p.x + q.x) * w;
        c.y += (p.y + q.y) * w;
    }
    return {c.x / (3.0 * a6), c.y / (3.0 * a6)};
}

bool ConvexPolygon::contains(const Point& p, double tol) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& u = vertices[i];
        const Point& v = vertices[(i + 1) % vertices.size()];
        double c = cross(v - u, p - u);
        if (c < -tol * dist(u, v)) return false;
    }
    return true;
}

double ConvexPolygon::boundary_clearance(const Point& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& u = vertices[i];
        const Point& v = vertices[(i + 1) % vertices.size()];
        best = std::min(best, cross(v - u, p - u) / dist(u, v));
    }
    return best;
}

ConvexPolygon make_convex_polygon(std::vector<Point> vertices) {
    for (const Point& p : vertices)
        if (!is_finite(p)) throw invalid_input_error("polygon: non-finite vertex");
    // drop consecutive duplicates
    std::vector<Point> v;
    for (const Point& p : vertices) {
        if (v.empty() || !(v.back() == p)) v.push_back(p);
    }
    while (v.size() > 1 && v.front() == v.back()) v.pop_back();
    if (v.size() < 3) throw invalid_input_error("polygon: fewer than 3 distinct vertices");

    double a2 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) a2 += cross(v[i], v[(i + 1) % v.size()]);
    if (a2 == 0.0) throw invalid_input_error("polygon: zero area");
    if (a2 < 0.0) std::reverse(v.begin(), v.end());

    // strip collinear middle vertices
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& prev = v[(i + v.size() - 1) % v.size()];
            const Point& next = v[(i + 1) % v.size()];
            if (orient(prev, v[i], next) == 0) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    ConvexPolygon poly{std::move(v)};
    validate_polygon(poly);
    return poly;
}

void validate_polygon(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 3) throw invalid_input_error("polygon: fewer than 3 vertices");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_finite(v[i])) throw invalid_input_error("polygon: non-finite vertex");
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const Point& c = v[(i + 2) % v.size()];
        if (orient(a, b, c) <= 0)
            throw invalid_input_error("polygon: not strictly convex counterclockwise");
    }
}

Point AffineFrame::map(const Point& p) const {
    return {linear[0] * p.x + linear[1] * p.y + translation.x,
            linear[2] * p.x + linear[3] * p.y + translation.y};
}

Point AffineFrame::unmap(const Point& p) const {
    double qx = p.x - translation.x;
    double qy = p.y - translation.y;
    return {inv_linear[0] * qx + inv_linear[1] * qy,
            inv_linear[2] * qx + inv_linear[3] * qy};
}

AffineFrame make_frame(const std::array<double, 4>& linear, const Point& translation) {
    double d = linear[0] * linear[3] - linear[1] * linear[2];
    if (d == 0.0 || !std::isfinite(d)) throw invalid_input_error("frame: singular linear part");
    AffineFrame f;
    f.linear = linear;
    f.translation = translation;
    f.inv_linear = {linear[3] / d, -linear[1] / d, -linear[2] / d, linear[0] / d};
    f.inv_translation = {0, 0};
    return f;
}

AffineFrame frame_from_triangles(const std::array<Point, 3>& src, const std::array<Point, 3>& dst) {
    Point s1 = src[1] - src[0], s2 = src[2] - src[0];
    Point d1 = dst[1] - dst[0], d2 = dst[2] - dst[0];
    double det = cross(s1, s2);
    if (det == 0.0 || !std::isfinite(det))
        throw invalid_input_error("frame: degenerate source triangle");
    // A = D * S^{-1}
    std::array<double, 4> a{
        (d1.x * s2.y - d2.x * s1.y) / det, (d2.x * s1.x - d1.x * s2.x) / det,
        (d1.y * s2.y - d2.y * s1.y) / det, (d2.y * s1.x - d1.y * s2.x) / det};
    Point t{dst[0].x - (a[0] * src[0].x + a[1] * src[0].y),
            dst[0].y - (a[2] * src[0].x + a[3] * src[0].y)};
    return make_frame(a, t);
}

Point SupportSet::representative() const {
    if (!is_edge) return a;
    return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
}

SupportSet support_in_direction(const ConvexPolygon& poly, const Point& n, double tie_tol) {
    const auto& v = poly.vertices;
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (support_compare(v[i], v[best], n) > 0) best = i;
    }
    std::size_t prev = (best + v.size() - 1) % v.size();
    std::size_t next = (best + 1) % v.size();
    auto tied = [&](std::size_t i) {
        if (tie_tol <= 0.0) return support_compare(v[i], v[best], n) == 0;
        double gap = std::abs(dot(v[i] - v[best], n));
        return gap <= tie_tol * dist(v[i], v[best]) * norm(n);
    };
    SupportSet s;
    if (tied(next)) {
        s.is_edge = true;
        s.first = best;
        s.second = next;
        s.a = v[best];
        s.b = v[next];
    } else if (tied(prev)) {
        s.is_edge = true;
        s.first = prev;
        s.second = best;
        s.a = v[prev];
        s.b = v[best];
    } else {
        s.first = s.second = best;
        s.a = s.b = v[best];
    }
    return s;
}

TangentPair tangent_touch_sets(const ConvexPolygon& poly, const Point& direction) {
    if (direction.x == 0.0 && direction.y == 0.0)
        throw invalid_input_error("tangent_touch_sets: zero direction");
    if (!is_finite(direction)) throw invalid_input_error("tangent_touch_sets: bad direction");
    Point n_low{direction.y, -direction.x};
    Point n_up{-direction.y, direction.x};
    return {support_in_direction(poly, n_low), support_in_direction(poly, n_up)};
}

std::array<std::size_t, 3> max_area_inscribed_triangle(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    std::array<std::size_t, 3> best{0, 1, 2};
    double best_area = -1.0;
    for (std::size_t i = 0; i + 2 < v.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < v.size(); ++j)
            for (std::size_t k = j + 1; k < v.size(); ++k) {
                double a = std::abs(orient_value(v[i], v[j], v[k]));
                if (a > best_area) {
                    best_area = a;
                    best = {i, j, k};
                }
            }
    return best;
}

bool ball_in_body(const Point& center, double radius, const ConvexPolygon& poly) {
    if (radius < 0.0 || !std::isfinite(radius) || !is_finite(center))
        throw invalid_input_error("ball_in_body: bad center or radius");
    return poly.boundary_clearance(center) >= radius;
}

std::array<Point, 3> canonical_triangle() {
    const double h = std::sqrt(3.0) / 2.0;
    return {Point{0.0, -1.0}, Point{h, 0.5}, Point{-h, 0.5}};
}

NormalizedBody normalize_body(const ConvexPolygon& poly) {
    validate_polygon(poly);
    auto idx = max_area_inscribed_triangle(poly);
    std::array<Point, 3> src{poly.vertices[idx[0]], poly.vertices[idx[1]], poly.vertices[idx[2]]};
    std::array<Point, 3> dst = canonical_triangle();
    AffineFrame frame = frame_from_triangles(src, dst);

    std::vector<Point> mapped;
    mapped.reserve(poly.vertices.size());
    for (const Point& p : poly.vertices) mapped.push_back(frame.map(p));

    NormalizedBody body;
    body.frame = frame;
    body.polygon = ConvexPolygon{std::move(mapped)};
    try {
        validate_polygon(body.polygon);
    } catch (const invalid_input_error&) {
        body.polygon = make_convex_polygon(body.polygon.vertices);
    }
    body.tin = {frame.map(src[0]), frame.map(src[1]), frame.map(src[2])};

    for (int i = 0; i < 3; ++i) {
        const Point& pi = body.tin[static_cast<std::size_t>(i)];
        const Point& pj = body.tin[static_cast<std::size_t>((i + 1) % 3)];
        const Point& pk = body.tin[static_cast<std::size_t>((i + 2) % 3)];
        Point dir = pk - pj;
        double len = norm(dir);
        dir = {dir.x / len, dir.y / len};
        double plen = norm(pi);
        Point inward{-pi.x / plen, -pi.y / plen};  // from p_i towards the far tangent
        // tolerant tie detection: canonical coordinates are irrational, so a
        // symmetric far edge must still resolve to its midpoint
        SupportSet far = support_in_direction(body.polygon, inward, 1e-9);
        body.tangents[static_cast<std::size_t>(i)] = TangentChord{pi, dir, far.representative()};
    }
    return body;
}

}  // namespace hitset
