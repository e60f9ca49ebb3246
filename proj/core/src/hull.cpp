#include "hitset/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hitset {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelEps = 1e-9;
}  // namespace

SeparatedFrame make_separated_frame(const DirectedLine& line) {
    double len = norm(line.dir);
    if (len == 0.0 || !std::isfinite(len) || !is_finite(line.anchor))
        throw invalid_input_error("separated frame: bad line");
    double ux = line.dir.x / len, uy = line.dir.y / len;
    // rotation by -theta maps dir to (1,0); left side (cross > 0) -> y > 0
    std::array<double, 4> rot{ux, uy, -uy, ux};
    Point t{-(rot[0] * line.anchor.x + rot[1] * line.anchor.y),
            -(rot[2] * line.anchor.x + rot[3] * line.anchor.y)};
    SeparatedFrame f;
    f.line = DirectedLine{line.anchor, {ux, uy}};
    f.to_local = make_frame(rot, t);
    return f;
}

bool disk_feasible(const Point& q, double t, const std::vector<Point>& pts) {
    if (!(t > 0.0) || !std::isfinite(t)) throw invalid_input_error("disk_feasible: t <= 0");
    if (!(q.y > 0.0)) throw invalid_input_error("disk_feasible: q not above the axis");
    if (q.y > t) return false;

    const double pi = std::numbers::pi;
    double alpha = std::asin(std::min(1.0, q.y / t));
    double theta1 = pi + alpha, theta2 = 2.0 * pi - alpha;

    std::vector<std::pair<double, double>> excluded;
    for (const Point& p : pts) {
        double d = dist(p, q);
        if (d == 0.0) continue;       // q itself never blocks (closed constraint)
        if (d >= 2.0 * t) continue;   // cannot exclude any center
        double phi = std::atan2(p.y - q.y, p.x - q.x);
        double beta = std::acos(std::clamp(d / (2.0 * t), -1.0, 1.0));
        for (int k = 0; k <= 1; ++k) {
            double lo = phi - beta + 2.0 * pi * k;
            double hi = phi + beta + 2.0 * pi * k;
            if (hi <= theta1 || lo >= theta2) continue;
            excluded.emplace_back(lo, hi);
        }
    }
    std::sort(excluded.begin(), excluded.end());
    double cur = theta1;
    for (const auto& [lo, hi] : excluded) {
        if (cur > theta2) return false;
        if (lo >= cur) return true;  // open arcs cannot cover cur
        cur = std::max(cur, hi);
    }
    return cur <= theta2;
}

namespace {

// True iff pts[qi] lies on the lower convex chain: some non-vertical line
// through it has every point on or above. Exact slope LP via orient.
bool on_lower_chain(std::size_t qi, const std::vector<Point>& pts) {
    const Point& q = pts[qi];
    std::optional<std::size_t> best_left, best_right;  // max slope left, min slope right
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == qi) continue;
        const Point& p = pts[i];
        if (p.x < q.x) {
            if (!best_left || orient(q, pts[*best_left], p) > 0) best_left = i;
        } else if (p.x > q.x) {
            if (!best_right || orient(q, pts[*best_right], p) < 0) best_right = i;
        } else if (p.y < q.y) {
            return false;  // a point strictly below q on the same vertical
        }
    }
    if (!best_left || !best_right) return true;
    return orient(q, pts[*best_right], pts[*best_left]) >= 0;
}

std::vector<Point> clip_halfplane(std::vector<Point> poly, const Point& n, double rhs) {
    // keep {c : n.c <= rhs}
    std::vector<Point> out;
    std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % m];
        double da = dot(n, a) - rhs;
        double db = dot(n, b) - rhs;
        if (da <= 0.0) {
            out.push_back(a);
            if (db > 0.0) {
                double s = da / (da - db);
                out.push_back({a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)});
            }
        } else if (db <= 0.0) {
            double s = da / (da - db);
            out.push_back({a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)});
        }
    }
    return out;
}

}  // namespace

std::optional<ExtendedScale> t_max(std::size_t q_index, const std::vector<Point>& pts) {
    if (q_index >= pts.size()) throw invalid_input_error("t_max: q not in the point set");
    const Point& q = pts[q_index];
    if (!(q.y > 0.0)) throw invalid_input_error("t_max: q not above the axis");

    if (on_lower_chain(q_index, pts)) return kInf;

    double scale = 1.0;
    for (const Point& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    // circumradii of non-collinear triples are bounded by ~diam^3 / min-area
    double big = std::min(1e18, std::max(1e6, 64.0 * scale * scale * scale));
    double slack = kRelEps * scale;

    std::vector<Point> region{{-big, 0}, {-big, -big}, {big, -big}, {big, 0}};
    for (const Point& p : pts) {
        if (p == q) continue;
        Point n{2.0 * (p.x - q.x), 2.0 * (p.y - q.y)};
        double rhs = dot(p, p) - dot(q, q) + slack * norm(n);
        region = clip_halfplane(std::move(region), n, rhs);
        if (region.empty()) return std::nullopt;
    }
    double best = 0.0;
    for (const Point& v : region) best = std::max(best, dist(v, q));
    if (best <= 0.0) return std::nullopt;
    return best;
}

LocalBody make_local_body(const ConvexPolygon& poly, int boundary_samples) {
    validate_polygon(poly);
    if (!poly.contains({0, 0}) || poly.boundary_clearance({0, 0}) <= 0.0)
        throw invalid_input_error("local body: reference point not interior");
    LocalBody body;
    body.poly = poly;
    const auto& v = poly.vertices;
    double perimeter = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) perimeter += dist(v[i], v[(i + 1) % v.size()]);
    body.contacts = v;
    if (boundary_samples > 0) {
        double step = perimeter / boundary_samples;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % v.size()];
            double len = dist(a, b);
            int k = static_cast<int>(len / step);
            for (int s = 1; s <= k; ++s) {
                double u = static_cast<double>(s) / (k + 1);
                body.contacts.push_back({a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)});
            }
        }
    }
    for (const Point& p : v) body.max_radius = std::max(body.max_radius, norm(p));
    return body;
}

bool homothet_contains(const LocalBody& body, double scale, const Point& ref_local,
                       const Point& p_local) {
    Point u{(p_local.x - ref_local.x) / scale, (p_local.y - ref_local.y) / scale};
    return body.poly.contains(u, 1e-9);
}

namespace {

// strictly inside with early exit on the first separating edge
bool strictly_inside(const ConvexPolygon& poly, const Point& p, double tol) {
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        if (cross(b - a, p - a) <= tol * dist(a, b)) return false;
    }
    return true;
}

}  // namespace

bool homothet_feasible(const Point& q, double t, const std::vector<Point>& pts,
                       const LocalBody& body) {
    if (!(t > 0.0) || !std::isfinite(t)) throw invalid_input_error("homothet_feasible: t <= 0");
    if (!(q.y > 0.0)) throw invalid_input_error("homothet_feasible: q not above the axis");
    const double block_tol = 1e-9;  // boundary contact does not block
    double reach = t * body.max_radius * 2.0;
    for (const Point& s : body.contacts) {
        Point b{q.x - t * s.x, q.y - t * s.y};
        if (b.y > 0.0) continue;  // reference must sit on the L+ side
        bool blocked = false;
        for (const Point& p : pts) {
            if (std::abs(p.x - q.x) > reach || std::abs(p.y - q.y) > reach) continue;
            Point u{(p.x - b.x) / t, (p.y - b.y) / t};
            if (strictly_inside(body.poly, u, block_tol)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) return true;
    }
    return false;
}

std::optional<ExtendedScale> homothet_scale_max(std::size_t q_index,
                                                const std::vector<Point>& pts,
                                                const LocalBody& body, double scale_cap) {
    if (q_index >= pts.size()) throw invalid_input_error("homothet_scale_max: bad index");
    const Point& q = pts[q_index];
    if (!(q.y > 0.0)) throw invalid_input_error("homothet_scale_max: q not above the axis");

    if (homothet_feasible(q, scale_cap, pts, body)) return kInf;

    // geometric probe ladder; the step must be fine enough not to straddle a
    // narrow feasible window [r_q, t(q)]
    const double step = std::exp2(1.0 / 8.0);
    double hi = scale_cap;  // infeasible
    double lo = 0.0;
    double probe = scale_cap / step;
    double floor_scale = 0.5 * q.y / body.max_radius;  // below this q is unreachable
    bool found = false;
    while (probe > floor_scale) {
        if (homothet_feasible(q, probe, pts, body)) {
            lo = probe;
            found = true;
            break;
        }
        hi = probe;
        probe /= step;
    }
    if (!found) return std::nullopt;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (homothet_feasible(q, mid, pts, body))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

HullReduction finish_reduction(HullReduction red) {
    // group scale classes: decreasing, infinity first, near-equal merged
    std::vector<double> finite;
    bool has_inf = false;
    for (const auto& t : red.tval) {
        if (!t) continue;
        if (std::isinf(*t))
            has_inf = true;
        else
            finite.push_back(*t);
    }
    std::sort(finite.begin(), finite.end(), std::greater<>());
    red.radii.clear();
    if (has_inf) red.radii.push_back(kInf);
    for (double t : finite) {
        if (!red.radii.empty() && std::isfinite(red.radii.back()) &&
            std::abs(red.radii.back() - t) <= kRelEps * std::max(std::abs(red.radii.back()), 1.0))
            continue;
        red.radii.push_back(t);
    }

    auto row_of = [&](double t) -> std::int64_t {
        if (std::isinf(t)) return 0;
        for (std::size_t j = has_inf ? 1 : 0; j < red.radii.size(); ++j) {
            if (std::abs(red.radii[j] - t) <= kRelEps * std::max(std::abs(red.radii[j]), 1.0))
                return static_cast<std::int64_t>(j);
        }
        return static_cast<std::int64_t>(red.radii.size());  // unreachable
    };

    std::int64_t top_row = static_cast<std::int64_t>(red.radii.size());
    red.pi.clear();
    for (std::size_t i = 0; i < red.kept.size(); ++i) {
        std::int64_t row = red.tval[i] ? row_of(*red.tval[i]) : top_row;
        red.pi.push_back({static_cast<std::int64_t>(i), row});
    }
    std::int64_t n = static_cast<std::int64_t>(red.kept.size());
    red.lattice_extent = next_pow2(n + 1);
    // The lattice (and every mapped object) is restricted to Q: points
    // outside Q would share the top row, and a strip holding only such
    // points could defeat the lowest-point property. Every disk that hits P
    // hits Q, so hitting correctness never needs them.
    std::vector<GridPoint> lattice_pts;
    for (std::size_t i = 0; i < red.kept.size(); ++i)
        if (red.tval[i]) lattice_pts.push_back(red.pi[i]);
    red.index = build_lattice_index(lattice_pts, red.lattice_extent);
    red.inverse_.clear();
    for (std::size_t i = 0; i < red.pi.size(); ++i) red.inverse_.emplace(red.pi[i], i);
    return red;
}

std::optional<std::size_t> HullReduction::pi_inverse(const GridPoint& g) const {
    auto it = inverse_.find(g);
    if (it == inverse_.end()) return std::nullopt;
    return it->second;
}

namespace {

// Shared construction: local mapping, vertical dedup (keep min local y),
// x-order. Fills everything except tval/pi.
HullReduction start_reduction(const std::vector<Point>& pts, const SeparatedFrame& frame) {
    if (pts.empty()) throw invalid_input_error("reduction: empty point set");
    HullReduction red;
    red.frame = frame;

    std::vector<std::pair<Point, std::size_t>> local;
    local.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Point l = frame.local(pts[i]);
        if (!(l.y > 0.0))
            throw invalid_input_error("reduction: point not strictly on the L- side");
        local.emplace_back(l, i);
    }
    std::sort(local.begin(), local.end(), [](const auto& a, const auto& b) {
        return a.first.x < b.first.x || (a.first.x == b.first.x && a.first.y < b.first.y);
    });
    for (std::size_t i = 0; i < local.size(); ++i) {
        if (i > 0 && local[i].first.x == local[i - 1].first.x) {
            red.removed.push_back(local[i].second);  // dominated: same x, higher y
            continue;
        }
        red.kept.push_back(local[i].second);
        red.local.push_back(local[i].first);
    }
    return red;
}

}  // namespace

HullReduction build_disk_reduction(const std::vector<Point>& pts, const SeparatedFrame& frame) {
    HullReduction red = start_reduction(pts, frame);
    red.tval.reserve(red.kept.size());
    for (std::size_t i = 0; i < red.kept.size(); ++i) red.tval.push_back(t_max(i, red.local));
    return finish_reduction(std::move(red));
}

ConvexPolygon rotate_body_to_local(const ConvexPolygon& body, const SeparatedFrame& frame) {
    std::vector<Point> rotated;
    rotated.reserve(body.vertices.size());
    for (const Point& v : body.vertices) {
        rotated.push_back({frame.to_local.linear[0] * v.x + frame.to_local.linear[1] * v.y,
                           frame.to_local.linear[2] * v.x + frame.to_local.linear[3] * v.y});
    }
    return ConvexPolygon{std::move(rotated)};
}

HullReduction build_homothet_reduction(const std::vector<Point>& pts, const SeparatedFrame& frame,
                                       const ConvexPolygon& body_ref_at_origin,
                                       int boundary_samples) {
    LocalBody body =
        make_local_body(rotate_body_to_local(body_ref_at_origin, frame), boundary_samples);
    return build_homothet_reduction(pts, frame, body);
}

HullReduction build_homothet_reduction(const std::vector<Point>& pts, const SeparatedFrame& frame,
                                       const LocalBody& body) {
    HullReduction red = start_reduction(pts, frame);
    double spread = 1.0;
    for (const Point& l : red.local) spread = std::max({spread, std::abs(l.x), std::abs(l.y)});
    double cap = spread * 65536.0;

    red.tval.reserve(red.kept.size());
    for (std::size_t i = 0; i < red.kept.size(); ++i) {
        auto t = homothet_scale_max(i, red.local, body, cap);
        // feasibility-interval probe (diagnostic only)
        if (t && std::isfinite(*t)) {
            bool seen_feasible = false, anomaly = false;
            for (int k = 1; k <= 7; ++k) {
                bool f = homothet_feasible(red.local[i], *t * k / 8.0, red.local, body);
                if (f) seen_feasible = true;
                if (!f && seen_feasible) anomaly = true;
            }
            if (anomaly) ++red.probe_anomalies;
        }
        red.tval.push_back(t);
    }
    return finish_reduction(std::move(red));
}

bool disk_contains(const Disk& d, const Point& p) {
    double dx = p.x - d.center.x, dy = p.y - d.center.y;
    double d2 = dx * dx + dy * dy;
    double r2 = d.radius * d.radius;
    return d2 <= r2 + kRelEps * (1.0 + r2);
}

std::optional<LowestPointObject> map_disk(const HullReduction& red,
                                          const std::vector<Point>& pts, const Disk& d) {
    Point c_local = red.frame.local(d.center);
    if (c_local.y > 0.0)
        throw invalid_input_error("map_disk: disk center not on the L+ side");
    std::vector<GridPoint> members;
    for (std::size_t i = 0; i < red.kept.size(); ++i) {
        if (red.tval[i] && disk_contains(d, pts[red.kept[i]])) members.push_back(red.pi[i]);
    }
    if (members.empty()) return std::nullopt;
    return make_object(std::move(members));
}

MappedObject map_homothet(const HullReduction& red, const LocalBody& body, double scale,
                          const Point& ref_local) {
    if (ref_local.y > 0.0)
        throw invalid_input_error("map_homothet: reference point not on the L+ side");
    std::vector<GridPoint> members;
    for (std::size_t i = 0; i < red.local.size(); ++i) {
        if (red.tval[i] && homothet_contains(body, scale, ref_local, red.local[i]))
            members.push_back(red.pi[i]);
    }
    MappedObject out;
    if (members.empty()) return out;
    out.object = make_object(std::move(members));
    out.property_ok = has_lowest_point_property(red.index, *out.object);
    return out;
}

}  // namespace hitset
