#include "hitset/body_shape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace hitset {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinAngle = kPi / 15.0;
constexpr double kMinClearance = 1.0 / 50.0;
constexpr double kSlack = 1e-9;

Point rotate(const Point& v, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point unit(const Point& v) {
    double n = norm(v);
    return {v.x / n, v.y / n};
}

double angle_between(const Point& u, const Point& v) {
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

Point intersect_lines(const Line& a, const Line& b) {
    double denom = cross(a.dir, b.dir);
    if (denom == 0.0) throw invalid_input_error("intersect_lines: parallel lines");
    double s = cross(b.point - a.point, b.dir) / denom;
    return a.point + s * a.dir;
}

double line_angle(const Line& a, const Line& b) {
    double t = angle_between(a.dir, b.dir);
    return t > kPi / 2.0 ? kPi - t : t;
}

Line Chord::as_line() const { return {p, unit(q - p)}; }

const char* to_string(GoodPairCase c) {
    switch (c) {
        case GoodPairCase::center_center: return "center-center";
        case GoodPairCase::case1: return "case1";
        case GoodPairCase::case2a: return "case2a";
        case GoodPairCase::case2b: return "case2b";
        case GoodPairCase::case2c: return "case2c";
        case GoodPairCase::case2d: return "case2d";
        case GoodPairCase::search_fallback: return "search-fallback";
    }
    return "?";
}

namespace {

// Canonical-frame construction lines. s_i^- = L_i ∩ l_{i+1}^- where l_i^-
// goes through p_i at angle pi/30 clockwise from the ray p_i -> p_{i-1};
// l_i^+ at pi/30 counterclockwise from the ray p_i -> p_{i+1}. All indices
// mod 3 on the counterclockwise triangle.
struct CanonicalScaffold {
    std::array<Point, 3> p;
    std::array<Line, 3> big_tangent;  // L_i through p_i parallel to the far side
    std::array<Line, 3> ell_minus;
    std::array<Line, 3> ell_plus;
    std::array<Point, 3> s_minus;
    std::array<Point, 3> s_plus;
    std::array<Triangle, 3> tri_minus;
    std::array<Triangle, 3> tri_plus;
    Triangle tri_left;
    Triangle tri_right;
};

const CanonicalScaffold& scaffold() {
    static const CanonicalScaffold sc = [] {
        CanonicalScaffold s;
        s.p = canonical_triangle();
        for (int i = 0; i < 3; ++i) {
            const Point& pi = s.p[i];
            const Point& pn = s.p[(i + 1) % 3];
            const Point& pp = s.p[(i + 2) % 3];
            s.big_tangent[i] = Line{pi, unit(pp - pn)};
            s.ell_minus[i] = Line{pi, rotate(unit(pp - pi), -kPi / 30.0)};
            s.ell_plus[i] = Line{pi, rotate(unit(pn - pi), +kPi / 30.0)};
        }
        for (int i = 0; i < 3; ++i) {
            s.s_minus[i] = intersect_lines(s.big_tangent[i], s.ell_minus[(i + 1) % 3]);
            s.s_plus[i] = intersect_lines(s.big_tangent[i], s.ell_plus[(i + 2) % 3]);
            s.tri_minus[i] = {s.p[i], s.s_minus[i], s.p[(i + 1) % 3]};
            s.tri_plus[i] = {s.p[i], s.s_plus[i], s.p[(i + 2) % 3]};
        }
        // T_left: bounded by L_3, line(s_1^-, s_3^+), vertical through p_3.
        Line left_cut{s.s_minus[0], unit(s.s_plus[2] - s.s_minus[0])};
        Line vert3{s.p[2], {0, 1}};
        s.tri_left = {s.p[2], s.s_plus[2], intersect_lines(left_cut, vert3)};
        // T_right: bounded by L_2, line(s_1^+, s_2^-), vertical through p_2.
        Line right_cut{s.s_plus[0], unit(s.s_minus[1] - s.s_plus[0])};
        Line vert2{s.p[1], {0, 1}};
        s.tri_right = {s.p[1], s.s_minus[1], intersect_lines(right_cut, vert2)};
        return s;
    }();
    return sc;
}

ChordType classify_one(const Point& p, const Point& q, const Point& prev, const Point& next) {
    Point to_q = q - p;
    double a_center = angle_between(to_q, Point{0, 0} - p);
    if (a_center <= 2.0 * kPi / 15.0 + 1e-12) return ChordType::central;
    double a_left = angle_between(to_q, prev - p);
    double a_right = angle_between(to_q, next - p);
    return a_left < a_right ? ChordType::left : ChordType::right;
}

// Working view of a body under a canonical-triangle symmetry: polygon and
// chords transformed, triangle slots relabeled.
struct Ctx {
    ConvexPolygon poly;
    std::array<Chord, 3> chords;
};

Ctx make_ctx(const NormalizedBody& body) {
    Ctx ctx;
    ctx.poly = body.polygon;
    for (int i = 0; i < 3; ++i) {
        ctx.chords[i].p = body.tin[i];
        ctx.chords[i].q = body.tangents[i].touch;
    }
    const auto& canon = canonical_triangle();
    for (int i = 0; i < 3; ++i) {
        const Point& pn = canon[(i + 1) % 3];
        const Point& pp = canon[(i + 2) % 3];
        ctx.chords[i].type = classify_one(ctx.chords[i].p, ctx.chords[i].q, pp, pn);
    }
    return ctx;
}

// 2x2 orthogonal transforms fixing the canonical triangle as a set.
struct Symmetry {
    std::array<double, 4> m{1, 0, 0, 1};
    bool reflection = false;

    Point apply(const Point& v) const {
        return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y};
    }
    Point invert(const Point& v) const {  // orthogonal: inverse = transpose
        return {m[0] * v.x + m[2] * v.y, m[1] * v.x + m[3] * v.y};
    }
};

std::array<Symmetry, 6> triangle_symmetries() {
    std::array<Symmetry, 6> out;
    for (int k = 0; k < 3; ++k) {
        double a = 2.0 * kPi * k / 3.0;
        out[k] = Symmetry{{std::cos(a), -std::sin(a), std::sin(a), std::cos(a)}, false};
    }
    for (int k = 0; k < 3; ++k) {
        // reflection across the line at angle (pi/2 + k*2pi/3): fixes p_{1+k}
        double t = kPi / 2.0 + 2.0 * kPi * k / 3.0;
        out[3 + k] =
            Symmetry{{std::cos(2 * t), std::sin(2 * t), std::sin(2 * t), -std::cos(2 * t)}, true};
    }
    return out;
}

Ctx transform_ctx(const Ctx& src, const Symmetry& g) {
    Ctx out;
    std::vector<Point> verts;
    verts.reserve(src.poly.vertices.size());
    for (const Point& v : src.poly.vertices) verts.push_back(g.apply(v));
    if (g.reflection) std::reverse(verts.begin(), verts.end());
    out.poly = ConvexPolygon{std::move(verts)};

    const auto& canon = canonical_triangle();
    for (int old_i = 0; old_i < 3; ++old_i) {
        Point np = g.apply(src.chords[old_i].p);
        int slot = 0;
        double best = 1e18;
        for (int j = 0; j < 3; ++j) {
            double d = dist(np, canon[j]);
            if (d < best) {
                best = d;
                slot = j;
            }
        }
        out.chords[slot].p = np;
        out.chords[slot].q = g.apply(src.chords[old_i].q);
    }
    for (int i = 0; i < 3; ++i) {
        const Point& pn = canon[(i + 1) % 3];
        const Point& pp = canon[(i + 2) % 3];
        out.chords[i].type = classify_one(out.chords[i].p, out.chords[i].q, pp, pn);
    }
    return out;
}

// True iff the line strictly misses the triangle (all vertices on one side).
bool line_misses_triangle(const Line& l, const Triangle& t) {
    int pos = 0, neg = 0;
    for (const Point& v : t) {
        double c = cross(l.dir, v - l.point);
        if (c > 0) ++pos;
        if (c < 0) ++neg;
    }
    return pos == 0 || neg == 0;
}

// Far tangent line parallel to L_i, anchored at the chord's touch point.
Line far_tangent(const Ctx& ctx, int i) {
    const auto& canon = canonical_triangle();
    Point dir = unit(canon[(i + 2) % 3] - canon[(i + 1) % 3]);
    return Line{ctx.chords[i].q, dir};
}

// ---- rotating tangent-pair sweep ---------------------------------------

struct SweepEvent {
    double beta;       // normal angle of the p_y side
    bool lower_side;   // event edge belongs to the p_y support (else q_y)
    std::size_t edge;  // polygon edge index (v[e], v[e+1])
};

double wrap_into(double a, double lo) {
    while (a < lo) a += 2.0 * kPi;
    while (a >= lo + 2.0 * kPi) a -= 2.0 * kPi;
    return a;
}

// Chord through the origin located by the orientation flip of
// (p_y, q_y, origin) while the tangent pair rotates from normal angle
// beta_from to beta_to (p_y = contact in direction n(beta)).
std::optional<Line> chord_through_origin(const ConvexPolygon& poly, double beta_from,
                                         double beta_to) {
    const Point origin{0, 0};
    bool increasing = beta_to > beta_from;
    double lo = std::min(beta_from, beta_to), hi = std::max(beta_from, beta_to);

    std::vector<SweepEvent> events;
    const auto& v = poly.vertices;
    for (std::size_t e = 0; e < v.size(); ++e) {
        Point edge = v[(e + 1) % v.size()] - v[e];
        double nu = std::atan2(-edge.x, edge.y) + kPi;  // outward normal angle (CCW polygon)
        for (int side = 0; side < 2; ++side) {
            double base = nu + side * kPi;
            double b = wrap_into(base, lo);
            while (b < hi) {
                if (b > lo) events.push_back({b, side == 0, e});
                b += 2.0 * kPi;
            }
        }
    }
    std::sort(events.begin(), events.end(),
              [&](const SweepEvent& a, const SweepEvent& b) { return a.beta < b.beta; });
    if (!increasing) std::reverse(events.begin(), events.end());

    // midpoint supports per interval
    std::vector<double> cuts{beta_from};
    for (const auto& ev : events) cuts.push_back(ev.beta);
    cuts.push_back(beta_to);

    auto supports_at = [&](double beta) {
        Point n{std::cos(beta), std::sin(beta)};
        SupportSet plow = support_in_direction(poly, n);
        SupportSet pupp = support_in_direction(poly, {-n.x, -n.y});
        return std::make_pair(plow, pupp);
    };

    std::optional<int> prev_sign;
    std::optional<std::pair<Point, Point>> prev_pair;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        auto [slow, supp] = supports_at(mid);
        Point py = slow.representative();
        Point qy = supp.representative();
        int sign = orient(py, qy, origin);
        if (sign == 0) return Line{origin, unit(qy - py)};
        if (prev_sign && *prev_sign != sign) {
            // flip at cuts[k]: walk the contact path (a,w) -> (b,w) -> (b,w')
            Point a = prev_pair->first, w = prev_pair->second;
            Point b_pt = py, w2 = qy;
            double oa = orient_value(a, w, origin);
            double ob = orient_value(b_pt, w, origin);
            if ((oa <= 0 && ob >= 0) || (oa >= 0 && ob <= 0)) {
                double denom = oa - ob;
                double s = denom == 0.0 ? 0.5 : oa / denom;
                Point u{a.x + s * (b_pt.x - a.x), a.y + s * (b_pt.y - a.y)};
                return Line{origin, unit(w - u)};
            }
            double oc = orient_value(b_pt, w2, origin);
            if ((ob <= 0 && oc >= 0) || (ob >= 0 && oc <= 0)) {
                double denom = ob - oc;
                double s = denom == 0.0 ? 0.5 : ob / denom;
                Point u{w.x + s * (w2.x - w.x), w.y + s * (w2.y - w.y)};
                return Line{origin, unit(u - b_pt)};
            }
        }
        prev_sign = sign;
        prev_pair = std::make_pair(py, qy);
    }
    return std::nullopt;
}

GoodPair assemble_pair(const ConvexPolygon& poly, const Line& l1, const Line& l2,
                       GoodPairCase tag) {
    GoodPair gp;
    gp.line1 = l1;
    gp.line2 = l2;
    gp.x = intersect_lines(l1, l2);
    gp.angle = line_angle(l1, l2);
    gp.clearance = poly.boundary_clearance(gp.x);
    gp.case_tag = tag;
    return gp;
}

// ---- search fallback -----------------------------------------------------

Line chord_of_direction(const ConvexPolygon& poly, double theta) {
    Point d{std::cos(theta), std::sin(theta)};
    TangentPair tp = tangent_touch_sets(poly, d);
    Point a = tp.lower.representative();
    Point b = tp.upper.representative();
    return Line{a, unit(b - a)};
}

double pair_margin(const ConvexPolygon& poly, const Line& a, const Line& b) {
    if (std::abs(cross(a.dir, b.dir)) < 1e-12) return -1e9;
    Point x = intersect_lines(a, b);
    double ang = line_angle(a, b);
    double cl = poly.boundary_clearance(x);
    return std::min(ang - kMinAngle, cl - kMinClearance);
}

GoodPair search_fallback(const ConvexPolygon& poly) {
    constexpr int kGrid = 720;
    std::vector<Line> chords(kGrid);
    for (int i = 0; i < kGrid; ++i)
        chords[i] = chord_of_direction(poly, kPi * i / kGrid);

    double best = -1e18;
    int bi = 0, bj = 1;
    for (int i = 0; i < kGrid && best < 0.005; ++i) {
        for (int j = i + 1; j < kGrid; ++j) {
            double m = pair_margin(poly, chords[i], chords[j]);
            if (m > best) {
                best = m;
                bi = i;
                bj = j;
                if (best >= 0.005) break;
            }
        }
    }
    // local refinement around the best direction pair
    double t1 = kPi * bi / kGrid, t2 = kPi * bj / kGrid;
    double step = kPi / kGrid;
    for (int round = 0; round < 24; ++round) {
        bool improved = false;
        for (int which = 0; which < 2; ++which) {
            double& t = which == 0 ? t1 : t2;
            for (double cand : {t - step, t + step}) {
                Line a = chord_of_direction(poly, which == 0 ? cand : t1);
                Line b = chord_of_direction(poly, which == 0 ? t2 : cand);
                double m = pair_margin(poly, a, b);
                if (m > best) {
                    best = m;
                    t = cand;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return assemble_pair(poly, chord_of_direction(poly, t1), chord_of_direction(poly, t2),
                         GoodPairCase::search_fallback);
}

// ---- the Theorem-5 style case analysis ----------------------------------

// Requires chords[0] left and at most one central chord. Returns candidate
// line pairs in priority order.
std::vector<std::pair<std::array<Line, 2>, GoodPairCase>> case_candidates(const Ctx& ctx,
                                                                          int depth);

std::vector<std::pair<std::array<Line, 2>, GoodPairCase>> candidates_left1(const Ctx& ctx,
                                                                           int depth) {
    const auto& sc = scaffold();
    std::vector<std::pair<std::array<Line, 2>, GoodPairCase>> out;

    // Case 1: the far tangent parallel to L_2 misses T_3^+.
    if (line_misses_triangle(far_tangent(ctx, 1), sc.tri_plus[2])) {
        out.push_back({{ctx.chords[0].as_line(), ctx.chords[1].as_line()}, GoodPairCase::case1});
    }

    ChordType t2 = ctx.chords[1].type;
    ChordType t3 = ctx.chords[2].type;

    if (t2 == ChordType::central) {
        if (t3 == ChordType::left) {
            auto p4 = chord_through_origin(ctx.poly, -kPi / 2.0, -kPi / 6.0);
            if (p4)
                out.push_back({{ctx.chords[1].as_line(), *p4}, GoodPairCase::case2a});
        }
        auto p4 = chord_through_origin(ctx.poly, -kPi / 2.0, 0.0);
        auto p5 = chord_through_origin(ctx.poly, 5.0 * kPi / 6.0, kPi / 3.0);
        if (p4 && p5) out.push_back({{*p4, *p5}, GoodPairCase::case2b});
        if (p4) out.push_back({{ctx.chords[1].as_line(), *p4}, GoodPairCase::case2a});
    } else if (t2 == ChordType::right) {
        auto p5 = chord_through_origin(ctx.poly, 5.0 * kPi / 6.0, kPi / 3.0);
        auto p6 = chord_through_origin(ctx.poly, kPi / 6.0, 3.0 * kPi / 2.0);
        if (p5 && p6) out.push_back({{*p5, *p6}, GoodPairCase::case2c});
        auto p4 = chord_through_origin(ctx.poly, -kPi / 2.0, 0.0);
        if (p4 && p6) out.push_back({{*p4, *p6}, GoodPairCase::case2c});
    } else {
        // chord 2 left: relabel 2 -> 1 unless all three are left with both
        // far-tangent checks failing, in which case rotate two pairs at once.
        bool relabel = t3 != ChordType::left ||
                       line_misses_triangle(far_tangent(ctx, 2), sc.tri_plus[0]);
        if (relabel && depth < 3) {
            // rotate labels: new slot 1 must hold the old chord 2
            auto syms = triangle_symmetries();
            for (const auto& g : syms) {
                if (g.reflection) continue;
                Ctx rotated = transform_ctx(ctx, g);
                if (dist(rotated.chords[0].p, g.apply(ctx.chords[1].p)) < 1e-9 &&
                    rotated.chords[0].type == ChordType::left) {
                    auto inner = case_candidates(rotated, depth + 1);
                    for (auto& [lines, tag] : inner) {
                        for (Line& l : lines) {
                            l.point = g.invert(l.point);
                            l.dir = g.invert(l.dir);
                        }
                        out.push_back({lines, tag});
                    }
                    break;
                }
            }
        }
        auto p7 = chord_through_origin(ctx.poly, -kPi / 2.0, -5.0 * kPi / 6.0);
        auto p8 = chord_through_origin(ctx.poly, kPi / 6.0, -kPi / 6.0);
        if (p7 && p8) out.push_back({{*p7, *p8}, GoodPairCase::case2d});
    }
    return out;
}

std::vector<std::pair<std::array<Line, 2>, GoodPairCase>> case_candidates(const Ctx& ctx,
                                                                          int depth) {
    if (ctx.chords[0].type == ChordType::left) return candidates_left1(ctx, depth);
    return {};
}

}  // namespace

ChordConfig classify_chords(const NormalizedBody& body) {
    const auto& sc = scaffold();
    Ctx ctx = make_ctx(body);
    ChordConfig cfg;
    cfg.chords = ctx.chords;
    cfg.s_minus = sc.s_minus;
    cfg.s_plus = sc.s_plus;
    cfg.tri_minus = sc.tri_minus;
    cfg.tri_plus = sc.tri_plus;
    cfg.tri_left = sc.tri_left;
    cfg.tri_right = sc.tri_right;
    return cfg;
}

GoodPair good_pair(const NormalizedBody& body) {
    Ctx base = make_ctx(body);

    // two central chords form a good pair directly
    std::vector<int> central;
    for (int i = 0; i < 3; ++i)
        if (base.chords[i].type == ChordType::central) central.push_back(i);
    std::vector<std::pair<GoodPair, bool>> attempts;
    if (central.size() >= 2) {
        GoodPair gp = assemble_pair(body.polygon, base.chords[central[0]].as_line(),
                                    base.chords[central[1]].as_line(),
                                    GoodPairCase::center_center);
        if (verify_good_pair(body, gp).ok) return gp;
    }

    // bring a left chord into slot 1 via a triangle symmetry, run the case
    // analysis there, and map the lines back
    for (const auto& g : triangle_symmetries()) {
        Ctx ctx = transform_ctx(base, g);
        if (ctx.chords[0].type != ChordType::left) continue;
        auto cands = case_candidates(ctx, 0);
        for (auto& [lines, tag] : cands) {
            Line l1{g.invert(lines[0].point), g.invert(lines[0].dir)};
            Line l2{g.invert(lines[1].point), g.invert(lines[1].dir)};
            if (std::abs(cross(l1.dir, l2.dir)) < 1e-12) continue;
            GoodPair gp = assemble_pair(body.polygon, l1, l2, tag);
            if (verify_good_pair(body, gp).ok) return gp;
        }
        break;  // one canonical relabeling is enough; alternates via fallback
    }

    GoodPair gp = search_fallback(body.polygon);
    auto diag = verify_good_pair(body, gp);
    if (!diag.ok)
        throw std::runtime_error(std::string("good_pair: infeasible after fallback (") +
                                 diag.failed + ")");
    return gp;
}

namespace {

// Boundary crossings of a line through an interior point: exactly two.
std::vector<Point> boundary_crossings(const ConvexPolygon& poly, const Line& l) {
    std::vector<Point> out;
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        double ca = cross(l.dir, a - l.point);
        double cb = cross(l.dir, b - l.point);
        if (ca == 0.0) out.push_back(a);
        if ((ca < 0 && cb > 0) || (ca > 0 && cb < 0)) {
            double s = ca / (ca - cb);
            out.push_back({a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)});
        }
    }
    // dedupe near-coincident crossings (vertex hits)
    std::vector<Point> uniq;
    for (const Point& p : out) {
        bool dup = false;
        for (const Point& q : uniq)
            if (dist(p, q) < 1e-12) dup = true;
        if (!dup) uniq.push_back(p);
    }
    return uniq;
}

// Normal cone of a boundary point as an angle interval [a, b] (outward
// normals). Tolerance decides vertex vs edge-interior contact.
std::optional<std::pair<double, double>> normal_cone(const ConvexPolygon& poly, const Point& e,
                                                     double tol) {
    const auto& v = poly.vertices;
    std::size_t n = v.size();
    auto edge_normal = [&](std::size_t i) {
        Point d = v[(i + 1) % n] - v[i];
        return std::atan2(-d.x, d.y) + kPi;  // outward for CCW
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (dist(e, v[i]) <= tol) {
            double a = edge_normal((i + n - 1) % n);
            double b = edge_normal(i);
            if (b < a) b += 2.0 * kPi;
            return std::make_pair(a, b);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        double len = dist(a, b);
        double t = dot(e - a, b - a) / (len * len);
        if (t < -tol || t > 1 + tol) continue;
        Point proj{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        if (dist(e, proj) <= tol) {
            double nu = edge_normal(i);
            return std::make_pair(nu, nu);
        }
    }
    return std::nullopt;
}

bool cones_oppose(std::pair<double, double> c1, std::pair<double, double> c2) {
    // does c1 intersect c2 + pi (mod 2pi)?
    c2.first += kPi;
    c2.second += kPi;
    for (int k = -2; k <= 2; ++k) {
        double lo = std::max(c1.first, c2.first + 2.0 * kPi * k);
        double hi = std::min(c1.second, c2.second + 2.0 * kPi * k);
        if (lo <= hi + 1e-12) return true;
    }
    return false;
}

}  // namespace

GoodPairDiagnostics verify_good_pair(const NormalizedBody& body, const GoodPair& pair) {
    GoodPairDiagnostics d;
    if (std::abs(cross(pair.line1.dir, pair.line2.dir)) < 1e-15) {
        d.failed = "angle";
        return d;
    }
    Point x = intersect_lines(pair.line1, pair.line2);
    d.angle = line_angle(pair.line1, pair.line2);
    d.clearance = body.polygon.boundary_clearance(x);
    if (d.angle < kMinAngle - kSlack) {
        d.failed = "angle";
        return d;
    }
    if (!(d.clearance >= kMinClearance - kSlack)) {
        d.failed = "clearance";
        return d;
    }
    for (const Line* l : {&pair.line1, &pair.line2}) {
        auto cr = boundary_crossings(body.polygon, *l);
        if (cr.size() != 2) {
            d.failed = "realizability";
            return d;
        }
        auto c1 = normal_cone(body.polygon, cr[0], 1e-7);
        auto c2 = normal_cone(body.polygon, cr[1], 1e-7);
        if (!c1 || !c2 || !cones_oppose(*c1, *c2)) {
            d.failed = "realizability";
            return d;
        }
    }
    d.ok = true;
    return d;
}

MonotoneSplit monotone_split(const NormalizedBody& body, const GoodPair& pair, int which) {
    if (which != 1 && which != 2) throw invalid_input_error("monotone_split: which must be 1 or 2");
    const Line& l = which == 1 ? pair.line1 : pair.line2;
    const auto& v = body.polygon.vertices;
    std::size_t n = v.size();

    MonotoneSplit out;
    auto cr = boundary_crossings(body.polygon, l);
    if (cr.size() != 2) return out;

    auto side = [&](const Point& p) { return cross(l.dir, p - l.point); };

    // boundary walk with the two crossing points spliced in
    std::vector<Point> walk;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        walk.push_back(a);
        double ca = side(a), cb = side(b);
        if ((ca < 0 && cb > 0) || (ca > 0 && cb < 0)) {
            double s = ca / (ca - cb);
            walk.push_back({a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)});
        }
    }
    // a crossing landing on a vertex produces a near-duplicate pair
    std::vector<Point> dedup;
    for (const Point& p : walk) {
        if (dedup.empty() || dist(dedup.back(), p) > 1e-9) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dist(dedup.front(), dedup.back()) <= 1e-9) dedup.pop_back();
    walk = std::move(dedup);
    auto is_crossing = [&](const Point& p) {
        return std::min(dist(p, cr[0]), dist(p, cr[1])) < 1e-9;
    };
    std::size_t start = walk.size();
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (is_crossing(walk[i])) {
            start = i;
            break;
        }
    }
    if (start == walk.size()) return out;
    std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(start), walk.end());
    walk.push_back(walk.front());

    std::vector<Point>* cur = &out.arc1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        cur->push_back(walk[i]);
        if (i > 0 && i + 1 < walk.size() && is_crossing(walk[i]) && cur == &out.arc1) {
            cur = &out.arc2;
            cur->push_back(walk[i]);
        }
    }

    auto arc_monotone = [&](const std::vector<Point>& arc) {
        if (arc.size() < 2) return true;
        double tol = 1e-12;
        bool up = true, down = true;
        for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
            double a = dot(arc[i], l.dir), b = dot(arc[i + 1], l.dir);
            if (b < a - tol) up = false;
            if (b > a + tol) down = false;
        }
        return up || down;
    };
    out.arc1_monotone = arc_monotone(out.arc1);
    out.arc2_monotone = arc_monotone(out.arc2);
    return out;
}

}  // namespace hitset
