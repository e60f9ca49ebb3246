#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "hitset/hull.hpp"
#include "hitset/instance.hpp"

using namespace hitset;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sampling oracle for disk_feasible: dense centers on the circle |c-q| = t
bool disk_feasible_sampled(const Point& q, double t, const std::vector<Point>& pts,
                           int samples = 100000) {
    for (int k = 0; k < samples; ++k) {
        double a = std::numbers::pi * (1.0 + static_cast<double>(k) / samples);
        Point c{q.x + t * std::cos(a), q.y + t * std::sin(a)};
        if (c.y > 0.0) continue;
        bool ok = true;
        for (const Point& p : pts) {
            if (dist(c, p) < t * (1.0 - 1e-12)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// candidate-enumeration oracle: circumcenters of (q,p,p') on or below the
// axis plus bisector/axis events, feasibility via the arc test, scanning
// candidates in decreasing order
std::optional<double> t_max_candidates(std::size_t qi, const std::vector<Point>& pts) {
    const Point& q = pts[qi];
    double scale = 1.0;
    for (const Point& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    double huge = 1e8 * (1.0 + scale) * (1.0 + scale);
    if (disk_feasible(q, huge, pts)) return kInf;

    std::vector<double> cands{q.y};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == qi) continue;
        const Point& p = pts[i];
        if (p.x != q.x) {
            double cx = (dot(p, p) - dot(q, q)) / (2.0 * (p.x - q.x));
            cands.push_back(dist({cx, 0.0}, q));
        }
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (j == qi) continue;
            const Point& r = pts[j];
            double det = 4.0 * ((p.x - q.x) * (r.y - q.y) - (p.y - q.y) * (r.x - q.x));
            if (det == 0.0) continue;  // collinear triple
            double u = dot(p, p) - dot(q, q);
            double v = dot(r, r) - dot(q, q);
            Point c{(u * 2.0 * (r.y - q.y) - v * 2.0 * (p.y - q.y)) / det,
                    (v * 2.0 * (p.x - q.x) - u * 2.0 * (r.x - q.x)) / det};
            if (c.y <= 1e-9 * scale) cands.push_back(dist(c, q));
        }
    }
    std::sort(cands.begin(), cands.end(), std::greater<>());
    for (double t : cands) {
        if (!(t > 0.0)) continue;
        if (disk_feasible(q, t, pts) || disk_feasible(q, t * (1.0 - 4e-9), pts)) return t;
    }
    return std::nullopt;
}

std::vector<Point> random_separated_points(SplitMix64& rng, int n, double range) {
    std::vector<Point> pts;
    std::set<std::pair<long, long>> seen;
    while (static_cast<int>(pts.size()) < n) {
        long x = static_cast<long>(rng.next_int(-static_cast<std::int64_t>(range),
                                                static_cast<std::int64_t>(range)));
        long y = static_cast<long>(rng.next_int(1, static_cast<std::int64_t>(range)));
        if (seen.insert({x, y}).second)
            pts.push_back({static_cast<double>(x), static_cast<double>(y)});
    }
    return pts;
}

ConvexPolygon regular_gon(int k, double radius = 1.0) {
    std::vector<Point> v;
    for (int i = 0; i < k; ++i) {
        double a = 2.0 * std::numbers::pi * i / k;
        v.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return make_convex_polygon(std::move(v));
}

SeparatedFrame x_axis_frame() { return make_separated_frame({{0, 0}, {1, 0}}); }

}  // namespace

TEST_CASE("disk_feasible basics") {
    CHECK(disk_feasible({0, 1}, 1.0, {{0, 1}}));
    CHECK(disk_feasible({0, 1}, 5.0, {{0, 1}}));
    CHECK_FALSE(disk_feasible({0, 1}, 0.5, {{0, 1}}));  // circle cannot reach the axis
    CHECK_THROWS_AS(disk_feasible({0, -1}, 1.0, {{0, -1}}), invalid_input_error);
    CHECK_THROWS_AS(disk_feasible({0, 1}, 0.0, {{0, 1}}), invalid_input_error);

    // one lower flank leaves room on the other side
    std::vector<Point> open_side{{0, 1}, {0.1, 0.5}};
    CHECK(disk_feasible({0, 1}, 100.0, open_side));
    CHECK(disk_feasible({0, 1}, 100.0, open_side) ==
          disk_feasible_sampled({0, 1}, 100.0, open_side));
    // two flanking lower points block every large empty disk through q
    std::vector<Point> blocked{{0, 1}, {-0.1, 0.5}, {0.1, 0.5}};
    CHECK_FALSE(disk_feasible({0, 1}, 100.0, blocked));
    CHECK_FALSE(disk_feasible_sampled({0, 1}, 100.0, blocked));
}

TEST_CASE("disk_feasible agrees with the sampling oracle") {
    SplitMix64 rng(101);
    for (int it = 0; it < 60; ++it) {
        auto pts = random_separated_points(rng, 8, 20);
        std::size_t qi = static_cast<std::size_t>(rng.next_int(0, 7));
        double t = 0.5 + 40.0 * rng.next_unit();
        if (pts[qi].y > t) continue;
        bool exact = disk_feasible(pts[qi], t, pts);
        bool sampled = disk_feasible_sampled(pts[qi], t, pts, 20000);
        if (sampled) CHECK(exact);       // a sampled witness proves feasibility
        if (!exact) CHECK_FALSE(sampled);
    }
}

TEST_CASE("t_max on tiny instances") {
    std::vector<Point> lone{{0, 1}};
    CHECK(*t_max(0, lone) == kInf);

    std::vector<Point> three{{0, 1}, {2, 1}, {1, 2}};
    CHECK(*t_max(0, three) == kInf);
    CHECK(*t_max(1, three) == kInf);
    // the middle elevated point admits no empty touching disk at all here
    CHECK_FALSE(t_max(2, three).has_value());
    CHECK_FALSE(t_max_candidates(2, three).has_value());

    // a wider flank makes the middle point reachable; the circumcenter event
    // at (2,-1/2) gives exactly 2.5
    std::vector<Point> wide{{0, 1}, {4, 1}, {2, 2}};
    REQUIRE(t_max(2, wide).has_value());
    CHECK(*t_max(2, wide) == doctest::Approx(2.5).epsilon(1e-7));
    CHECK(*t_max_candidates(2, wide) == doctest::Approx(2.5).epsilon(1e-6));

    CHECK_THROWS_AS(t_max(5, three), invalid_input_error);
}

TEST_CASE("t_max equals the candidate-enumeration oracle") {
    SplitMix64 rng(333);
    for (int it = 0; it < 25; ++it) {
        auto pts = random_separated_points(rng, 10, 30);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end(),
                              [](const Point& a, const Point& b) { return a.x == b.x; }),
                  pts.end());
        for (std::size_t qi = 0; qi < pts.size(); ++qi) {
            auto got = t_max(qi, pts);
            auto want = t_max_candidates(qi, pts);
            CHECK(got.has_value() == want.has_value());
            if (got && want) {
                if (std::isinf(*want)) {
                    CHECK(std::isinf(*got));
                } else {
                    CHECK(*got == doctest::Approx(*want).epsilon(1e-6));
                }
            }
        }
    }
}

TEST_CASE("concentric arcs order by radius between common points") {
    // two circles through p1, p2 with centers below the axis on the common
    // bisector: the smaller radius arc passes above the larger one
    SplitMix64 rng(71);
    for (int it = 0; it < 50; ++it) {
        Point p1{rng.next_unit() * 4, 1.0 + rng.next_unit() * 3};
        Point p2{p1.x + 1.0 + rng.next_unit() * 3, 1.0 + rng.next_unit() * 3};
        Point mid{0.5 * (p1.x + p2.x), 0.5 * (p1.y + p2.y)};
        Point d{p2.x - p1.x, p2.y - p1.y};
        Point bis{-d.y, d.x};
        if (bis.y > 0) bis = {-bis.x, -bis.y};  // point the bisector downward
        double len = norm(bis);
        bis = {bis.x / len, bis.y / len};
        // centers strictly below the axis
        double s0 = (0.0 - mid.y) / bis.y + 0.5;
        double s1 = s0 + 1.0, s2 = s0 + 4.0;
        Point c1{mid.x + s1 * bis.x, mid.y + s1 * bis.y};
        Point c2{mid.x + s2 * bis.x, mid.y + s2 * bis.y};
        double r1 = dist(c1, p1), r2 = dist(c2, p1);
        REQUIRE(r1 < r2);
        double x = 0.5 * (p1.x + p2.x);
        double y1 = c1.y + std::sqrt(r1 * r1 - (x - c1.x) * (x - c1.x));
        double y2 = c2.y + std::sqrt(r2 * r2 - (x - c2.x) * (x - c2.x));
        CHECK(y1 >= y2 - 1e-9);
    }
}

TEST_CASE("feasible radii form a single interval [r_q, t(q)]") {
    SplitMix64 rng(92);
    int checked = 0;
    for (int it = 0; it < 40 && checked < 12; ++it) {
        auto pts = random_separated_points(rng, 8, 15);
        for (std::size_t qi = 0; qi < pts.size() && checked < 12; ++qi) {
            auto t = t_max(qi, pts);
            if (!t || std::isinf(*t)) continue;
            // the reported t carries ~1e-9 conservative slack; stay just inside
            double top = *t * (1.0 - 1e-6);
            if (!disk_feasible(pts[qi], top, pts)) continue;  // boundary-degenerate
            ++checked;
            // locate r_q by bisection (feasible above, infeasible below)
            double lo = 1e-6, hi = top;
            if (disk_feasible(pts[qi], lo, pts)) continue;
            for (int k = 0; k < 60; ++k) {
                double m = 0.5 * (lo + hi);
                if (disk_feasible(pts[qi], m, pts))
                    hi = m;
                else
                    lo = m;
            }
            double rq = hi;
            for (int k = 1; k <= 8; ++k) {
                double s = rq + (static_cast<double>(k) / 8.0) * (top - rq);
                CHECK(disk_feasible(pts[qi], s, pts));
            }
            CHECK_FALSE(disk_feasible(pts[qi], rq * (1.0 - 1e-3), pts));
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("disk reduction on tiny instances") {
    auto frame = x_axis_frame();

    HullReduction single = build_disk_reduction({{0.5, 1}}, frame);
    CHECK(single.kept.size() == 1);
    CHECK(single.pi[0] == GridPoint{0, 0});
    CHECK(single.lattice_extent == 2);

    HullReduction two = build_disk_reduction({{0, 1}, {2, 1}}, frame);
    REQUIRE(two.kept.size() == 2);
    CHECK(two.radii.size() == 1);
    CHECK(std::isinf(two.radii[0]));
    CHECK(two.pi[0] == GridPoint{0, 0});
    CHECK(two.pi[1] == GridPoint{1, 0});

    CHECK_THROWS_AS(build_disk_reduction({}, frame), invalid_input_error);
    CHECK_THROWS_AS(build_disk_reduction({{0, -1}}, frame), invalid_input_error);
}

TEST_CASE("disk reduction structural rules") {
    SplitMix64 rng(55);
    auto pts = random_separated_points(rng, 10, 50);
    auto red = build_disk_reduction(pts, x_axis_frame());
    // first coordinate is the x-rank; non-Q points sit on the top row
    for (std::size_t i = 0; i < red.kept.size(); ++i) {
        CHECK(red.pi[i].x == static_cast<std::int64_t>(i));
        if (i > 0) CHECK(red.local[i - 1].x < red.local[i].x);
        if (!red.tval[i])
            CHECK(red.pi[i].y == static_cast<std::int64_t>(red.radii.size()));
        CHECK(red.pi[i].y <= static_cast<std::int64_t>(red.radii.size()));
    }
    // pi is injective into [0,n]^2
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& g : red.pi) {
        CHECK(seen.insert({g.x, g.y}).second);
        CHECK(g.x <= static_cast<std::int64_t>(red.kept.size()));
        CHECK(g.y <= static_cast<std::int64_t>(red.kept.size()));
    }
    // vertical dedup keeps the lowest point of each column
    std::vector<Point> dup{{0, 3}, {0, 1}, {1, 2}};
    auto red2 = build_disk_reduction(dup, x_axis_frame());
    CHECK(red2.kept.size() == 2);
    CHECK(red2.removed.size() == 1);
    CHECK(dup[red2.removed[0]].y == 3);
}

TEST_CASE("empty disks through a relevant point exist: Q covers every disk") {
    SplitMix64 rng(404);
    for (int inst = 0; inst < 6; ++inst) {
        auto pts = random_separated_points(rng, 12, 40);
        auto red = build_disk_reduction(pts, x_axis_frame());
        std::vector<std::size_t> q_set;
        for (std::size_t i = 0; i < red.kept.size(); ++i)
            if (red.tval[i]) q_set.push_back(red.kept[i]);
        for (int it = 0; it < 1000; ++it) {
            Point c{static_cast<double>(rng.next_int(-60, 60)),
                    static_cast<double>(rng.next_int(-40, -1))};
            double r = 1.0 + 80.0 * rng.next_unit();
            Disk d{c, r};
            bool hits_p = false;
            for (const Point& p : pts)
                if (disk_contains(d, p)) hits_p = true;
            if (!hits_p) continue;
            bool hits_q = false;
            for (std::size_t i : q_set)
                if (disk_contains(d, pts[i])) hits_q = true;
            CHECK(hits_q);
        }
    }
}

TEST_CASE("mapped disks have the lowest-point property") {
    SplitMix64 rng(777);
    for (int inst = 0; inst < 5; ++inst) {
        auto pts = random_separated_points(rng, 14, 60);
        auto red = build_disk_reduction(pts, x_axis_frame());
        int mapped_count = 0;
        for (int it = 0; it < 200; ++it) {
            Point c{static_cast<double>(rng.next_int(-80, 80)),
                    static_cast<double>(rng.next_int(-50, 0))};
            double r = 1.0 + 100.0 * rng.next_unit();
            auto obj = map_disk(red, pts, Disk{c, r});
            if (!obj) continue;
            ++mapped_count;
            CHECK(has_lowest_point_property(red.index, *obj));
        }
        CHECK(mapped_count > 0);
    }
    // center on the wrong side is rejected
    auto red = build_disk_reduction({{0, 1}}, x_axis_frame());
    CHECK_THROWS_AS(map_disk(red, {{0, 1}}, Disk{{0, 1}, 1.0}), invalid_input_error);
}

TEST_CASE("homothet scale of a 64-gon tracks the disk radius") {
    LocalBody disk_like = make_local_body(regular_gon(64), 1024);
    SplitMix64 rng(31);
    int finite_agree = 0, mismatches = 0;
    for (int inst = 0; inst < 6; ++inst) {
        auto pts = random_separated_points(rng, 10, 20);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end(),
                              [](const Point& a, const Point& b) { return a.x == b.x; }),
                  pts.end());
        double cap = 65536.0;
        for (std::size_t qi = 0; qi < pts.size(); ++qi) {
            auto td = t_max(qi, pts);
            auto th = homothet_scale_max(qi, pts, disk_like, cap);
            if (td && std::isinf(*td)) {
                // the polygon can only be easier to keep empty on the chain
                REQUIRE(th.has_value());
                CHECK(std::isinf(*th));
                continue;
            }
            if (!td) {
                if (th && std::isfinite(*th)) CHECK(*th > 0.0);
                continue;
            }
            if (th && std::isfinite(*th)) {
                ++finite_agree;
                // near-tangent blockers amplify the polygon-vs-disk gap
                CHECK(*th == doctest::Approx(*td).epsilon(0.06));
            } else if (th && std::isinf(*th)) {
                // a flat vertex wedge can dodge every blocker; verify it
                CHECK(homothet_feasible(pts[qi], 8.0 * *td, pts, disk_like));
                ++mismatches;
            } else {
                ++mismatches;  // thin feasible window missed by the probe ladder
            }
        }
    }
    CHECK(finite_agree >= 4);
    CHECK(mismatches <= 6);
}

TEST_CASE("homothet scale trivial cases") {
    // apex-down triangle: the flat top edge cannot dodge flanking points
    LocalBody tri = make_local_body(make_convex_polygon({{0, -1.2}, {1, 0.8}, {-1, 0.8}}), 128);
    std::vector<Point> lone{{0.3, 1}};
    CHECK(std::isinf(*homothet_scale_max(0, lone, tri, 1e5)));

    std::vector<Point> three{{0, 1}, {6, 1}, {3, 2}};
    auto got = homothet_scale_max(2, three, tri, 1e5);
    REQUIRE(got.has_value());
    CHECK(std::isfinite(*got));
    CHECK(*got > 0.0);
}

TEST_CASE("map_homothet traces pass the property check") {
    SplitMix64 rng(808);
    auto pts = random_separated_points(rng, 10, 15);
    auto frame = x_axis_frame();
    LocalBody body = make_local_body(regular_gon(16), 512);
    auto red = build_homothet_reduction(pts, frame, body);
    int mapped = 0, ok = 0;
    for (int it = 0; it < 80; ++it) {
        Point ref{static_cast<double>(rng.next_int(-20, 20)),
                  static_cast<double>(rng.next_int(-15, 0))};
        double scale = 1.0 + 30.0 * rng.next_unit();
        auto mo = map_homothet(red, body, scale, ref);
        if (!mo.object) continue;
        ++mapped;
        if (mo.property_ok) ++ok;
        CHECK(has_lowest_point_property(red.index, *mo.object) == mo.property_ok);
    }
    CHECK(mapped > 0);
    CHECK(ok == mapped);  // the disk-like body should never violate

    auto none = map_homothet(red, body, 1.0, {1000, -1});
    CHECK_FALSE(none.object.has_value());
}
