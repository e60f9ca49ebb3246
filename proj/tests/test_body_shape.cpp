#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hitset/body_shape.hpp"
#include "hitset/instance.hpp"

using namespace hitset;

namespace {

constexpr double kPi = std::numbers::pi;

ConvexPolygon regular_gon(int k, double radius = 1.0, double phase = 0.0) {
    std::vector<Point> v;
    for (int i = 0; i < k; ++i) {
        double a = 2.0 * kPi * i / k + phase;
        v.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return make_convex_polygon(std::move(v));
}

ConvexPolygon random_affine_polygon(SplitMix64& rng, int k) {
    ConvexPolygon base = [&] {
        std::vector<double> angles;
        for (int i = 0; i < k; ++i) angles.push_back(2.0 * kPi * rng.next_unit());
        std::sort(angles.begin(), angles.end());
        std::vector<Point> v;
        for (double a : angles) v.push_back({std::cos(a), std::sin(a)});
        return make_convex_polygon(std::move(v));
    }();
    std::array<double, 4> m{};
    do {
        for (double& x : m) x = rng.next_unit() * 6 - 3;
    } while (std::abs(m[0] * m[3] - m[1] * m[2]) < 0.2);
    std::vector<Point> verts;
    for (const Point& v : base.vertices)
        verts.push_back({m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y});
    if (m[0] * m[3] - m[1] * m[2] < 0) std::reverse(verts.begin(), verts.end());
    return make_convex_polygon(std::move(verts));
}

ConvexPolygon equilateral_body() {
    auto tri = canonical_triangle();
    return make_convex_polygon({tri[0], tri[1], tri[2]});
}

}  // namespace

TEST_CASE("canonical scaffold reproduces the construction constants") {
    NormalizedBody body = normalize_body(equilateral_body());
    ChordConfig cfg = classify_chords(body);

    double expect_len = std::sqrt(3.0) * std::sin(kPi / 30.0) / std::sin(3.0 * kPi / 10.0);
    for (int i = 0; i < 3; ++i) {
        double len_minus = dist(cfg.chords[i].p, cfg.s_minus[i]);
        double len_plus = dist(cfg.chords[i].p, cfg.s_plus[i]);
        CHECK(len_minus == doctest::Approx(expect_len).epsilon(1e-9));
        CHECK(len_plus == doctest::Approx(expect_len).epsilon(1e-9));
        CHECK(len_plus > 0.223);
        CHECK(len_plus < 0.23);
        // angle seen from the center stays below pi/12
        double ang = std::atan(len_plus);
        CHECK(ang < kPi / 12.0);
    }
    CHECK(expect_len == doctest::Approx(0.2237).epsilon(1e-3));

    // distance from s_1^+ to the side p1p2 of the canonical triangle
    auto tri = canonical_triangle();
    Point d{tri[1].x - tri[0].x, tri[1].y - tri[0].y};
    double len = norm(d);
    double distance = std::abs(cross(d, cfg.s_plus[0] - tri[0])) / len;
    CHECK(distance == doctest::Approx(0.1938).epsilon(1e-3));
    CHECK(distance > 0.193);
    CHECK(distance < 0.2);
}

TEST_CASE("equilateral triangle: all chords central, medians form the pair") {
    NormalizedBody body = normalize_body(equilateral_body());
    ChordConfig cfg = classify_chords(body);
    for (int i = 0; i < 3; ++i) CHECK(cfg.chords[i].type == ChordType::central);

    GoodPair pair = good_pair(body);
    CHECK(pair.case_tag == GoodPairCase::center_center);
    CHECK(pair.angle == doctest::Approx(kPi / 3.0).epsilon(1e-9));
    CHECK(norm(pair.x) < 1e-9);
    CHECK(pair.clearance == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(verify_good_pair(body, pair).ok);
}

TEST_CASE("regular 64-gon admits a near-diameter pair") {
    NormalizedBody body = normalize_body(regular_gon(64, 2.0, 0.17));
    GoodPair pair = good_pair(body);
    CHECK(pair.angle >= kPi / 15.0 - 1e-9);
    CHECK(pair.clearance >= 1.0 / 50.0 - 1e-9);
    CHECK(verify_good_pair(body, pair).ok);
    // for a disk-like body the pair crosses near the center with deep clearance
    CHECK(pair.clearance > 0.3);
}

TEST_CASE("left chord classification matches the touch-point region") {
    // a bump near p3 pulls the top touch point towards it: chord 1 goes left
    auto tri = canonical_triangle();
    std::vector<Point> v{tri[0], tri[1], {-0.75, 0.68}, tri[2]};
    ConvexPolygon poly = make_convex_polygon(std::move(v));
    NormalizedBody body = normalize_body(poly);
    ChordConfig cfg = classify_chords(body);
    // a chord leaning towards p_{i-1} is left, and its touch point lies in
    // the sliver triangle T_{i-1}^-
    for (int i = 0; i < 3; ++i) {
        if (cfg.chords[i].type != ChordType::left) continue;
        const Triangle& tm = cfg.tri_minus[(i + 2) % 3];
        ConvexPolygon sliver = make_convex_polygon({tm[0], tm[1], tm[2]});
        CHECK(sliver.contains(cfg.chords[i].q, 1e-6));
    }
    GoodPair pair = good_pair(body);
    CHECK(verify_good_pair(body, pair).ok);
}

TEST_CASE("good pair exists for a random polygon corpus") {
    SplitMix64 rng(2024);
    int fallbacks = 0;
    for (int it = 0; it < 60; ++it) {
        int k = 4 + static_cast<int>(rng.next_int(0, 124));
        ConvexPolygon poly = random_affine_polygon(rng, k);
        NormalizedBody body = normalize_body(poly);
        GoodPair pair = good_pair(body);
        auto diag = verify_good_pair(body, pair);
        CHECK(diag.ok);
        CHECK(pair.angle >= kPi / 15.0 - 1e-9);
        CHECK(pair.clearance >= 1.0 / 50.0 - 1e-9);
        if (pair.case_tag == GoodPairCase::search_fallback) ++fallbacks;
    }
    // the constructive branches should carry nearly all of the corpus
    CHECK(fallbacks <= 6);
}

TEST_CASE("chord types are invariant under affine re-normalization") {
    SplitMix64 rng(99);
    ConvexPolygon base = random_affine_polygon(rng, 17);
    NormalizedBody body0 = normalize_body(base);
    ChordConfig cfg0 = classify_chords(body0);
    for (int it = 0; it < 10; ++it) {
        std::array<double, 4> m{};
        do {
            for (double& x : m) x = rng.next_unit() * 4 - 2;
        } while (m[0] * m[3] - m[1] * m[2] < 0.2);  // orientation-preserving
        std::vector<Point> verts;
        for (const Point& v : base.vertices)
            verts.push_back({m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y});
        NormalizedBody body = normalize_body(make_convex_polygon(std::move(verts)));
        ChordConfig cfg = classify_chords(body);
        for (int i = 0; i < 3; ++i) CHECK(cfg.chords[i].type == cfg0.chords[i].type);
    }
}

TEST_CASE("verify_good_pair diagnostics") {
    NormalizedBody body = normalize_body(regular_gon(32, 1.5));
    GoodPair pair = good_pair(body);

    GoodPair narrow = pair;
    double a = kPi / 30.0;
    narrow.line1 = Line{{0, 0}, {1, 0}};
    narrow.line2 = Line{{0, 0}, {std::cos(a), std::sin(a)}};
    auto bad_angle = verify_good_pair(body, narrow);
    CHECK_FALSE(bad_angle.ok);
    CHECK(bad_angle.failed == "angle");

    // crossing 0.005 from the boundary: the clearance disk cannot fit
    GoodPair shallow = pair;
    const Point& v0 = body.polygon.vertices[0];
    Point inward{-v0.x, -v0.y};
    double len = norm(inward);
    Point x_near{v0.x + 0.005 * inward.x / len, v0.y + 0.005 * inward.y / len};
    shallow.line1 = Line{x_near, {1, 0}};
    shallow.line2 = Line{x_near, {0, 1}};
    auto bad_clear = verify_good_pair(body, shallow);
    CHECK_FALSE(bad_clear.ok);
    CHECK(bad_clear.failed == "clearance");
}

TEST_CASE("monotone_split on symmetric bodies") {
    // chords through the exact center of a centrally symmetric body split the
    // boundary into monotone arcs; an off-center crossing may dip slightly
    // past the chord endpoints, which the separated fallback absorbs
    NormalizedBody round = normalize_body(regular_gon(64, 2.0));
    Point center = round.polygon.centroid();
    GoodPair centered;
    centered.line1 = Line{center, {1, 0}};
    centered.line2 = Line{center, {0, 1}};
    centered.x = center;
    for (int which : {1, 2}) {
        MonotoneSplit split = monotone_split(round, centered, which);
        CHECK(split.arc1.size() >= 2);
        CHECK(split.arc2.size() >= 2);
        CHECK(split.arc1_monotone);
        CHECK(split.arc2_monotone);
    }

    NormalizedBody square = normalize_body(make_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    Point sq_center = square.polygon.centroid();
    auto tri = canonical_triangle();
    Point diag1 = tri[1] - tri[0];
    Point diag2 = tri[2] - tri[0];
    GoodPair sq_pair;
    sq_pair.line1 = Line{sq_center, {diag1.x / norm(diag1), diag1.y / norm(diag1)}};
    sq_pair.line2 = Line{sq_center, {diag2.x / norm(diag2), diag2.y / norm(diag2)}};
    sq_pair.x = sq_center;
    for (int which : {1, 2}) {
        MonotoneSplit split = monotone_split(square, sq_pair, which);
        CHECK(split.arc1_monotone);
        CHECK(split.arc2_monotone);
    }

    // the certified pair still splits the boundary into two full arcs
    GoodPair pair = good_pair(round);
    MonotoneSplit split = monotone_split(round, pair, 1);
    CHECK(split.arc1.size() + split.arc2.size() >= round.polygon.vertices.size());
}
