#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "hitset/experiment.hpp"
#include "hitset/offline_oracle.hpp"
#include "hitset/online.hpp"

using namespace hitset;

TEST_CASE("layer assignment") {
    CHECK(layer_of(1.0, 8.0) == 0);
    CHECK(layer_of(1.9, 8.0) == 0);
    CHECK(layer_of(2.0, 8.0) == 1);
    CHECK(layer_of(7.9, 8.0) == 2);
    CHECK(layer_of(8.0, 8.0) == 3);  // radius exactly M joins the top layer
    CHECK(num_layers(8.0) == 4);
    CHECK(num_layers(1.0) == 1);
    CHECK(num_layers(5.0) == 3);
    CHECK_THROWS_AS(layer_of(0.5, 8.0), invalid_input_error);
    CHECK_THROWS_AS(layer_of(9.0, 8.0), invalid_input_error);
}

TEST_CASE("disk tiling geometry") {
    TilingSpec spec = disk_tiling(0);
    double side = std::exp2(-0.5);
    CHECK(spec.v1.x == doctest::Approx(side));
    CHECK(spec.diameter == doctest::Approx(1.0));

    CHECK(tile_of(spec, {0, 0}) == TileIndex{0, 0});
    CHECK(tile_of(spec, {0.71, 0}) == TileIndex{1, 0});  // 0.71 > 2^{-1/2}
    CHECK(tile_of(spec, {-0.01, 0.0}) == TileIndex{-1, 0});

    // half-open boundary convention
    CHECK(tile_of(spec, {side, 0}) == TileIndex{1, 0});
}

TEST_CASE("observation 1: the center tile sits inside the disk") {
    SplitMix64 rng(7);
    for (int j = 0; j <= 3; ++j) {
        TilingSpec spec = disk_tiling(j);
        for (int it = 0; it < 2500; ++it) {
            Point c{(rng.next_unit() - 0.5) * 100.0, (rng.next_unit() - 0.5) * 100.0};
            double r = std::exp2(j) * (1.0 + rng.next_unit());  // in [2^j, 2^{j+1})
            TileIndex tile = tile_of(spec, c);
            for (const Point& corner : tile_polygon(spec, tile)) {
                CHECK(dist(corner, c) <= std::exp2(j) + 1e-9);
                CHECK(dist(corner, c) <= r + 1e-9);
            }
        }
    }
}

TEST_CASE("observation 2: a disk of radius 2^{j+2} crosses at most 24 lines") {
    SplitMix64 rng(9);
    for (int j = 0; j <= 3; ++j) {
        TilingSpec spec = disk_tiling(j);
        for (int it = 0; it < 2500; ++it) {
            Point c{(rng.next_unit() - 0.5) * 200.0, (rng.next_unit() - 0.5) * 200.0};
            double r = std::exp2(j + 2) * rng.next_unit();
            auto lines = lines_hit(spec, j, Disk{c, r});
            int fam1 = 0, fam2 = 0;
            for (const auto& gl : lines) {
                // both orientations of one geometric line count once
                if (gl.orientation < 0) continue;
                (gl.family == 1 ? fam1 : fam2)++;
            }
            int fam1_total = 0, fam2_total = 0;
            std::set<std::int64_t> off1, off2;
            for (const auto& gl : lines) (gl.family == 1 ? off1 : off2).insert(gl.offset);
            fam1_total = static_cast<int>(off1.size());
            fam2_total = static_cast<int>(off2.size());
            CHECK(fam1_total <= 12);
            CHECK(fam2_total <= 12);
            CHECK(fam1_total + fam2_total <= 24);
        }
    }
}

TEST_CASE("directed grid lines orient the object side and split points") {
    TilingSpec spec = disk_tiling(1);
    Disk d{{1.0, 1.0}, 2.5};
    auto lines = lines_hit(spec, 1, d);
    CHECK(!lines.empty());
    for (const auto& gl : lines) {
        DirectedLine geom = grid_line_geometry(spec, gl);
        // L+ is the closed right half-plane and must hold the center
        CHECK(cross(geom.dir, d.center - geom.anchor) <= 1e-9);
    }
    // a disk strictly inside one tile crosses nothing
    TilingSpec s0 = disk_tiling(0);
    auto none = lines_hit(s0, 0, Disk{{0.35, 0.35}, 0.05});
    CHECK(none.empty());
}

TEST_CASE("online disks: every arrival is hit, additions bounded") {
    for (std::uint64_t seed = 3; seed <= 8; ++seed) {
        GenSpec gs;
        gs.kind = InstanceKind::disks;
        gs.n = 40;
        gs.m = 120;
        gs.cap = 8;
        gs.seed = seed;
        Instance inst = gen_instance(gs);
        OnlineDiskHitter hitter(inst.points, OnlineConfig{inst.cap, false});
        for (std::size_t i = 0; i < inst.objects.size(); ++i) {
            const Disk& d = std::get<Disk>(inst.objects[i]);
            StepTelemetry tel = hitter.insert(d);
            CHECK(tel.points_added <= 1 + 2 * tel.lines_invoked);
            bool hit = false;
            for (std::size_t h : hitter.hits())
                if (disk_contains(d, inst.points[h])) hit = true;
            CHECK(hit);
        }
        // hitting set is monotone and duplicate-free
        std::set<std::size_t> uniq(hitter.hits().begin(), hitter.hits().end());
        CHECK(uniq.size() == hitter.hits().size());
    }
}

TEST_CASE("online disks: first arrival with a populated center tile costs one point") {
    std::vector<Point> pts{{0.1, 0.1}, {5.0, 5.0}};
    OnlineDiskHitter hitter(pts, OnlineConfig{1.0, false});
    StepTelemetry tel = hitter.insert(Disk{{0.12, 0.12}, 1.0});
    CHECK(tel.tile_hit);
    CHECK(tel.points_added == 1);
    StepTelemetry again = hitter.insert(Disk{{0.12, 0.12}, 1.0});
    CHECK(again.was_hit);
    CHECK(again.points_added == 0);
}

TEST_CASE("online disks: unhittable objects error or skip per config") {
    std::vector<Point> pts{{0, 0}};
    OnlineDiskHitter strict(pts, OnlineConfig{1.0, false});
    CHECK_THROWS_AS(strict.insert(Disk{{100, 100}, 1.0}), unhittable_object_error);
    OnlineDiskHitter lax(pts, OnlineConfig{1.0, true});
    StepTelemetry tel = lax.insert(Disk{{100, 100}, 1.0});
    CHECK(tel.unhittable);
}

TEST_CASE("online homothets: every arrival is hit") {
    for (std::uint64_t seed = 2; seed <= 4; ++seed) {
        GenSpec gs;
        gs.kind = InstanceKind::homothets;
        gs.n = 25;
        gs.m = 60;
        gs.cap = 4;
        gs.seed = seed;
        gs.body = seed % 2 ? "square" : "triangle";
        Instance inst = gen_instance(gs);
        OnlineHomothetHitter hitter(inst.points, *inst.body, OnlineConfig{inst.cap, false});
        for (std::size_t i = 0; i < inst.objects.size(); ++i) {
            const auto& h = std::get<HomothetObject>(inst.objects[i]);
            hitter.insert(h.scale, h.t);
            bool hit = false;
            for (std::size_t idx : hitter.hits())
                if (object_contains(inst, i, inst.points[idx])) hit = true;
            CHECK(hit);
        }
    }
}

TEST_CASE("homothet tiling respects the pair geometry") {
    GenSpec gs;
    gs.kind = InstanceKind::homothets;
    gs.n = 10;
    gs.m = 5;
    gs.cap = 4;
    gs.seed = 11;
    gs.body = "gon64";
    Instance inst = gen_instance(gs);
    OnlineHomothetHitter hitter(inst.points, *inst.body, OnlineConfig{inst.cap, false});
    const GoodPair& pair = hitter.pair();
    for (int j = 0; j < num_layers(inst.cap); ++j) {
        TilingSpec spec = homothet_tiling(j, pair);
        // diameter = 2^j * rho, basis angle >= pi/15
        CHECK(spec.diameter == doctest::Approx(std::exp2(j) / 50.0));
        double d1 = std::hypot(spec.v1.x, spec.v1.y);
        double d2 = std::hypot(spec.v2.x, spec.v2.y);
        CHECK(d1 == doctest::Approx(d2));
        double cosang = dot(spec.v1, spec.v2) / (d1 * d2);
        CHECK(std::acos(std::clamp(cosang, -1.0, 1.0)) >= std::numbers::pi / 15.0 - 1e-9);
        // diag = 2 s cos(alpha/2)
        CHECK(norm(spec.v1 + spec.v2) == doctest::Approx(spec.diameter));

        // observation 1 analogue: the tile of the reference point sits inside
        SplitMix64 rng(13 + static_cast<std::uint64_t>(j));
        for (int it = 0; it < 500; ++it) {
            Point ref{(rng.next_unit() - 0.5) * 50, (rng.next_unit() - 0.5) * 50};
            double scale = std::exp2(j) * (1.0 + rng.next_unit());
            TileIndex tile = tile_of(spec, ref);
            for (const Point& corner : tile_polygon(spec, tile)) {
                CHECK(dist(corner, ref) <= std::exp2(j) / 50.0 + 1e-9);
                (void)scale;
            }
        }
    }
}
