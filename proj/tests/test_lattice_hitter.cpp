#include <doctest.h>

#include <cmath>

#include "hitset/instance.hpp"
#include "hitset/lattice_hitter.hpp"
#include "hitset/offline_oracle.hpp"

using namespace hitset;

TEST_CASE("lowest point of canonical strips") {
    LatticeIndex idx = build_lattice_index({{3, 5}}, 8);
    CHECK(idx.lowest_point({3, 0}) == GridPoint{3, 5});
    CHECK(idx.lowest_point({1, 1}) == GridPoint{3, 5});
    CHECK(idx.lowest_point({0, 2}) == GridPoint{3, 5});
    CHECK(idx.lowest_point({0, 3}) == GridPoint{3, 5});
    CHECK_FALSE(idx.lowest_point({0, 0}).has_value());

    LatticeIndex two = build_lattice_index({{0, 2}, {1, 1}}, 4);
    CHECK(two.lowest_point({0, 1}) == GridPoint{1, 1});

    LatticeIndex tie = build_lattice_index({{0, 1}, {1, 1}}, 2);
    CHECK(tie.lowest_point({0, 1}) == GridPoint{0, 1});  // y tie broken by min x
}

TEST_CASE("lattice index rejects out-of-range points") {
    CHECK_THROWS_AS(build_lattice_index({{8, 0}}, 8), invalid_input_error);
    CHECK_THROWS_AS(build_lattice_index({{-1, 0}}, 8), invalid_input_error);
}

TEST_CASE("alg0 on the worked rectangle example") {
    // span [5,11), splitting point 8; the largest qualifying intervals are
    // [6,8) on the left and [8,10) on the right
    std::vector<GridPoint> pts{{5, 9}, {6, 2}, {7, 3}, {8, 6}, {9, 3}, {10, 7}};
    LatticeIndex idx = build_lattice_index(pts, 16);
    HittingState state;
    BottomlessRect rect{5, 11, 4};
    auto obj = rect_to_object(idx, rect);
    REQUIRE(obj.has_value());
    CHECK(obj->span == IntInterval{6, 10});  // in-rect points span [6,10)

    // feed the full strip object instead so the span is [5,11)
    std::vector<GridPoint> all_low{{5, 9}, {6, 2}, {7, 3}, {8, 6}, {9, 3}};
    // use a rectangle tall enough to contain the edge columns
    BottomlessRect tall{5, 11, 10};
    auto obj2 = rect_to_object(idx, tall);
    REQUIRE(obj2.has_value());
    CHECK(obj2->span == IntInterval{5, 11});
    auto added = alg0_insert(idx, state, *obj2);
    REQUIRE(added.size() == 2);
    CHECK(added[0] == GridPoint{6, 2});
    CHECK(added[1] == GridPoint{9, 3});
    const InsertEvent& ev = state.event_log.back();
    REQUIRE(ev.intervals.size() == 2);
    CHECK(ev.intervals[0] == CanonicalInterval{3, 1});  // [6,8)
    CHECK(ev.intervals[1] == CanonicalInterval{4, 1});  // [8,10)

    // idempotence on hit objects
    auto again = alg0_insert(idx, state, *obj2);
    CHECK(again.empty());
}

TEST_CASE("alg0 on a singleton object") {
    LatticeIndex idx = build_lattice_index({{3, 5}}, 8);
    HittingState state;
    auto obj = make_object({{3, 5}});
    auto added = alg0_insert(idx, state, obj);
    REQUIRE(added.size() == 1);
    CHECK(added[0] == GridPoint{3, 5});
}

TEST_CASE("rect_to_object edge cases") {
    LatticeIndex idx = build_lattice_index({{0, 0}, {3, 2}, {7, 1}}, 8);
    auto all = rect_to_object(idx, {0, 8, 8});
    REQUIRE(all.has_value());
    CHECK(all->members.size() == 3);
    CHECK_FALSE(rect_to_object(idx, {0, 8, 0}).has_value());
    auto some = rect_to_object(idx, {1, 8, 2});
    REQUIRE(some.has_value());
    CHECK(some->members.size() == 1);
}

TEST_CASE("alg0 random bottomless run: correctness, growth, bound") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SplitMix64 rng(seed);
        const std::int64_t n_cap = 64;
        std::vector<GridPoint> pts;
        for (int i = 0; i < 24; ++i)
            pts.push_back({rng.next_int(0, n_cap - 1), rng.next_int(0, n_cap - 1)});
        LatticeIndex idx = build_lattice_index(pts, n_cap);
        HittingState state;
        std::vector<BottomlessRect> rects;
        std::vector<LowestPointObject> objs;
        for (int i = 0; i < 60; ++i) {
            const GridPoint& target =
                idx.points()[static_cast<std::size_t>(rng.next_int(
                    0, static_cast<std::int64_t>(idx.points().size()) - 1))];
            BottomlessRect r{rng.next_int(0, target.x), rng.next_int(target.x + 1, n_cap),
                             rng.next_int(target.y + 1, n_cap)};
            auto obj = rect_to_object(idx, r);
            REQUIRE(obj.has_value());
            // rectangles always satisfy the lowest-point property
            CHECK(has_lowest_point_property(idx, *obj));
            auto added = alg0_insert(idx, state, *obj);
            CHECK(added.size() <= 2);
            for (const GridPoint& g : added) CHECK(obj->contains(g));
            CHECK(state.is_hit(*obj));
            rects.push_back(r);
            objs.push_back(*obj);
        }
        // every presented object remains hit at the end
        for (const auto& o : objs) CHECK(state.is_hit(o));

        // competitive ceiling against the exact optimum
        auto covers = [&](std::size_t o, std::size_t p) {
            const BottomlessRect& r = rects[o];
            const GridPoint& g = idx.points()[p];
            return g.x >= r.a && g.x < r.b && g.y < r.c;
        };
        auto opt = exact_opt(idx.points().size(), rects.size(), covers);
        double bound = 16.0 * (std::log2(static_cast<double>(idx.extent())) + 2.0) *
                       static_cast<double>(opt.size());
        CHECK(static_cast<double>(state.hits.size()) <= bound);
    }
}

TEST_CASE("alg0 rejects foreign members and flags property violations") {
    LatticeIndex idx = build_lattice_index({{0, 0}, {1, 5}, {2, 1}}, 8);
    HittingState state;
    CHECK_THROWS_AS(alg0_insert(idx, state, make_object({{3, 3}})), invalid_input_error);

    CHECK(has_lowest_point_property(idx, make_object({{0, 0}, {1, 5}})));
    CHECK(has_lowest_point_property(idx, make_object({{0, 0}, {2, 1}})));

    // S misses the strict minimum (1,0) of the strip [0,3) inside its span
    LatticeIndex idx2 = build_lattice_index({{0, 3}, {1, 0}, {2, 3}}, 4);
    auto bad = make_object({{0, 3}, {2, 3}});
    CHECK_FALSE(has_lowest_point_property(idx2, bad));
    HittingState st2;
    CHECK_THROWS_AS(alg0_insert(idx2, st2, bad), property_violation_error);
}
