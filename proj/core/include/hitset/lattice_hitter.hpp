#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hitset/canonical.hpp"
#include "hitset/errors.hpp"

namespace hitset {

struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const GridPoint& a, const GridPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const GridPoint& a, const GridPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

// Static index over a grid point set: memoizes p(I), the lowest point of
// each canonical strip (minimum y, ties by minimum x).
class LatticeIndex {
public:
    LatticeIndex() = default;
    LatticeIndex(std::vector<GridPoint> points, std::int64_t n);

    std::int64_t extent() const { return extent_; }  // power of two
    const std::vector<GridPoint>& points() const { return points_; }
    bool has_point(const GridPoint& p) const;

    // Lowest point of the strip I x R over the indexed set; nullopt when the
    // strip is empty.
    std::optional<GridPoint> lowest_point(const CanonicalInterval& iv) const;

private:
    std::vector<GridPoint> points_;  // sorted by (x, y)
    std::int64_t extent_ = 1;
    mutable std::map<std::pair<std::int64_t, std::int64_t>, std::optional<GridPoint>> memo_;
};

LatticeIndex build_lattice_index(std::vector<GridPoint> points, std::int64_t n);

// An arriving object, already reduced to its grid-point trace.
struct LowestPointObject {
    std::vector<GridPoint> members;  // nonempty, sorted
    IntInterval span;

    bool contains(const GridPoint& p) const;
};

LowestPointObject make_object(std::vector<GridPoint> members);

struct BottomlessRect {
    std::int64_t a = 0, b = 0, c = 0;  // region [a,b) x [0,c)
};

struct InsertEvent {
    bool triggered = false;
    std::vector<CanonicalInterval> intervals;
    std::vector<GridPoint> added;
};

struct HittingState {
    std::vector<GridPoint> hits;  // insertion order, no duplicates
    std::set<GridPoint> hit_set;
    std::vector<InsertEvent> event_log;

    bool is_hit(const LowestPointObject& s) const;
};

// One step of the online hitter: picks the lowest point of the largest
// qualifying canonical interval on each side of the splitting point of
// span(S). Adds at most two points. Throws property_violation_error when a
// nonempty side has no qualifying interval (the object lacks the
// lowest-point property).
std::vector<GridPoint> alg0_insert(const LatticeIndex& index, HittingState& state,
                                   const LowestPointObject& s);

// Grid-point trace of a bottomless rectangle, or nullopt when empty.
std::optional<LowestPointObject> rect_to_object(const LatticeIndex& index,
                                                const BottomlessRect& r);

// Brute-force check of the lowest-point property of `members` against the
// full point set of `index`: every strip I inside the span that contains a
// member x-coordinate must have all of its minimum-y points in `members`.
bool has_lowest_point_property(const LatticeIndex& index, const LowestPointObject& s);

}  // namespace hitset
