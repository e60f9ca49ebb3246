#include "hitset/lattice_hitter.hpp"

#include <algorithm>
#include <limits>

namespace hitset {

LatticeIndex::LatticeIndex(std::vector<GridPoint> points, std::int64_t n) {
    if (n <= 0) throw invalid_input_error("lattice index: extent must be positive");
    for (const auto& p : points) {
        if (p.x < 0 || p.x >= n || p.y < 0 || p.y >= n)
            throw invalid_input_error("lattice index: point outside [0,N)^2");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
    extent_ = next_pow2(n);
}

bool LatticeIndex::has_point(const GridPoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::optional<GridPoint> LatticeIndex::lowest_point(const CanonicalInterval& iv) const {
    auto key = std::make_pair(iv.q, iv.j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    GridPoint probe{iv.lo(), std::numeric_limits<std::int64_t>::min()};
    auto lo = std::lower_bound(points_.begin(), points_.end(), probe);
    std::optional<GridPoint> best;
    for (auto p = lo; p != points_.end() && p->x < iv.hi(); ++p) {
        if (!best || p->y < best->y || (p->y == best->y && p->x < best->x)) best = *p;
    }
    memo_.emplace(key, best);
    return best;
}

LatticeIndex build_lattice_index(std::vector<GridPoint> points, std::int64_t n) {
    return LatticeIndex(std::move(points), n);
}

bool LowestPointObject::contains(const GridPoint& p) const {
    return std::binary_search(members.begin(), members.end(), p);
}

LowestPointObject make_object(std::vector<GridPoint> members) {
    if (members.empty()) throw invalid_input_error("object: empty member set");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<std::int64_t> xs;
    xs.reserve(members.size());
    for (const auto& p : members) xs.push_back(p.x);
    IntInterval sp = span(xs);
    return {std::move(members), sp};
}

bool HittingState::is_hit(const LowestPointObject& s) const {
    for (const auto& p : s.members)
        if (hit_set.count(p)) return true;
    return false;
}

namespace {

// Largest interval of the side partition whose lowest point belongs to S;
// partitions within one side have distinct sizes, so sort by size descending.
std::optional<std::pair<CanonicalInterval, GridPoint>> pick_on_side(
    const LatticeIndex& index, const LowestPointObject& s,
    std::vector<CanonicalInterval> side) {
    std::sort(side.begin(), side.end(),
              [](const CanonicalInterval& u, const CanonicalInterval& v) { return u.j > v.j; });
    for (const auto& iv : side) {
        auto p = index.lowest_point(iv);
        if (p && s.contains(*p)) return std::make_pair(iv, *p);
    }
    return std::nullopt;
}

bool side_meets_object(const LowestPointObject& s, std::int64_t lo, std::int64_t hi) {
    for (const auto& p : s.members)
        if (p.x >= lo && p.x < hi) return true;
    return false;
}

}  // namespace

std::vector<GridPoint> alg0_insert(const LatticeIndex& index, HittingState& state,
                                   const LowestPointObject& s) {
    if (s.members.empty()) throw invalid_input_error("alg0_insert: empty object");
    for (const auto& p : s.members)
        if (!index.has_point(p))
            throw invalid_input_error("alg0_insert: object member not in the point set");

    if (state.is_hit(s)) {
        state.event_log.push_back({false, {}, {}});
        return {};
    }

    InsertEvent ev;
    ev.triggered = true;

    auto split = splitting_point(s.span);
    std::vector<CanonicalInterval> left_side, right_side;
    if (split) {
        left_side = canonical_partition({s.span.a, *split});
        right_side = canonical_partition({*split, s.span.b});
    } else {
        // canonical span: A empty, B = {[a,b)}
        right_side = canonical_partition(s.span);
    }
    std::int64_t s_point = split ? *split : s.span.a;

    std::vector<GridPoint> added;
    if (split && side_meets_object(s, s.span.a, s_point)) {
        auto got = pick_on_side(index, s, left_side);
        if (!got)
            throw property_violation_error(property_violation_error::side::left,
                                           "no qualifying interval left of the splitting point");
        ev.intervals.push_back(got->first);
        if (!state.hit_set.count(got->second)) {
            state.hits.push_back(got->second);
            state.hit_set.insert(got->second);
            added.push_back(got->second);
        }
    }
    if (side_meets_object(s, s_point, s.span.b)) {
        auto got = pick_on_side(index, s, right_side);
        if (!got)
            throw property_violation_error(property_violation_error::side::right,
                                           "no qualifying interval right of the splitting point");
        ev.intervals.push_back(got->first);
        if (!state.hit_set.count(got->second)) {
            state.hits.push_back(got->second);
            state.hit_set.insert(got->second);
            added.push_back(got->second);
        }
    }

    ev.added = added;
    state.event_log.push_back(std::move(ev));
    return added;
}

std::optional<LowestPointObject> rect_to_object(const LatticeIndex& index,
                                                const BottomlessRect& r) {
    if (r.a < 0 || r.a >= r.b || r.c < 0)
        throw invalid_input_error("rect_to_object: malformed rectangle");
    std::vector<GridPoint> members;
    for (const auto& p : index.points()) {
        if (p.x >= r.a && p.x < r.b && p.y >= 0 && p.y < r.c) members.push_back(p);
    }
    if (members.empty()) return std::nullopt;
    return make_object(std::move(members));
}

bool has_lowest_point_property(const LatticeIndex& index, const LowestPointObject& s) {
    const auto& all = index.points();
    std::int64_t a = s.span.a, b = s.span.b;
    for (std::int64_t lo = a; lo < b; ++lo) {
        for (std::int64_t hi = lo + 1; hi <= b; ++hi) {
            if (!side_meets_object(s, lo, hi)) continue;
            std::int64_t min_y = std::numeric_limits<std::int64_t>::max();
            for (const auto& p : all)
                if (p.x >= lo && p.x < hi) min_y = std::min(min_y, p.y);
            if (min_y == std::numeric_limits<std::int64_t>::max()) continue;
            for (const auto& p : all) {
                if (p.x >= lo && p.x < hi && p.y == min_y && !s.contains(p)) return false;
            }
        }
    }
    return true;
}

}  // namespace hitset
