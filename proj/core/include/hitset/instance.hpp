#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hitset/geometry.hpp"
#include "hitset/hull.hpp"
#include "hitset/lattice_hitter.hpp"

namespace hitset {

struct HomothetObject {
    double scale = 1;
    Point t{0, 0};  // sigma = scale * body + t
};

using GeometricObject = std::variant<Disk, BottomlessRect, HomothetObject>;

enum class InstanceKind { bottomless, separated_disks, disks, homothets };

std::string to_string(InstanceKind k);
InstanceKind kind_from_string(const std::string& s);

struct Instance {
    std::string name;
    InstanceKind kind = InstanceKind::disks;
    double cap = 1;  // N for bottomless/separated, M for disks/homothets
    std::uint64_t seed = 0;
    std::vector<Point> points;
    std::optional<ConvexPolygon> body;  // homothets only
    std::vector<GeometricObject> objects;
};

// The one containment predicate shared by generators, oracles, verification
// and the replay loop (original coordinates).
bool object_contains(const Instance& inst, const GeometricObject& obj, const Point& p);
bool object_contains(const Instance& inst, std::size_t obj_index, const Point& p);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

// splitmix64; fixed algorithm so instances reproduce bit-for-bit.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double next_unit() {  // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(next() %
                                              static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace hitset
