#pragma once

#include <array>
#include <string>
#include <vector>

#include "hitset/geometry.hpp"

namespace hitset {

enum class ChordType { central, left, right };

struct Line {
    Point point;
    Point dir;  // unit
};

Point intersect_lines(const Line& a, const Line& b);
double line_angle(const Line& a, const Line& b);  // in [0, pi/2]

struct Chord {
    Point p;  // triangle vertex p_i
    Point q;  // touch point q_i on the far parallel tangent
    ChordType type = ChordType::central;
    Line as_line() const;
};

using Triangle = std::array<Point, 3>;

// Chord types plus the canonical-frame construction lines of the case
// analysis: s_i^-, s_i^+ and the triangles T_i^-, T_i^+, T_left, T_right.
struct ChordConfig {
    std::array<Chord, 3> chords;
    std::array<Point, 3> s_minus;
    std::array<Point, 3> s_plus;
    std::array<Triangle, 3> tri_minus;
    std::array<Triangle, 3> tri_plus;
    Triangle tri_left;
    Triangle tri_right;
};

ChordConfig classify_chords(const NormalizedBody& body);

enum class GoodPairCase {
    center_center,
    case1,
    case2a,
    case2b,
    case2c,
    case2d,
    search_fallback,
};

const char* to_string(GoodPairCase c);

struct GoodPair {
    Line line1;
    Line line2;
    Point x;            // intersection; the reference point of the body
    double angle = 0;   // between the lines, in (0, pi/2]
    double clearance = 0;  // largest rho with B(x, rho) inside the body
    GoodPairCase case_tag = GoodPairCase::search_fallback;
};

struct GoodPairDiagnostics {
    bool ok = false;
    std::string failed;  // "angle" | "clearance" | "realizability" when !ok
    double angle = 0;
    double clearance = 0;
};

// Certified pair of tangent-chord directions: angle >= pi/15, the
// intersection point carries an interior disk of radius 1/50. Constructive
// case analysis first, verified; a direction-grid search as fallback.
GoodPair good_pair(const NormalizedBody& body);

GoodPairDiagnostics verify_good_pair(const NormalizedBody& body, const GoodPair& pair);

struct MonotoneSplit {
    std::vector<Point> arc1, arc2;  // boundary arcs between the chord endpoints
    bool arc1_monotone = false;
    bool arc2_monotone = false;
};

// Splits the body boundary at the two crossings of the chosen pair line and
// reports whether each arc projects monotonically onto the line direction.
MonotoneSplit monotone_split(const NormalizedBody& body, const GoodPair& pair, int which);

}  // namespace hitset
