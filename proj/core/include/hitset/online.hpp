#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "hitset/body_shape.hpp"
#include "hitset/separated.hpp"

namespace hitset {

// Layer index j with 2^j <= r < 2^(j+1); radii live in [1, M].
int layer_of(double r, double m_cap);
int num_layers(double m_cap);  // floor(log2 M) + 1

struct TilingSpec {
    Point v1{1, 0};  // basis vectors spanning the tile lattice
    Point v2{0, 1};
    Point origin{0, 0};
    double diameter = 0;  // tile diameter

    struct Family {      // grid lines orthogonal to `normal`, spacing `pitch`
        Point par;       // unit vector parallel to the lines
        Point normal;    // unit normal, pitch > 0 along it
        double pitch = 1;
    };
    Family family1;  // lines parallel to v2, offsets step by v1
    Family family2;  // lines parallel to v1, offsets step by v2
};

// Square tiling of side 2^(j-1/2); tile diameter 2^j.
TilingSpec disk_tiling(int layer);
// Rhombic tiling with sides along the good-pair directions, side length
// 2^j * rho / (2 cos(alpha/2)); tile diameter 2^j * rho with rho = 1/50.
TilingSpec homothet_tiling(int layer, const GoodPair& pair);

struct TileIndex {
    std::int64_t i1 = 0, i2 = 0;
    friend bool operator==(const TileIndex& a, const TileIndex& b) {
        return a.i1 == b.i1 && a.i2 == b.i2;
    }
};

// Lattice coordinates of p; tiles are half-open in both basis coordinates.
TileIndex tile_of(const TilingSpec& spec, const Point& p);
std::array<Point, 4> tile_polygon(const TilingSpec& spec, const TileIndex& t);

struct DirectedGridLine {
    int layer = 0;
    int family = 1;  // 1: parallel to v2, 2: parallel to v1
    std::int64_t offset = 0;
    int orientation = 1;  // +1: direction +par, -1: -par

    friend bool operator<(const DirectedGridLine& a, const DirectedGridLine& b) {
        if (a.layer != b.layer) return a.layer < b.layer;
        if (a.family != b.family) return a.family < b.family;
        if (a.offset != b.offset) return a.offset < b.offset;
        return a.orientation < b.orientation;
    }
};

DirectedLine grid_line_geometry(const TilingSpec& spec, const DirectedGridLine& line);

// All grid lines of the layer intersecting the object, directed so that the
// closed right half-plane contains the center/reference point; lines through
// the point itself are emitted with both orientations.
std::vector<DirectedGridLine> lines_hit(const TilingSpec& spec, int layer, const Disk& d);
std::vector<DirectedGridLine> lines_hit(const TilingSpec& spec, int layer,
                                        const ConvexPolygon& body_ref_origin, double scale,
                                        const Point& ref);

struct StepTelemetry {
    bool was_hit = false;
    int layer = -1;
    bool tile_hit = false;
    int lines_invoked = 0;
    int points_added = 0;
    bool fallback = false;
    bool unhittable = false;
};

struct OnlineConfig {
    double m_cap = 1;
    bool skip_unhittable = false;
};

// Top-level online hitter for disks of radii in [1, M].
class OnlineDiskHitter {
public:
    OnlineDiskHitter(std::vector<Point> points, OnlineConfig cfg);

    StepTelemetry insert(const Disk& d);

    const std::vector<std::size_t>& hits() const { return hits_; }
    const std::vector<Point>& points() const { return pts_; }
    const std::vector<StepTelemetry>& telemetry() const { return telemetry_; }
    int total_fallbacks() const { return total_fallbacks_; }

private:
    std::vector<Point> pts_;
    OnlineConfig cfg_;
    std::vector<TilingSpec> tilings_;
    std::vector<std::size_t> hits_;
    std::vector<char> in_hits_;
    std::map<DirectedGridLine, std::unique_ptr<SeparatedHitter>> sub_;
    std::map<DirectedGridLine, std::vector<std::size_t>> sub_points_;  // hitter idx -> global idx
    std::vector<StepTelemetry> telemetry_;
    int total_fallbacks_ = 0;
    std::size_t step_ = 0;
};

// Top-level online hitter for positive homothets of a convex body with
// scaling factors in [1, M]. Works in the canonical frame of the body; hit
// points are reported as indices into the original point list.
class OnlineHomothetHitter {
public:
    OnlineHomothetHitter(std::vector<Point> points, const ConvexPolygon& body, OnlineConfig cfg);

    // sigma = scale * body + translation, both in original coordinates.
    StepTelemetry insert(double scale, const Point& translation);

    const std::vector<std::size_t>& hits() const { return hits_; }
    const std::vector<Point>& points() const { return pts_; }
    const std::vector<StepTelemetry>& telemetry() const { return telemetry_; }
    const NormalizedBody& body() const { return body_; }
    const GoodPair& pair() const { return pair_; }
    int total_fallbacks() const { return total_fallbacks_; }

    Point canonical_reference(double scale, const Point& translation) const;

private:
    std::vector<Point> pts_;        // original coordinates
    std::vector<Point> pts_canon_;  // canonical frame, reference at origin
    OnlineConfig cfg_;
    NormalizedBody body_;
    GoodPair pair_;
    ConvexPolygon body_ref_origin_;  // canonical body shifted so r(C) is the origin
    std::vector<TilingSpec> tilings_;
    std::vector<std::size_t> hits_;
    std::vector<char> in_hits_;
    std::map<DirectedGridLine, std::unique_ptr<SeparatedHitter>> sub_;
    std::map<DirectedGridLine, std::vector<std::size_t>> sub_points_;
    std::vector<StepTelemetry> telemetry_;
    int total_fallbacks_ = 0;
    std::size_t step_ = 0;
};

}  // namespace hitset
