#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hitset/geometry.hpp"
#include "hitset/lattice_hitter.hpp"

namespace hitset {

struct DirectedLine {
    Point anchor{0, 0};
    Point dir{1, 0};  // unit direction
};

// Rigid frame taking the directed line to the x-axis: the left side L^-
// (holding P) becomes the open upper half-plane and the right side L^+
// the closed lower half-plane.
struct SeparatedFrame {
    DirectedLine line;
    AffineFrame to_local;

    Point local(const Point& p) const { return to_local.map(p); }
    Point global(const Point& p) const { return to_local.unmap(p); }
};

SeparatedFrame make_separated_frame(const DirectedLine& line);

// Scales are positive reals; +infinity marks points that stay on the hull
// boundary for every radius (the lower convex chain).
using ExtendedScale = double;

// True iff some empty disk of radius t, centered on or below the x-axis,
// passes through q (all coordinates local). Arc-coverage test on the circle
// of centers.
bool disk_feasible(const Point& q, double t, const std::vector<Point>& pts);

// Maximum radius t with q on the t-hull boundary of pts: +infinity on the
// lower convex chain, nullopt when no empty touching disk exists (q is not
// relevant for any hitting set). `q_index` selects the query point.
// Computed as the farthest point of the convex feasible-center region
// {c : c_y <= 0 and |c - p| >= |c - q| for all p}.
std::optional<ExtendedScale> t_max(std::size_t q_index, const std::vector<Point>& pts);

// Convex body in local-frame coordinates with its reference point at the
// origin; homothets are t*poly + b with reference point b.
struct LocalBody {
    ConvexPolygon poly;
    std::vector<Point> contacts;  // boundary contact samples (vertices + arc samples)
    double max_radius = 0;        // max vertex norm
};

LocalBody make_local_body(const ConvexPolygon& poly, int boundary_samples = 512);

// Homothet analogue of disk_feasible, discretized over boundary contact
// configurations.
bool homothet_feasible(const Point& q, double t, const std::vector<Point>& pts,
                       const LocalBody& body);

// Homothet analogue of t_max: geometric probing down from `scale_cap`
// followed by bisection; +infinity when feasible at the cap.
std::optional<ExtendedScale> homothet_scale_max(std::size_t q_index,
                                                const std::vector<Point>& pts,
                                                const LocalBody& body, double scale_cap);

// Reduction of a line-separated instance to lattice points: vertical dedup,
// relevant subset Q, scale classes, and the bijection pi into the lattice.
struct HullReduction {
    SeparatedFrame frame;
    std::vector<std::size_t> kept;    // indices into the input point list, by local x
    std::vector<Point> local;         // local coordinates, same order as kept
    std::vector<std::optional<ExtendedScale>> tval;  // per kept point; nullopt = outside Q
    std::vector<ExtendedScale> radii;  // distinct scale classes, decreasing, inf first
    std::vector<GridPoint> pi;         // lattice image per kept point
    std::int64_t lattice_extent = 2;   // next power of two >= n+1
    std::vector<std::size_t> removed;  // vertically-dominated input indices
    LatticeIndex index;                // lattice index over pi(P)
    int probe_anomalies = 0;           // homothet feasibility-interval probe failures

    std::optional<std::size_t> pi_inverse(const GridPoint& g) const;

private:
    friend HullReduction finish_reduction(HullReduction red);
    std::map<GridPoint, std::size_t> inverse_;
};

HullReduction build_disk_reduction(const std::vector<Point>& pts, const SeparatedFrame& frame);

// `body_local` must already be expressed in the local frame. The convenience
// overload rotates a caller-frame body (reference point at the origin).
HullReduction build_homothet_reduction(const std::vector<Point>& pts, const SeparatedFrame& frame,
                                       const LocalBody& body_local);
HullReduction build_homothet_reduction(const std::vector<Point>& pts, const SeparatedFrame& frame,
                                       const ConvexPolygon& body_ref_at_origin,
                                       int boundary_samples = 512);

// Rotates a caller-frame body polygon into the local frame of `frame`.
ConvexPolygon rotate_body_to_local(const ConvexPolygon& body, const SeparatedFrame& frame);

struct Disk {
    Point center;
    double radius = 0;
};

bool disk_contains(const Disk& d, const Point& p);

// pi-image of disk ∩ pts; nullopt when empty. The disk center must lie on
// the L+ side (local y <= 0).
std::optional<LowestPointObject> map_disk(const HullReduction& red,
                                          const std::vector<Point>& pts, const Disk& d);

// Closed containment in scale*body + ref (body in local-frame coordinates).
bool homothet_contains(const LocalBody& body, double scale, const Point& ref_local,
                       const Point& p_local);

struct MappedObject {
    std::optional<LowestPointObject> object;
    bool property_ok = true;  // lowest-point property verified against pi(P)
};

// pi-image of a homothet trace plus the brute-force lowest-point-property
// verdict (consumed by the separated fallback).
MappedObject map_homothet(const HullReduction& red, const LocalBody& body, double scale,
                          const Point& ref_local);

}  // namespace hitset
