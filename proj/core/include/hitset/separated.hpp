#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hitset/hull.hpp"

namespace hitset {

// Online hitter for the line-separated setting: the point set lives strictly
// on the left of a directed line, objects keep their center (disks) or
// reference point (homothets) on the right. Objects are reduced through the
// hull bijection and delegated to the lattice hitter; a deterministic direct
// hit backs the reduction up whenever the numeric homothet path misbehaves,
// so hitting correctness is unconditional.
class SeparatedHitter {
public:
    // Disk shape.
    SeparatedHitter(std::vector<Point> pts, const DirectedLine& line);
    // Homothet shape; the body is given in caller coordinates with its
    // reference point at the origin.
    SeparatedHitter(std::vector<Point> pts, const DirectedLine& line, const ConvexPolygon& body,
                    int boundary_samples = 512);

    // Returns indices (into the constructor's point list) of newly chosen
    // hitting points. The object must contain at least one input point.
    std::vector<std::size_t> insert(const Disk& d);
    std::vector<std::size_t> insert_homothet(double scale, const Point& ref);

    bool hits_object(const Disk& d) const;
    bool hits_homothet(double scale, const Point& ref) const;

    const std::vector<std::size_t>& local_hits() const { return local_hits_; }
    int fallback_count() const { return fallback_count_; }
    const HullReduction& reduction() const { return reduction_; }
    const HittingState& inner_state() const { return state_; }
    const std::vector<Point>& points() const { return pts_; }
    bool is_disk_shape() const { return !body_.has_value(); }
    const LocalBody& local_body() const { return *body_; }

private:
    bool contains_point(const Disk* d, const double* scale, const Point* ref,
                        std::size_t idx) const;
    std::vector<std::size_t> insert_impl(const Disk* d, const double* scale, const Point* ref);
    std::vector<std::size_t> fallback_hit(const std::vector<std::size_t>& trace);

    std::vector<Point> pts_;        // caller coordinates
    std::vector<Point> pts_local_;  // local coordinates, same order
    SeparatedFrame frame_;
    std::optional<LocalBody> body_;  // local frame; disks when absent
    HullReduction reduction_;
    HittingState state_;
    std::vector<std::size_t> local_hits_;  // indices into pts_
    std::vector<char> is_hit_;
    int fallback_count_ = 0;
};

}  // namespace hitset
