#include "hitset/separated.hpp"

#include <algorithm>

namespace hitset {

SeparatedHitter::SeparatedHitter(std::vector<Point> pts, const DirectedLine& line)
    : pts_(std::move(pts)), frame_(make_separated_frame(line)) {
    if (pts_.empty()) throw invalid_input_error("separated hitter: empty point set");
    pts_local_.reserve(pts_.size());
    for (const Point& p : pts_) pts_local_.push_back(frame_.local(p));
    reduction_ = build_disk_reduction(pts_, frame_);
    is_hit_.assign(pts_.size(), 0);
}

SeparatedHitter::SeparatedHitter(std::vector<Point> pts, const DirectedLine& line,
                                 const ConvexPolygon& body, int boundary_samples)
    : pts_(std::move(pts)), frame_(make_separated_frame(line)) {
    if (pts_.empty()) throw invalid_input_error("separated hitter: empty point set");
    pts_local_.reserve(pts_.size());
    for (const Point& p : pts_) pts_local_.push_back(frame_.local(p));
    body_ = make_local_body(rotate_body_to_local(body, frame_), boundary_samples);
    reduction_ = build_homothet_reduction(pts_, frame_, *body_);
    is_hit_.assign(pts_.size(), 0);
}

bool SeparatedHitter::contains_point(const Disk* d, const double* scale, const Point* ref,
                                     std::size_t idx) const {
    if (d) return disk_contains(*d, pts_[idx]);
    return homothet_contains(*body_, *scale, *ref, pts_local_[idx]);
}

bool SeparatedHitter::hits_object(const Disk& d) const {
    for (std::size_t i : local_hits_)
        if (disk_contains(d, pts_[i])) return true;
    return false;
}

bool SeparatedHitter::hits_homothet(double scale, const Point& ref) const {
    Point ref_local = frame_.local(ref);
    for (std::size_t i : local_hits_)
        if (homothet_contains(*body_, scale, ref_local, pts_local_[i])) return true;
    return false;
}

std::vector<std::size_t> SeparatedHitter::fallback_hit(const std::vector<std::size_t>& trace) {
    ++fallback_count_;
    std::size_t best = trace.front();
    for (std::size_t i : trace) {
        const Point& a = pts_local_[i];
        const Point& b = pts_local_[best];
        if (a.y < b.y || (a.y == b.y && a.x < b.x)) best = i;
    }
    local_hits_.push_back(best);
    is_hit_[best] = 1;
    // keep the lattice state consistent when the point survived dedup
    for (std::size_t k = 0; k < reduction_.kept.size(); ++k) {
        if (reduction_.kept[k] == best) {
            GridPoint g = reduction_.pi[k];
            if (!state_.hit_set.count(g)) {
                state_.hits.push_back(g);
                state_.hit_set.insert(g);
            }
            break;
        }
    }
    return {best};
}

std::vector<std::size_t> SeparatedHitter::insert_impl(const Disk* d, const double* scale,
                                                      const Point* ref) {
    // already hit?
    for (std::size_t i : local_hits_)
        if (contains_point(d, scale, ref, i)) return {};

    std::vector<std::size_t> trace;  // indices into pts_
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (contains_point(d, scale, ref, i)) trace.push_back(i);
    if (trace.empty())
        throw invalid_input_error("separated insert: object contains no input point");

    std::optional<LowestPointObject> mapped;
    bool property_ok = true;
    if (d) {
        mapped = map_disk(reduction_, pts_, *d);
    } else {
        MappedObject mo = map_homothet(reduction_, *body_, *scale, *ref);
        mapped = mo.object;
        property_ok = mo.property_ok;
    }
    // the kept trace can be empty if dedup dropped every witness
    if (!mapped || !property_ok) return fallback_hit(trace);

    std::vector<GridPoint> added;
    try {
        added = alg0_insert(reduction_.index, state_, *mapped);
    } catch (const property_violation_error&) {
        return fallback_hit(trace);
    }

    std::vector<std::size_t> out;
    for (const GridPoint& g : added) {
        auto k = reduction_.pi_inverse(g);
        if (!k) continue;
        std::size_t idx = reduction_.kept[*k];
        if (!is_hit_[idx]) {
            local_hits_.push_back(idx);
            is_hit_[idx] = 1;
            out.push_back(idx);
        }
    }
    // unconditional guarantee: the object is hit on return
    bool hit = false;
    for (std::size_t i : local_hits_)
        if (contains_point(d, scale, ref, i)) hit = true;
    if (!hit) {
        auto fb = fallback_hit(trace);
        out.insert(out.end(), fb.begin(), fb.end());
    }
    return out;
}

std::vector<std::size_t> SeparatedHitter::insert(const Disk& d) {
    if (body_) throw invalid_input_error("separated insert: disk fed to a homothet hitter");
    Point c_local = frame_.local(d.center);
    if (c_local.y > 0.0)
        throw invalid_input_error("separated insert: disk center not on the L+ side");
    return insert_impl(&d, nullptr, nullptr);
}

std::vector<std::size_t> SeparatedHitter::insert_homothet(double scale, const Point& ref) {
    if (!body_) throw invalid_input_error("separated insert: homothet fed to a disk hitter");
    if (!(scale > 0.0)) throw invalid_input_error("separated insert: nonpositive scale");
    Point ref_local = frame_.local(ref);
    if (ref_local.y > 0.0)
        throw invalid_input_error("separated insert: reference point not on the L+ side");
    return insert_impl(nullptr, &scale, &ref_local);
}

}  // namespace hitset
