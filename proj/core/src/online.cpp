#include "hitset/online.hpp"

#include <algorithm>
#include <cmath>

namespace hitset {

namespace {
constexpr double kRho = 1.0 / 50.0;
}

int num_layers(double m_cap) {
    if (!(m_cap >= 1.0)) throw invalid_input_error("num_layers: M must be >= 1");
    return static_cast<int>(std::floor(std::log2(m_cap))) + 1;
}

int layer_of(double r, double m_cap) {
    if (!(r >= 1.0) || !(r <= m_cap))
        throw invalid_input_error("layer_of: radius outside [1, M]");
    int j = static_cast<int>(std::floor(std::log2(r)));
    return std::min(j, num_layers(m_cap) - 1);
}

namespace {

TilingSpec finish_spec(TilingSpec spec) {
    auto unit = [](const Point& v) {
        double n = norm(v);
        return Point{v.x / n, v.y / n};
    };
    Point u1 = unit(spec.v1), u2 = unit(spec.v2);
    // family 1: lines parallel to v2, positions step along v1
    Point n1{u2.y, -u2.x};
    double pitch1 = dot(spec.v1, n1);
    if (pitch1 < 0) {
        n1 = {-n1.x, -n1.y};
        pitch1 = -pitch1;
    }
    spec.family1 = {u2, n1, pitch1};
    Point n2{u1.y, -u1.x};
    double pitch2 = dot(spec.v2, n2);
    if (pitch2 < 0) {
        n2 = {-n2.x, -n2.y};
        pitch2 = -pitch2;
    }
    spec.family2 = {u1, n2, pitch2};
    return spec;
}

}  // namespace

TilingSpec disk_tiling(int layer) {
    double side = std::exp2(layer - 0.5);
    TilingSpec spec;
    spec.v1 = {side, 0};
    spec.v2 = {0, side};
    spec.diameter = std::exp2(layer);
    return finish_spec(spec);
}

TilingSpec homothet_tiling(int layer, const GoodPair& pair) {
    double alpha = pair.angle;
    Point d1 = pair.line1.dir;
    Point d2 = pair.line2.dir;
    // pick representatives with the acute angle alpha between them
    if (dot(d1, d2) < 0) d2 = {-d2.x, -d2.y};
    double side = std::exp2(layer) * kRho / (2.0 * std::cos(alpha / 2.0));
    TilingSpec spec;
    spec.v1 = {side * d1.x, side * d1.y};
    spec.v2 = {side * d2.x, side * d2.y};
    spec.diameter = std::exp2(layer) * kRho;
    return finish_spec(spec);
}

TileIndex tile_of(const TilingSpec& spec, const Point& p) {
    Point q = p - spec.origin;
    double det = cross(spec.v1, spec.v2);
    double a1 = cross(q, spec.v2) / det;
    double a2 = cross(spec.v1, q) / det;
    return {static_cast<std::int64_t>(std::floor(a1)), static_cast<std::int64_t>(std::floor(a2))};
}

std::array<Point, 4> tile_polygon(const TilingSpec& spec, const TileIndex& t) {
    Point base{spec.origin.x + t.i1 * spec.v1.x + t.i2 * spec.v2.x,
               spec.origin.y + t.i1 * spec.v1.y + t.i2 * spec.v2.y};
    return {base, base + spec.v1, base + spec.v1 + spec.v2, base + spec.v2};
}

DirectedLine grid_line_geometry(const TilingSpec& spec, const DirectedGridLine& line) {
    const TilingSpec::Family& fam = line.family == 1 ? spec.family1 : spec.family2;
    const Point& step = line.family == 1 ? spec.v1 : spec.v2;
    Point anchor{spec.origin.x + line.offset * step.x, spec.origin.y + line.offset * step.y};
    Point dir = line.orientation > 0 ? fam.par : Point{-fam.par.x, -fam.par.y};
    return {anchor, dir};
}

namespace {

// Grid lines of one family whose position falls inside [lo, hi] (projections
// onto the family normal), directed so L+ holds the point at `center_proj`.
void emit_family(const TilingSpec& spec, int layer, int family, double lo, double hi,
                 double center_proj, std::vector<DirectedGridLine>& out) {
    const TilingSpec::Family& fam = family == 1 ? spec.family1 : spec.family2;
    double base = dot(spec.origin, fam.normal);
    std::int64_t kmin = static_cast<std::int64_t>(std::ceil((lo - base) / fam.pitch - 1e-12));
    std::int64_t kmax = static_cast<std::int64_t>(std::floor((hi - base) / fam.pitch + 1e-12));
    // cross(par, w) = cross(par, normal) * dot(w, normal); L+ of direction u
    // is {p : cross(u, p - anchor) <= 0}
    int handed = cross(fam.par, fam.normal) > 0 ? 1 : -1;
    for (std::int64_t k = kmin; k <= kmax; ++k) {
        double pos = base + k * fam.pitch;
        double s = center_proj - pos;
        if (s != 0.0) {
            int ori = ((s > 0) == (handed > 0)) ? -1 : +1;
            out.push_back({layer, family, k, ori});
        } else {
            out.push_back({layer, family, k, +1});
            out.push_back({layer, family, k, -1});
        }
    }
}

}  // namespace

std::vector<DirectedGridLine> lines_hit(const TilingSpec& spec, int layer, const Disk& d) {
    std::vector<DirectedGridLine> out;
    for (int family : {1, 2}) {
        const TilingSpec::Family& fam = family == 1 ? spec.family1 : spec.family2;
        double c = dot(d.center, fam.normal);
        emit_family(spec, layer, family, c - d.radius, c + d.radius, c, out);
    }
    return out;
}

std::vector<DirectedGridLine> lines_hit(const TilingSpec& spec, int layer,
                                        const ConvexPolygon& body_ref_origin, double scale,
                                        const Point& ref) {
    std::vector<DirectedGridLine> out;
    for (int family : {1, 2}) {
        const TilingSpec::Family& fam = family == 1 ? spec.family1 : spec.family2;
        double lo = 1e300, hi = -1e300;
        for (const Point& v : body_ref_origin.vertices) {
            double t = dot(ref, fam.normal) + scale * dot(v, fam.normal);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        emit_family(spec, layer, family, lo, hi, dot(ref, fam.normal), out);
    }
    return out;
}

// ---- disk hitter ----------------------------------------------------------

OnlineDiskHitter::OnlineDiskHitter(std::vector<Point> points, OnlineConfig cfg)
    : pts_(std::move(points)), cfg_(cfg) {
    if (!(cfg_.m_cap >= 1.0)) throw invalid_input_error("online: M must be >= 1");
    int layers = num_layers(cfg_.m_cap);
    for (int j = 0; j < layers; ++j) tilings_.push_back(disk_tiling(j));
    in_hits_.assign(pts_.size(), 0);
}

namespace {

// deterministic pick: lexicographic minimum by (x, y)
std::optional<std::size_t> lex_min(const std::vector<Point>& pts,
                                   const std::vector<std::size_t>& candidates) {
    if (candidates.empty()) return std::nullopt;
    std::size_t best = candidates.front();
    for (std::size_t i : candidates)
        if (pts[i] < pts[best]) best = i;
    return best;
}

}  // namespace

StepTelemetry OnlineDiskHitter::insert(const Disk& d) {
    StepTelemetry tel;
    ++step_;

    std::vector<std::size_t> trace;
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (disk_contains(d, pts_[i])) trace.push_back(i);
    if (trace.empty()) {
        tel.unhittable = true;
        telemetry_.push_back(tel);
        if (cfg_.skip_unhittable) return tel;
        throw unhittable_object_error(step_ - 1, "online: disk contains no point of P");
    }

    for (std::size_t i : hits_) {
        if (disk_contains(d, pts_[i])) {
            tel.was_hit = true;
            telemetry_.push_back(tel);
            return tel;
        }
    }

    int j = layer_of(d.radius, cfg_.m_cap);
    tel.layer = j;
    const TilingSpec& spec = tilings_[static_cast<std::size_t>(j)];

    TileIndex center_tile = tile_of(spec, d.center);
    std::vector<std::size_t> in_tile;
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (tile_of(spec, pts_[i]) == center_tile) in_tile.push_back(i);

    auto add_point = [&](std::size_t i) {
        if (!in_hits_[i]) {
            in_hits_[i] = 1;
            hits_.push_back(i);
            ++tel.points_added;
        }
    };

    if (!in_tile.empty()) {
        tel.tile_hit = true;
        add_point(*lex_min(pts_, in_tile));
        telemetry_.push_back(tel);
        return tel;
    }

    for (const DirectedGridLine& gl : lines_hit(spec, j, d)) {
        DirectedLine geom = grid_line_geometry(spec, gl);
        // points strictly on the left of the directed line
        std::vector<std::size_t> left;
        bool witness = false;
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (cross(geom.dir, pts_[i] - geom.anchor) > 0) {
                left.push_back(i);
                if (disk_contains(d, pts_[i])) witness = true;
            }
        }
        if (left.empty() || !witness) continue;  // C_L requires a witness on the L- side

        auto it = sub_.find(gl);
        if (it == sub_.end()) {
            std::vector<Point> sub_pts;
            sub_pts.reserve(left.size());
            for (std::size_t i : left) sub_pts.push_back(pts_[i]);
            it = sub_.emplace(gl, std::make_unique<SeparatedHitter>(std::move(sub_pts), geom))
                     .first;
            sub_points_[gl] = left;
        }
        ++tel.lines_invoked;
        SeparatedHitter& hitter = *it->second;
        int before = hitter.fallback_count();
        for (std::size_t local : hitter.insert(d)) add_point(sub_points_[gl][local]);
        if (hitter.fallback_count() > before) tel.fallback = true;
    }

    bool hit = false;
    for (std::size_t i : hits_)
        if (disk_contains(d, pts_[i])) hit = true;
    if (!hit) {
        // safety net: points sitting exactly on grid lines can evade every
        // directed subproblem; hit directly
        tel.fallback = true;
        add_point(*lex_min(pts_, trace));
    }
    if (tel.fallback) ++total_fallbacks_;
    telemetry_.push_back(tel);
    return tel;
}

// ---- homothet hitter -------------------------------------------------------

OnlineHomothetHitter::OnlineHomothetHitter(std::vector<Point> points, const ConvexPolygon& body,
                                           OnlineConfig cfg)
    : pts_(std::move(points)), cfg_(cfg), body_(normalize_body(body)), pair_(good_pair(body_)) {
    if (!(cfg_.m_cap >= 1.0)) throw invalid_input_error("online: M must be >= 1");
    // canonical body with the reference point at the origin
    std::vector<Point> shifted;
    shifted.reserve(body_.polygon.vertices.size());
    for (const Point& v : body_.polygon.vertices) shifted.push_back(v - pair_.x);
    body_ref_origin_ = ConvexPolygon{std::move(shifted)};

    pts_canon_.reserve(pts_.size());
    for (const Point& p : pts_) pts_canon_.push_back(body_.frame.map(p) - pair_.x);

    GoodPair shifted_pair = pair_;  // tiling only uses directions and angle
    int layers = num_layers(cfg_.m_cap);
    for (int j = 0; j < layers; ++j) tilings_.push_back(homothet_tiling(j, shifted_pair));
    in_hits_.assign(pts_.size(), 0);
}

Point OnlineHomothetHitter::canonical_reference(double scale, const Point& translation) const {
    // sigma = a*C + t in original coordinates maps to a*C_canon + b' with
    // b' = A*t + (1-a)*tr; after shifting the reference to the origin the
    // reference point of the image is a*x + b'.
    const AffineFrame& f = body_.frame;
    Point at{f.linear[0] * translation.x + f.linear[1] * translation.y,
             f.linear[2] * translation.x + f.linear[3] * translation.y};
    Point bprime{at.x + (1.0 - scale) * f.translation.x, at.y + (1.0 - scale) * f.translation.y};
    return {scale * pair_.x.x + bprime.x - pair_.x.x, scale * pair_.x.y + bprime.y - pair_.x.y};
}

StepTelemetry OnlineHomothetHitter::insert(double scale, const Point& translation) {
    StepTelemetry tel;
    ++step_;
    Point ref = canonical_reference(scale, translation);

    auto contains_canon = [&](std::size_t i) {
        Point u{(pts_canon_[i].x - ref.x) / scale, (pts_canon_[i].y - ref.y) / scale};
        return body_ref_origin_.contains(u, 1e-9);
    };

    std::vector<std::size_t> trace;
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (contains_canon(i)) trace.push_back(i);
    if (trace.empty()) {
        tel.unhittable = true;
        telemetry_.push_back(tel);
        if (cfg_.skip_unhittable) return tel;
        throw unhittable_object_error(step_ - 1, "online: homothet contains no point of P");
    }

    for (std::size_t i : hits_) {
        if (contains_canon(i)) {
            tel.was_hit = true;
            telemetry_.push_back(tel);
            return tel;
        }
    }

    int j = layer_of(scale, cfg_.m_cap);
    tel.layer = j;
    const TilingSpec& spec = tilings_[static_cast<std::size_t>(j)];

    TileIndex ref_tile = tile_of(spec, ref);
    std::vector<std::size_t> in_tile;
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (tile_of(spec, pts_canon_[i]) == ref_tile) in_tile.push_back(i);

    auto add_point = [&](std::size_t i) {
        if (!in_hits_[i]) {
            in_hits_[i] = 1;
            hits_.push_back(i);
            ++tel.points_added;
        }
    };

    if (!in_tile.empty()) {
        tel.tile_hit = true;
        add_point(*lex_min(pts_, in_tile));
        telemetry_.push_back(tel);
        return tel;
    }

    for (const DirectedGridLine& gl : lines_hit(spec, j, body_ref_origin_, scale, ref)) {
        DirectedLine geom = grid_line_geometry(spec, gl);
        std::vector<std::size_t> left;
        bool witness = false;
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (cross(geom.dir, pts_canon_[i] - geom.anchor) > 0) {
                left.push_back(i);
                if (contains_canon(i)) witness = true;
            }
        }
        if (left.empty() || !witness) continue;

        auto it = sub_.find(gl);
        if (it == sub_.end()) {
            std::vector<Point> sub_pts;
            sub_pts.reserve(left.size());
            for (std::size_t i : left) sub_pts.push_back(pts_canon_[i]);
            it = sub_.emplace(gl, std::make_unique<SeparatedHitter>(std::move(sub_pts), geom,
                                                                    body_ref_origin_))
                     .first;
            sub_points_[gl] = left;
        }
        ++tel.lines_invoked;
        SeparatedHitter& hitter = *it->second;
        int before = hitter.fallback_count();
        for (std::size_t local : hitter.insert_homothet(scale, ref))
            add_point(sub_points_[gl][local]);
        if (hitter.fallback_count() > before) tel.fallback = true;
    }

    bool hit = false;
    for (std::size_t i : hits_)
        if (contains_canon(i)) hit = true;
    if (!hit) {
        tel.fallback = true;
        add_point(*lex_min(pts_, trace));
    }
    if (tel.fallback) ++total_fallbacks_;
    telemetry_.push_back(tel);
    return tel;
}

}  // namespace hitset
