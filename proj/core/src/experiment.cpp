#include "hitset/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "hitset/offline_oracle.hpp"

namespace hitset {

namespace {

std::string default_name(const GenSpec& spec) {
    std::ostringstream ss;
    ss << to_string(spec.kind) << "-" << spec.mode << "-n" << spec.n << "-m" << spec.m << "-c"
       << spec.cap << "-s" << spec.seed;
    return ss.str();
}

std::vector<Point> distinct_grid_points(SplitMix64& rng, std::size_t n, std::int64_t x_lo,
                                        std::int64_t x_hi, std::int64_t y_lo, std::int64_t y_hi) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::vector<Point> out;
    std::size_t guard = 0;
    while (out.size() < n && guard++ < 100000) {
        std::int64_t x = rng.next_int(x_lo, x_hi);
        std::int64_t y = rng.next_int(y_lo, y_hi);
        if (seen.insert({x, y}).second)
            out.push_back({static_cast<double>(x), static_cast<double>(y)});
    }
    if (out.size() < n) throw invalid_input_error("generator: grid too small for n points");
    return out;
}

void gen_bottomless(const GenSpec& spec, Instance& inst, SplitMix64& rng) {
    std::int64_t n_cap = static_cast<std::int64_t>(spec.cap);
    if (n_cap < 2) throw invalid_input_error("generator: bottomless cap must be >= 2");

    if (spec.mode == "adversarial-nested") {
        std::int64_t k = 0;
        while ((std::int64_t{1} << (k + 1)) <= n_cap) ++k;  // k = log2(N) for pow2 N
        // chain: x = N/2^i - 1 with y = i, plus the common point (0, k)
        for (std::int64_t i = 0; i < k; ++i) {
            inst.points.push_back(
                {static_cast<double>((n_cap >> i) - 1), static_cast<double>(i)});
        }
        inst.points.push_back({0.0, static_cast<double>(k)});
        for (std::int64_t i = 0; i < k && inst.objects.size() < spec.m; ++i) {
            inst.objects.push_back(BottomlessRect{0, n_cap >> i, k + 1});
        }
        while (inst.objects.size() < spec.m) {
            // filler rectangles around the common point keep OPT at 1
            std::int64_t b = rng.next_int(1, n_cap);
            std::int64_t c = rng.next_int(k + 1, n_cap);
            inst.objects.push_back(BottomlessRect{0, b, c});
        }
        return;
    }

    bool clustered = spec.mode == "clustered";
    if (clustered) {
        std::int64_t half = std::max<std::int64_t>(2, n_cap / 8);
        std::size_t blobs = 3;
        std::size_t per = (spec.n + blobs - 1) / blobs;
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (std::size_t b = 0; b < blobs && inst.points.size() < spec.n; ++b) {
            std::int64_t cx = rng.next_int(half, n_cap - 1 - half);
            std::int64_t cy = rng.next_int(half, n_cap - 1 - half);
            std::size_t guard = 0;
            while (inst.points.size() < std::min(spec.n, (b + 1) * per) && guard++ < 10000) {
                std::int64_t x = std::clamp<std::int64_t>(cx + rng.next_int(-half, half), 0,
                                                          n_cap - 1);
                std::int64_t y = std::clamp<std::int64_t>(cy + rng.next_int(-half, half), 0,
                                                          n_cap - 1);
                if (seen.insert({x, y}).second)
                    inst.points.push_back({static_cast<double>(x), static_cast<double>(y)});
            }
        }
        if (inst.points.size() < spec.n) {
            auto extra = distinct_grid_points(rng, spec.n - inst.points.size(), 0, n_cap - 1, 0,
                                              n_cap - 1);
            for (const Point& p : extra) inst.points.push_back(p);
        }
    } else {
        inst.points = distinct_grid_points(rng, spec.n, 0, n_cap - 1, 0, n_cap - 1);
    }

    for (std::size_t i = 0; i < spec.m; ++i) {
        const Point& target = inst.points[static_cast<std::size_t>(
            rng.next_int(0, static_cast<std::int64_t>(inst.points.size()) - 1))];
        std::int64_t px = static_cast<std::int64_t>(target.x);
        std::int64_t py = static_cast<std::int64_t>(target.y);
        std::int64_t a = rng.next_int(0, px);
        std::int64_t b = rng.next_int(px + 1, n_cap);
        std::int64_t c = rng.next_int(py + 1, n_cap);
        inst.objects.push_back(BottomlessRect{a, b, c});
    }
}

void gen_separated(const GenSpec& spec, Instance& inst, SplitMix64& rng) {
    std::int64_t r = static_cast<std::int64_t>(spec.cap);
    if (r < 4) throw invalid_input_error("generator: separated cap must be >= 4");
    inst.points = distinct_grid_points(rng, spec.n, -r, r, 1, r);
    for (std::size_t i = 0; i < spec.m; ++i) {
        const Point& target = inst.points[static_cast<std::size_t>(
            rng.next_int(0, static_cast<std::int64_t>(inst.points.size()) - 1))];
        Point center{static_cast<double>(rng.next_int(-r, r)),
                     static_cast<double>(rng.next_int(-r, 0))};
        double need = dist(center, target);
        double radius = need * (1.0 + 0.02 + 0.3 * rng.next_unit());
        inst.objects.push_back(Disk{center, radius});
    }
}

void gen_disks(const GenSpec& spec, Instance& inst, SplitMix64& rng) {
    double m_cap = spec.cap;
    if (!(m_cap >= 1.0)) throw invalid_input_error("generator: disks cap must be >= 1");
    double extent = std::max(8.0, 2.0 * m_cap) * std::sqrt(static_cast<double>(spec.n));

    bool clustered = spec.mode == "clustered";
    bool adversarial = spec.mode == "adversarial-nested";
    if (clustered) {
        std::size_t blobs = 4;
        for (std::size_t i = 0; i < spec.n; ++i) {
            std::size_t b = i % blobs;
            double cx = extent * (0.2 + 0.6 * ((b % 2) ? 0.8 : 0.2) * rng.next_unit() +
                                  0.2 * (b / 2));
            double cy = extent * (0.25 + 0.5 * rng.next_unit() * 0.3 + 0.2 * (b % 2));
            inst.points.push_back({cx, cy});
        }
    } else {
        for (std::size_t i = 0; i < spec.n; ++i)
            inst.points.push_back({extent * rng.next_unit(), extent * rng.next_unit()});
    }

    std::size_t common = adversarial
                             ? static_cast<std::size_t>(rng.next_int(
                                   0, static_cast<std::int64_t>(inst.points.size()) - 1))
                             : 0;
    for (std::size_t i = 0; i < spec.m; ++i) {
        std::size_t ti = adversarial ? common
                                     : static_cast<std::size_t>(rng.next_int(
                                           0, static_cast<std::int64_t>(inst.points.size()) - 1));
        const Point& target = inst.points[ti];
        double u = rng.next_unit();
        double radius = std::exp2(u * std::log2(m_cap));  // log-uniform in [1, M]
        radius = std::min(std::max(radius, 1.0), m_cap);
        if (rng.next_unit() < 0.05) radius = m_cap;  // populate the top layer
        double ang = 2.0 * std::numbers::pi * rng.next_unit();
        double mag = radius * 0.95 * rng.next_unit();
        Point center{target.x + mag * std::cos(ang), target.y + mag * std::sin(ang)};
        inst.objects.push_back(Disk{center, radius});
    }
}

void gen_homothets(const GenSpec& spec, Instance& inst, SplitMix64& rng) {
    double m_cap = spec.cap;
    if (!(m_cap >= 1.0)) throw invalid_input_error("generator: homothets cap must be >= 1");
    inst.body = body_preset(spec.body, rng);
    const ConvexPolygon& body = *inst.body;
    Point cen = body.centroid();

    double body_scale = 0.0;
    for (const Point& v : body.vertices) body_scale = std::max(body_scale, dist(v, cen));
    double extent = std::max(8.0, 2.0 * m_cap * body_scale) * std::sqrt(static_cast<double>(spec.n));

    for (std::size_t i = 0; i < spec.n; ++i)
        inst.points.push_back({extent * rng.next_unit(), extent * rng.next_unit()});

    for (std::size_t i = 0; i < spec.m; ++i) {
        const Point& target = inst.points[static_cast<std::size_t>(
            rng.next_int(0, static_cast<std::int64_t>(inst.points.size()) - 1))];
        double u = rng.next_unit();
        double scale = std::exp2(u * std::log2(m_cap));
        scale = std::min(std::max(scale, 1.0), m_cap);
        if (rng.next_unit() < 0.05) scale = m_cap;  // populate the top layer
        // anchor the target at a strictly interior point of the body
        Point anchor = cen;
        for (int attempt = 0; attempt < 16; ++attempt) {
            double mix = 0.85 * rng.next_unit();
            const Point& v = body.vertices[static_cast<std::size_t>(
                rng.next_int(0, static_cast<std::int64_t>(body.vertices.size()) - 1))];
            Point cand{cen.x + mix * (v.x - cen.x), cen.y + mix * (v.y - cen.y)};
            if (body.boundary_clearance(cand) > 1e-6 * (1.0 + body_scale)) {
                anchor = cand;
                break;
            }
        }
        Point t{target.x - scale * anchor.x, target.y - scale * anchor.y};
        inst.objects.push_back(HomothetObject{scale, t});
    }
}

}  // namespace

ConvexPolygon body_preset(const std::string& name, SplitMix64& rng) {
    if (name == "triangle") {
        return make_convex_polygon({{0, 0}, {2, 0}, {0.6, 1.7}});
    }
    if (name == "square") {
        return make_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    }
    if (name == "gon64") {
        std::vector<Point> v;
        for (int i = 0; i < 64; ++i) {
            double a = 2.0 * std::numbers::pi * i / 64;
            v.push_back({std::cos(a), std::sin(a)});
        }
        return make_convex_polygon(std::move(v));
    }
    if (name.rfind("random", 0) == 0) {
        int k = 12;
        if (name.size() > 6) k = std::max(4, std::stoi(name.substr(6)));
        // random convex polygon: points on an ellipse at sorted random angles
        double ax = 0.5 + 2.0 * rng.next_unit();
        double ay = 0.5 + 2.0 * rng.next_unit();
        double rot = 2.0 * std::numbers::pi * rng.next_unit();
        std::vector<double> angles;
        for (int i = 0; i < k; ++i) angles.push_back(2.0 * std::numbers::pi * rng.next_unit());
        std::sort(angles.begin(), angles.end());
        std::vector<Point> v;
        for (double a : angles) {
            Point p{ax * std::cos(a), ay * std::sin(a)};
            v.push_back({p.x * std::cos(rot) - p.y * std::sin(rot),
                         p.x * std::sin(rot) + p.y * std::cos(rot)});
        }
        return make_convex_polygon(std::move(v));
    }
    throw invalid_input_error("unknown body preset: " + name);
}

Instance gen_instance(const GenSpec& spec) {
    Instance inst;
    inst.kind = spec.kind;
    inst.cap = spec.cap;
    inst.seed = spec.seed;
    inst.name = spec.name.empty() ? default_name(spec) : spec.name;
    SplitMix64 rng(spec.seed);
    switch (spec.kind) {
        case InstanceKind::bottomless: gen_bottomless(spec, inst, rng); break;
        case InstanceKind::separated_disks: gen_separated(spec, inst, rng); break;
        case InstanceKind::disks: gen_disks(spec, inst, rng); break;
        case InstanceKind::homothets: gen_homothets(spec, inst, rng); break;
    }
    return inst;
}

AlgSelector selector_from_string(const std::string& s) {
    if (s == "bottomless") return AlgSelector::bottomless;
    if (s == "separated") return AlgSelector::separated;
    if (s == "disks") return AlgSelector::disks;
    if (s == "homothets") return AlgSelector::homothets;
    throw invalid_input_error("unknown algorithm selector: " + s);
}

std::string to_string(AlgSelector a) {
    switch (a) {
        case AlgSelector::bottomless: return "bottomless";
        case AlgSelector::separated: return "separated";
        case AlgSelector::disks: return "disks";
        case AlgSelector::homothets: return "homothets";
    }
    return "?";
}

namespace {

struct ReplayResult {
    std::vector<Point> hits;
    std::vector<StepRow> rows;
    int fallback_total = 0;
    std::size_t skipped = 0;
    double log_extent = 0;  // for the separated/bottomless ceiling
};

ReplayResult replay_bottomless(const Instance& inst, bool skip_unhittable) {
    ReplayResult res;
    std::int64_t n_cap = static_cast<std::int64_t>(inst.cap);
    std::vector<GridPoint> pts;
    pts.reserve(inst.points.size());
    for (const Point& p : inst.points) {
        pts.push_back({static_cast<std::int64_t>(p.x), static_cast<std::int64_t>(p.y)});
    }
    LatticeIndex index = build_lattice_index(pts, n_cap);
    res.log_extent = std::log2(static_cast<double>(index.extent()));
    HittingState state;
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& rect = std::get<BottomlessRect>(inst.objects[i]);
        StepRow row;
        row.step = i;
        row.object_id = i;
        auto obj = rect_to_object(index, rect);
        if (!obj) {
            ++res.skipped;
            if (!skip_unhittable)
                throw unhittable_object_error(i, "bottomless: rectangle contains no point");
            res.rows.push_back(row);
            continue;
        }
        row.was_hit = state.is_hit(*obj);
        auto added = alg0_insert(index, state, *obj);
        row.points_added = static_cast<int>(added.size());
        if (!state.is_hit(*obj))
            throw verification_failure(i, "bottomless: object not hit after insert");
        res.rows.push_back(row);
    }
    res.hits.reserve(state.hits.size());
    for (const GridPoint& g : state.hits)
        res.hits.push_back({static_cast<double>(g.x), static_cast<double>(g.y)});
    return res;
}

ReplayResult replay_separated(const Instance& inst, bool skip_unhittable) {
    ReplayResult res;
    DirectedLine axis{{0, 0}, {1, 0}};
    SeparatedHitter hitter(inst.points, axis);
    res.log_extent = std::log2(static_cast<double>(hitter.reduction().lattice_extent));
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& d = std::get<Disk>(inst.objects[i]);
        StepRow row;
        row.step = i;
        row.object_id = i;
        row.lines_invoked = 1;
        bool any = false;
        for (const Point& p : inst.points)
            if (disk_contains(d, p)) any = true;
        if (!any) {
            ++res.skipped;
            if (!skip_unhittable)
                throw unhittable_object_error(i, "separated: disk contains no point");
            res.rows.push_back(row);
            continue;
        }
        row.was_hit = hitter.hits_object(d);
        int before = hitter.fallback_count();
        auto added = hitter.insert(d);
        row.points_added = static_cast<int>(added.size());
        row.fallback = hitter.fallback_count() > before;
        if (!hitter.hits_object(d))
            throw verification_failure(i, "separated: object not hit after insert");
        res.rows.push_back(row);
    }
    res.fallback_total = hitter.fallback_count();
    for (std::size_t i : hitter.local_hits()) res.hits.push_back(inst.points[i]);
    return res;
}

ReplayResult replay_disks(const Instance& inst, bool skip_unhittable) {
    ReplayResult res;
    OnlineDiskHitter hitter(inst.points, OnlineConfig{inst.cap, skip_unhittable});
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& d = std::get<Disk>(inst.objects[i]);
        StepRow row;
        row.step = i;
        row.object_id = i;
        StepTelemetry tel = hitter.insert(d);
        row.was_hit = tel.was_hit;
        row.points_added = tel.points_added;
        row.layer = std::max(tel.layer, 0);
        row.lines_invoked = tel.lines_invoked;
        row.fallback = tel.fallback;
        if (tel.unhittable) {
            ++res.skipped;
            res.rows.push_back(row);
            continue;
        }
        bool hit = false;
        for (std::size_t h : hitter.hits())
            if (disk_contains(d, inst.points[h])) hit = true;
        if (!hit) throw verification_failure(i, "disks: object not hit after insert");
        res.rows.push_back(row);
    }
    res.fallback_total = hitter.total_fallbacks();
    for (std::size_t i : hitter.hits()) res.hits.push_back(inst.points[i]);
    return res;
}

ReplayResult replay_homothets(const Instance& inst, bool skip_unhittable) {
    ReplayResult res;
    if (!inst.body) throw invalid_input_error("homothets replay: instance has no body");
    OnlineHomothetHitter hitter(inst.points, *inst.body, OnlineConfig{inst.cap, skip_unhittable});
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& h = std::get<HomothetObject>(inst.objects[i]);
        StepRow row;
        row.step = i;
        row.object_id = i;
        StepTelemetry tel = hitter.insert(h.scale, h.t);
        row.was_hit = tel.was_hit;
        row.points_added = tel.points_added;
        row.layer = std::max(tel.layer, 0);
        row.lines_invoked = tel.lines_invoked;
        row.fallback = tel.fallback;
        if (tel.unhittable) {
            ++res.skipped;
            res.rows.push_back(row);
            continue;
        }
        bool hit = false;
        for (std::size_t hi : hitter.hits())
            if (object_contains(inst, i, inst.points[hi])) hit = true;
        if (!hit) throw verification_failure(i, "homothets: object not hit after insert");
        res.rows.push_back(row);
    }
    res.fallback_total = hitter.total_fallbacks();
    for (std::size_t i : hitter.hits()) res.hits.push_back(inst.points[i]);
    return res;
}

}  // namespace

OracleAnswer instance_oracle(const Instance& inst, bool exact) {
    // restrict to hittable objects so the solvers see clean rows
    std::vector<std::size_t> hittable;
    for (std::size_t o = 0; o < inst.objects.size(); ++o) {
        bool any = false;
        for (const Point& p : inst.points)
            if (object_contains(inst, o, p)) {
                any = true;
                break;
            }
        if (any) hittable.push_back(o);
    }
    auto covers = [&](std::size_t o, std::size_t p) {
        return object_contains(inst, hittable[o], inst.points[p]);
    };
    OracleAnswer ans;
    std::vector<std::size_t> idxs;
    if (exact) {
        idxs = exact_opt(inst.points.size(), hittable.size(), covers);
        ans.exact = true;
    } else {
        idxs = greedy_hitting(inst.points.size(), hittable.size(), covers);
    }
    for (std::size_t i : idxs) ans.points.push_back(inst.points[i]);
    return ans;
}

RunReport run_experiment(const Instance& inst, AlgSelector alg, bool skip_unhittable) {
    auto t0 = std::chrono::steady_clock::now();
    ReplayResult res;
    switch (alg) {
        case AlgSelector::bottomless: res = replay_bottomless(inst, skip_unhittable); break;
        case AlgSelector::separated: res = replay_separated(inst, skip_unhittable); break;
        case AlgSelector::disks: res = replay_disks(inst, skip_unhittable); break;
        case AlgSelector::homothets: res = replay_homothets(inst, skip_unhittable); break;
    }

    RunReport report;
    report.rows = std::move(res.rows);
    report.hits = std::move(res.hits);
    report.hitting_set_size = report.hits.size();
    report.fallback_total = res.fallback_total;
    report.skipped_unhittable = res.skipped;

    try {
        OracleAnswer exact = instance_oracle(inst, true);
        report.opt_size = exact.points.size();
        report.opt_kind = "exact";
    } catch (const budget_exceeded_error&) {
        OracleAnswer greedy = instance_oracle(inst, false);
        report.opt_size = greedy.points.size();
        report.opt_kind = "greedy";
    }
    if (report.opt_size > 0)
        report.ratio = static_cast<double>(report.hitting_set_size) /
                       static_cast<double>(report.opt_size);

    double n_pts = std::max<double>(2, static_cast<double>(inst.points.size()));
    if (alg == AlgSelector::bottomless || alg == AlgSelector::separated) {
        report.ceiling = 16.0 * (res.log_extent + 2.0) * static_cast<double>(report.opt_size);
    } else {
        double layers = std::floor(std::log2(inst.cap)) + 1.0;
        report.ceiling =
            96.0 * layers * (std::log2(n_pts) + 3.0) * static_cast<double>(report.opt_size);
    }

    auto t1 = std::chrono::steady_clock::now();
    report.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

std::string report_to_csv(const RunReport& report) {
    std::ostringstream ss;
    ss << "step,object_id,was_hit,points_added,layer,lines_invoked,fallback\n";
    for (const StepRow& r : report.rows) {
        ss << r.step << "," << r.object_id << "," << (r.was_hit ? 1 : 0) << "," << r.points_added
           << "," << r.layer << "," << r.lines_invoked << "," << (r.fallback ? 1 : 0) << "\n";
    }
    ss << "|H|,|OPT|,opt_kind,ratio,ceiling,ms\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%zu,%zu,%s,%.6g,%.6g,%.3f\n", report.hitting_set_size,
                  report.opt_size, report.opt_kind.c_str(), report.ratio, report.ceiling,
                  report.ms);
    ss << buf;
    return ss.str();
}

std::optional<std::size_t> verify_instance_hits(const Instance& inst,
                                                const std::vector<Point>& hits) {
    for (std::size_t o = 0; o < inst.objects.size(); ++o) {
        bool hit = false;
        for (const Point& p : hits)
            if (object_contains(inst, o, p)) {
                hit = true;
                break;
            }
        if (!hit) return o;
    }
    return std::nullopt;
}

}  // namespace hitset
