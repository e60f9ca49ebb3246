#pragma once

#include <string>
#include <vector>

#include "hitset/instance.hpp"
#include "hitset/online.hpp"

namespace hitset {

struct GenSpec {
    InstanceKind kind = InstanceKind::disks;
    std::size_t n = 20;   // points
    std::size_t m = 50;   // objects
    double cap = 8;       // N or M
    std::uint64_t seed = 1;
    std::string mode = "uniform";  // uniform | clustered | adversarial-nested
    std::string body = "square";   // triangle | square | gon64 | random<k>
    std::string name;              // default: derived from the parameters
};

Instance gen_instance(const GenSpec& spec);

// Body polygon presets for the homothet generator and tests.
ConvexPolygon body_preset(const std::string& name, SplitMix64& rng);

enum class AlgSelector { bottomless, separated, disks, homothets };
AlgSelector selector_from_string(const std::string& s);
std::string to_string(AlgSelector a);

// Raised when a replay ends with an unhit object (never expected; the
// acceptance suite treats any occurrence as a hard failure).
struct verification_failure : std::runtime_error {
    std::size_t step;
    verification_failure(std::size_t s, const std::string& msg)
        : std::runtime_error(msg), step(s) {}
};

struct StepRow {
    std::size_t step = 0;
    std::size_t object_id = 0;
    bool was_hit = false;
    int points_added = 0;
    int layer = 0;
    int lines_invoked = 0;
    bool fallback = false;
};

struct RunReport {
    std::vector<StepRow> rows;
    std::size_t hitting_set_size = 0;
    std::size_t opt_size = 0;
    std::string opt_kind = "none";  // exact | greedy | none
    double ratio = 0;               // |H| / |OPT|; with greedy a lower bound
    double ceiling = 0;             // theoretical bound for the selector
    double ms = 0;                  // wall clock (excluded from determinism)
    std::vector<Point> hits;        // chosen hitting points, insertion order
    int fallback_total = 0;
    std::size_t skipped_unhittable = 0;
};

RunReport run_experiment(const Instance& inst, AlgSelector alg, bool skip_unhittable = false);

std::string report_to_csv(const RunReport& report);

// First object of the instance containing none of `hits`, or nullopt.
std::optional<std::size_t> verify_instance_hits(const Instance& inst,
                                                const std::vector<Point>& hits);

// Offline baselines on the instance's hittable objects.
struct OracleAnswer {
    std::vector<Point> points;
    bool exact = false;
};
OracleAnswer instance_oracle(const Instance& inst, bool exact);

}  // namespace hitset
