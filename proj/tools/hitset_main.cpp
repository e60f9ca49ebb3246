// hitset: generate, replay, verify and solve online hitting-set instances.
//
// Exit codes: 0 ok, 2 verification failure, 3 budget exceeded, 4 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitset/experiment.hpp"
#include "hitset/offline_oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvalid = 4;

std::vector<hitset::Point> load_hits(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hitset::invalid_input_error("cannot open hits file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw hitset::invalid_input_error(std::string("hits JSON parse error: ") + e.what());
    }
    const nlohmann::json* arr = &j;
    if (j.is_object() && j.contains("hits")) arr = &j.at("hits");
    if (!arr->is_array()) throw hitset::invalid_input_error("hits file: expected an array");
    std::vector<hitset::Point> out;
    for (const auto& e : *arr) {
        if (!e.is_array() || e.size() != 2)
            throw hitset::invalid_input_error("hits file: expected [x,y] pairs");
        out.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return out;
}

void write_hits(const std::vector<hitset::Point>& hits, const std::string& path) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : hits) arr.push_back(nlohmann::ordered_json::array({p.x, p.y}));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hitset::invalid_input_error("cannot open for writing: " + path);
    out << arr.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online geometric hitting-set toolkit"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a deterministic instance");
    hitset::GenSpec spec;
    std::string gen_kind = "disks";
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "bottomless|separated-disks|disks|homothets")
        ->required();
    gen->add_option("--n", spec.n, "number of points")->required();
    gen->add_option("--m", spec.m, "number of objects")->required();
    gen->add_option("--cap", spec.cap, "N (lattice extent) or M (max radius/scale)")->required();
    gen->add_option("--seed", spec.seed, "PRNG seed")->required();
    gen->add_option("--mode", spec.mode, "uniform|clustered|adversarial-nested");
    gen->add_option("--body", spec.body, "triangle|square|gon64|random<k> (homothets)");
    gen->add_option("--name", spec.name, "instance name override");
    gen->add_option("-o,--out", gen_out, "output instance JSON")->required();

    // ---- run ----
    auto* run = app.add_subcommand("run", "replay an instance through an online algorithm");
    std::string run_alg, run_in, run_out, run_hits_out;
    bool skip_unhittable = false;
    run->add_option("--alg", run_alg, "bottomless|separated|disks|homothets")->required();
    run->add_option("-i,--in", run_in, "instance JSON")->required();
    run->add_option("-o,--out", run_out, "report CSV");
    run->add_option("--hits-out", run_hits_out, "write the chosen hitting set as JSON");
    run->add_flag("--skip-unhittable", skip_unhittable,
                  "report objects with empty point intersection instead of failing");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check a hitting set against an instance");
    std::string verify_in, verify_hits;
    verify->add_option("-i,--in", verify_in, "instance JSON")->required();
    verify->add_option("--hits", verify_hits, "hitting set JSON ([[x,y],...])")->required();

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "offline exact/greedy baselines");
    std::string oracle_in, oracle_out;
    bool oracle_exact = false, oracle_greedy = false;
    oracle->add_option("-i,--in", oracle_in, "instance JSON")->required();
    oracle->add_flag("--exact", oracle_exact, "exact minimum hitting set (branch and bound)");
    oracle->add_flag("--greedy", oracle_greedy, "greedy approximation");
    oracle->add_option("-o,--out", oracle_out, "write the chosen points as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            spec.kind = hitset::kind_from_string(gen_kind);
            hitset::Instance inst = hitset::gen_instance(spec);
            hitset::save_instance(inst, gen_out);
            std::cout << "wrote " << gen_out << " (" << inst.points.size() << " points, "
                      << inst.objects.size() << " objects)\n";
            return kExitOk;
        }
        if (run->parsed()) {
            hitset::Instance inst = hitset::load_instance(run_in);
            hitset::RunReport report = hitset::run_experiment(
                inst, hitset::selector_from_string(run_alg), skip_unhittable);
            std::string csv = hitset::report_to_csv(report);
            if (run_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(run_out, std::ios::binary);
                if (!out) throw hitset::invalid_input_error("cannot open for writing: " + run_out);
                out << csv;
            }
            if (!run_hits_out.empty()) write_hits(report.hits, run_hits_out);
            std::cout << "|H|=" << report.hitting_set_size << " |OPT|=" << report.opt_size << " ("
                      << report.opt_kind << ") ratio=" << report.ratio
                      << " ceiling=" << report.ceiling << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            hitset::Instance inst = hitset::load_instance(verify_in);
            auto hits = load_hits(verify_hits);
            auto bad = hitset::verify_instance_hits(inst, hits);
            if (bad) {
                std::cout << "violation at object " << *bad << "\n";
                return kExitVerification;
            }
            std::cout << "ok\n";
            return kExitOk;
        }
        if (oracle->parsed()) {
            if (oracle_exact == oracle_greedy)
                throw hitset::invalid_input_error("oracle: pass exactly one of --exact/--greedy");
            hitset::Instance inst = hitset::load_instance(oracle_in);
            hitset::OracleAnswer ans = hitset::instance_oracle(inst, oracle_exact);
            std::cout << (ans.exact ? "exact" : "greedy") << " hitting set size "
                      << ans.points.size() << "\n";
            if (!oracle_out.empty()) write_hits(ans.points, oracle_out);
            return kExitOk;
        }
    } catch (const hitset::verification_failure& e) {
        std::cerr << "verification failure at step " << e.step << ": " << e.what() << "\n";
        return kExitVerification;
    } catch (const hitset::unhittable_object_error& e) {
        std::cerr << "unhittable object " << e.object_index << ": " << e.what() << "\n";
        return kExitVerification;
    } catch (const hitset::budget_exceeded_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const hitset::invalid_input_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
