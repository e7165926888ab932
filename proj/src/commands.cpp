#include "sdnlb/commands.hpp"

#include <filesystem>
#include <iostream>

#include <json.hpp>

#include "sdnlb/metrics_io.hpp"
#include "sdnlb/scenario.hpp"
#include "sdnlb/sweep.hpp"

namespace sdnlb {

namespace fs = std::filesystem;

std::vector<std::uint64_t> parse_seed_spec(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    if (spec.empty()) throw std::invalid_argument("empty seed spec");
    if (auto dots = spec.find(".."); dots != std::string::npos) {
        std::uint64_t lo = std::stoull(spec.substr(0, dots));
        std::uint64_t hi = std::stoull(spec.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("seed range must be ascending: " + spec);
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("bad seed spec: " + spec);
        seeds.push_back(std::stoull(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return seeds;
}

namespace {

int report(const std::exception& e, int code) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

void ensure_out_dir(const std::string& out_dir) {
    if (out_dir.empty()) throw ScenarioIoError("output directory not given");
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ScenarioIoError("cannot create output directory " + out_dir + ": " +
                                  ec.message());
}

}  // namespace

int cmd_validate(const std::string& scenario_path) {
    try {
        Scenario sc = load_scenario(scenario_path);
        std::cout << "ok: " << scenario_path << " (" << sc.controllers.size()
                  << " controllers, " << sc.switches.size() << " switches, " << sc.rounds
                  << " rounds)\n";
        return kExitOk;
    } catch (const ScenarioIoError& e) {
        return report(e, kExitIo);
    } catch (const ScenarioError& e) {
        return report(e, kExitValidation);
    } catch (const std::exception& e) {
        return report(e, kExitRuntime);
    }
}

int cmd_run(const RunOptions& options) {
    try {
        Scenario sc = load_scenario(options.scenario_path);
        PolicyKind policy = parse_policy(options.policy);
        std::uint64_t seed = options.seed.value_or(sc.seed);

        auto records = run(sc, policy, seed);

        ensure_out_dir(options.out_dir);
        const std::string metrics = metrics_csv(sc, records);
        const std::string summary = run_summary_json(sc, policy, seed, records);
        write_file_atomic((fs::path(options.out_dir) / "metrics.csv").string(), metrics);
        write_file_atomic((fs::path(options.out_dir) / "summary.json").string(), summary);
        return kExitOk;
    } catch (const ScenarioIoError& e) {
        return report(e, kExitIo);
    } catch (const ScenarioError& e) {
        return report(e, kExitValidation);
    } catch (const std::invalid_argument& e) {
        return report(e, kExitValidation);
    } catch (const std::exception& e) {
        return report(e, kExitRuntime);
    }
}

int cmd_compare(const CompareOptions& options) {
    try {
        Scenario sc = load_scenario(options.scenario_path);
        std::vector<PolicyKind> policies;
        for (const auto& name : options.policies) policies.push_back(parse_policy(name));
        if (policies.empty()) throw std::invalid_argument("no policies given");
        auto seeds = parse_seed_spec(options.seeds);

        auto jobs = make_jobs(policies, seeds);
        auto results = options.serial ? run_sweep_serial(sc, jobs)
                                      : run_sweep_parallel(sc, jobs);

        ensure_out_dir(options.out_dir);
        nlohmann::ordered_json summary;
        summary["scenario"] = sc.name;
        summary["seeds"] = seeds.size();
        summary["rounds"] = sc.rounds;

        std::optional<PolicyAggregate> rl, mmo;
        for (PolicyKind policy : policies) {
            auto series = aggregate_series(policy, results);
            write_file_atomic(
                (fs::path(options.out_dir) / ("series_" + to_string(policy) + ".csv")).string(),
                series_csv(series));

            auto agg = aggregate_policy(policy, results);
            nlohmann::ordered_json entry;
            entry["final_deviation_mean"] = agg.final_deviation_mean;
            entry["mean_delay"] = agg.mean_delay_mean;
            entry["cumulative_cost_mean"] = agg.cum_cost_mean;
            summary["policies"][to_string(policy)] = entry;
            if (policy == PolicyKind::RL_LBM) rl = agg;
            if (policy == PolicyKind::MMO_LBM) mmo = agg;
        }
        if (rl && mmo && mmo->mean_delay_mean > 0.0) {
            summary["delay_reduction_rl_vs_mmo_pct"] =
                100.0 * (mmo->mean_delay_mean - rl->mean_delay_mean) / mmo->mean_delay_mean;
        }
        write_file_atomic((fs::path(options.out_dir) / "comparison_summary.json").string(),
                          summary.dump(2) + "\n");
        return kExitOk;
    } catch (const ScenarioIoError& e) {
        return report(e, kExitIo);
    } catch (const ScenarioError& e) {
        return report(e, kExitValidation);
    } catch (const std::invalid_argument& e) {
        return report(e, kExitValidation);
    } catch (const std::exception& e) {
        return report(e, kExitRuntime);
    }
}

}  // namespace sdnlb
