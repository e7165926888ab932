// Command-line front end: validate scenarios, run single experiments, and
// sweep policy/seed comparisons into plot-ready CSV series.

#include <CLI11.hpp>

#include "sdnlb/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"sdnlb - multi-controller switch-migration load balancing simulator"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir;

    auto* validate = app.add_subcommand("validate", "check a scenario file");
    validate->add_option("--scenario", scenario_path, "scenario file")->required();

    sdnlb::RunOptions run_opts;
    std::uint64_t seed = 0;
    auto* run = app.add_subcommand("run", "run one policy on a scenario");
    run->add_option("--scenario", run_opts.scenario_path, "scenario file")->required();
    run->add_option("--policy", run_opts.policy, "RL_LBM, DC_LBM, MMO_LBM or NONE");
    auto* seed_opt = run->add_option("--seed", seed, "run seed (default: scenario seed)");
    run->add_option("--out", run_opts.out_dir, "output directory")->required();

    sdnlb::CompareOptions cmp_opts;
    auto* compare = app.add_subcommand("compare", "sweep policies x seeds and aggregate");
    compare->add_option("--scenario", cmp_opts.scenario_path, "scenario file")->required();
    compare->add_option("--policies", cmp_opts.policies, "policy list")->delimiter(',');
    compare->add_option("--seeds", cmp_opts.seeds, "seed spec: N, A..B or A,B,C");
    compare->add_option("--out", cmp_opts.out_dir, "output directory")->required();
    compare->add_flag("--serial", cmp_opts.serial, "use the serial reference executor");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return sdnlb::cmd_validate(scenario_path);
    if (run->parsed()) {
        if (seed_opt->count() > 0) run_opts.seed = seed;
        return sdnlb::cmd_run(run_opts);
    }
    if (compare->parsed()) return sdnlb::cmd_compare(cmp_opts);
    return sdnlb::kExitRuntime;
}
