#ifndef SDNLB_SWEEP_HPP
#define SDNLB_SWEEP_HPP

// Experiment sweeps: the cartesian product of policies x seeds as independent
// engine runs. The OpenMP executor distributes runs across threads and writes
// each result into its own slot, so its output is identical to the serial
// reference executor (kept for testing and benchmarking).

#include <cstdint>
#include <vector>

#include "sdnlb/baselines.hpp"
#include "sdnlb/sim.hpp"

namespace sdnlb {

struct SweepJob {
    PolicyKind policy = PolicyKind::NONE;
    std::uint64_t seed = 0;
};

struct SweepResult {
    SweepJob job;
    std::vector<RoundRecord> records;
};

std::vector<SweepJob> make_jobs(const std::vector<PolicyKind>& policies,
                                const std::vector<std::uint64_t>& seeds);

std::vector<SweepResult> run_sweep_serial(const Scenario& scenario,
                                          const std::vector<SweepJob>& jobs);
std::vector<SweepResult> run_sweep_parallel(const Scenario& scenario,
                                            const std::vector<SweepJob>& jobs);

// Per-policy, per-round aggregates over seeds (population spread).
struct PolicySeries {
    PolicyKind policy = PolicyKind::NONE;
    int seeds = 0;
    std::vector<double> deviation_mean, deviation_sd;
    std::vector<double> delay_mean, delay_sd;
    std::vector<double> cum_cost_mean, cum_cost_sd;
};

PolicySeries aggregate_series(PolicyKind policy, const std::vector<SweepResult>& results);

// Scalar per-policy aggregates for the comparison summary.
struct PolicyAggregate {
    PolicyKind policy = PolicyKind::NONE;
    int seeds = 0;
    double final_deviation_mean = 0.0;
    double mean_delay_mean = 0.0;  // mean over seeds of the per-run round-mean delay
    double cum_cost_mean = 0.0;
};

PolicyAggregate aggregate_policy(PolicyKind policy, const std::vector<SweepResult>& results);

std::string series_csv(const PolicySeries& series);

}  // namespace sdnlb

#endif  // SDNLB_SWEEP_HPP
