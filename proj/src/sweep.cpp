#include "sdnlb/sweep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sdnlb/metrics_io.hpp"

namespace sdnlb {

std::vector<SweepJob> make_jobs(const std::vector<PolicyKind>& policies,
                                const std::vector<std::uint64_t>& seeds) {
    std::vector<SweepJob> jobs;
    jobs.reserve(policies.size() * seeds.size());
    for (PolicyKind p : policies)
        for (std::uint64_t s : seeds) jobs.push_back({p, s});
    return jobs;
}

std::vector<SweepResult> run_sweep_serial(const Scenario& scenario,
                                          const std::vector<SweepJob>& jobs) {
    std::vector<SweepResult> results(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        results[i].job = jobs[i];
        results[i].records = run(scenario, jobs[i].policy, jobs[i].seed);
    }
    return results;
}

std::vector<SweepResult> run_sweep_parallel(const Scenario& scenario,
                                            const std::vector<SweepJob>& jobs) {
    std::vector<SweepResult> results(jobs.size());
    const auto n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        results[i].job = jobs[i];
        results[i].records = run(scenario, jobs[i].policy, jobs[i].seed);
    }
    return results;
}

namespace {

// Population mean and sd of one extracted metric across the policy's runs,
// per round. Accumulation follows the results' order, so aggregates do not
// depend on which executor produced them.
template <typename Extract>
void per_round_stats(const std::vector<const SweepResult*>& runs, Extract extract,
                     std::vector<double>& mean_out, std::vector<double>& sd_out) {
    if (runs.empty()) return;
    const std::size_t rounds = runs.front()->records.size();
    const double n = static_cast<double>(runs.size());
    mean_out.assign(rounds, 0.0);
    sd_out.assign(rounds, 0.0);
    for (std::size_t r = 0; r < rounds; ++r) {
        double sum = 0.0;
        for (const auto* sr : runs) sum += extract(sr->records[r]);
        double mean = sum / n;
        double sq = 0.0;
        for (const auto* sr : runs) {
            double d = extract(sr->records[r]) - mean;
            sq += d * d;
        }
        mean_out[r] = mean;
        sd_out[r] = std::sqrt(sq / n);
    }
}

std::vector<const SweepResult*> runs_for(PolicyKind policy,
                                         const std::vector<SweepResult>& results) {
    std::vector<const SweepResult*> runs;
    for (const auto& r : results)
        if (r.job.policy == policy) runs.push_back(&r);
    if (runs.empty()) throw std::invalid_argument("no runs for policy " + to_string(policy));
    for (const auto* r : runs)
        if (r->records.size() != runs.front()->records.size())
            throw std::logic_error("sweep runs disagree on round count");
    return runs;
}

}  // namespace

PolicySeries aggregate_series(PolicyKind policy, const std::vector<SweepResult>& results) {
    auto runs = runs_for(policy, results);
    PolicySeries series;
    series.policy = policy;
    series.seeds = static_cast<int>(runs.size());
    per_round_stats(runs, [](const RoundRecord& r) { return r.deviation; },
                    series.deviation_mean, series.deviation_sd);
    per_round_stats(runs, [](const RoundRecord& r) { return r.mean_delay; },
                    series.delay_mean, series.delay_sd);
    per_round_stats(runs, [](const RoundRecord& r) { return r.cum_cost; },
                    series.cum_cost_mean, series.cum_cost_sd);
    return series;
}

PolicyAggregate aggregate_policy(PolicyKind policy, const std::vector<SweepResult>& results) {
    auto runs = runs_for(policy, results);
    PolicyAggregate agg;
    agg.policy = policy;
    agg.seeds = static_cast<int>(runs.size());
    const double n = static_cast<double>(runs.size());
    for (const auto* sr : runs) {
        const auto& records = sr->records;
        agg.final_deviation_mean += records.empty() ? 0.0 : records.back().deviation;
        agg.cum_cost_mean += records.empty() ? 0.0 : records.back().cum_cost;
        double delay = 0.0;
        for (const auto& r : records) delay += r.mean_delay;
        agg.mean_delay_mean += records.empty() ? 0.0 : delay / static_cast<double>(records.size());
    }
    agg.final_deviation_mean /= n;
    agg.cum_cost_mean /= n;
    agg.mean_delay_mean /= n;
    return agg;
}

std::string series_csv(const PolicySeries& series) {
    std::ostringstream out;
    out << "round,D_mean,D_sd,delay_mean,delay_sd,cum_cost_mean,cum_cost_sd\n";
    for (std::size_t r = 0; r < series.deviation_mean.size(); ++r) {
        out << r << ',' << format_double(series.deviation_mean[r]) << ','
            << format_double(series.deviation_sd[r]) << ','
            << format_double(series.delay_mean[r]) << ',' << format_double(series.delay_sd[r])
            << ',' << format_double(series.cum_cost_mean[r]) << ','
            << format_double(series.cum_cost_sd[r]) << '\n';
    }
    return out.str();
}

}  // namespace sdnlb
