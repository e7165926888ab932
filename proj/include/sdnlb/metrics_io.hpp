#ifndef SDNLB_METRICS_IO_HPP
#define SDNLB_METRICS_IO_HPP

// Fixed-schema exports. Columns and their order are part of the tool's
// contract (golden-file tested); floating-point values are rendered with
// %.10g so identical runs serialize byte-identically.

#include <string>
#include <vector>

#include "sdnlb/baselines.hpp"
#include "sdnlb/sim.hpp"

namespace sdnlb {

std::string format_double(double v);

// Header: round,R_C<id>...,D,mean_delay,migrations,round_cost,cum_cost.
// `migrations` counts switches moved in the round.
std::string metrics_csv(const Scenario& scenario, const std::vector<RoundRecord>& records);

// Key-value run summary rendered as JSON.
std::string run_summary_json(const Scenario& scenario, PolicyKind policy, std::uint64_t seed,
                             const std::vector<RoundRecord>& records);

// Writes content to path atomically (temp file + rename). Throws
// std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace sdnlb

#endif  // SDNLB_METRICS_IO_HPP
