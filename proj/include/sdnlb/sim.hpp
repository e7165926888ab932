#ifndef SDNLB_SIM_HPP
#define SDNLB_SIM_HPP

// Round-based simulation engine. Each round advances the traffic schedules,
// checks the migration trigger (some controller above the mean load ratio AND
// plane deviation above the scenario threshold), lets the configured policy
// decide, prices and applies the resulting action, then scores packet-in
// delay on the post-migration plane. One run is strictly single-threaded;
// independent runs share no state and may execute in parallel.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdnlb/baselines.hpp"
#include "sdnlb/rl.hpp"

namespace sdnlb {

struct RatePoint {
    int round = 0;
    double rate = 0.0;
};

struct JitterSpec {
    double amplitude = 0.0;  // relative, e.g. 0.05 = +-5%
    std::uint64_t seed = 0;
};

// Step-interpolated rate schedule for one switch. The first breakpoint must
// sit at round 0 so every round has a defined rate.
struct TrafficProfile {
    SwitchId sw = 0;
    std::vector<RatePoint> breakpoints;
    std::optional<JitterSpec> jitter;

    double rate_at(int round) const;
};

// Migration pricing: per-switch signaling plus per-hop transfer toward the
// in-migration controller plus one synchronization penalty per action.
struct CostModel {
    double per_switch_base = 1.0;
    double per_hop = 1.0;
    double sync_penalty = 1.0;
};

// Utilization-scaled service time with a saturation cap. Switches that moved
// this round pay a one-round handoff penalty on top.
struct DelayModel {
    double base_service_time = 1.0;
    double epsilon = 0.05;         // keeps the unsaturated delay finite
    double saturation_delay = 25.0;
    double migration_handoff_penalty = 2.0;

    double controller_delay(double ratio) const;
};

struct RoundRecord {
    int round = 0;
    std::vector<double> loads;    // by ascending controller id
    std::vector<double> ratios;   // by ascending controller id
    double deviation = 0.0;       // post-migration plane deviation
    double deviation_pre = 0.0;   // trigger-time deviation, before migration
    double mean_delay = 0.0;      // rate-weighted mean packet-in delay
    std::vector<MigrationTriple> migrations;
    double round_cost = 0.0;
    double cum_cost = 0.0;
};

// Complete experiment description, usually parsed from a scenario file.
struct Scenario {
    int version = 1;
    std::string name;
    int rounds = 1;
    std::uint64_t seed = 0;
    double trigger_threshold = 0.3;
    std::vector<ControllerState> controllers;
    std::vector<SwitchState> switches;
    std::vector<std::vector<int>> hops;  // rows follow `switches` order
    std::vector<TrafficProfile> traffic;
    CostModel cost_model;
    DelayModel delay_model;
    RlConfig rl;

    Topology make_topology() const;
};

double migration_cost(const CostModel& model, const Topology& topo,
                      const MigrationTriple& triple);

// Atomically reassigns ownership for every triple. Returns false and leaves
// the topology untouched when the action is stale (a listed switch is no
// longer owned by its out-domain) or violates the action invariants.
bool apply_action(Topology& topo, const MigrationAction& action);

// Runs `scenario.rounds` rounds under the given policy. Deterministic for a
// fixed (scenario, policy, seed).
std::vector<RoundRecord> run(const Scenario& scenario, PolicyKind policy,
                             std::uint64_t seed);

}  // namespace sdnlb

#endif  // SDNLB_SIM_HPP
