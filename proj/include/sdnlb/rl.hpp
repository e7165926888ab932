#ifndef SDNLB_RL_HPP
#define SDNLB_RL_HPP

// Tabular Q-learning over the round's candidate triples. The state/action
// space is the candidate (out-domain, in-domain) pairs; the reward for a pair
// is its deviation improvement divided by its migration cost. The decision
// loop alternates temporal-difference updates with commits of the
// best-estimate candidate, dropping every candidate that would conflict with
// a committed one, until no candidates remain.
//
// Naming note: epsilon here is the EXPLOIT probability — the max-estimate
// candidate is chosen with probability epsilon and a uniformly random other
// one with probability 1-epsilon. This is the reverse of the conventional
// epsilon-greedy naming; callers configuring it should read it as "greed".

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sdnlb/selection.hpp"

namespace sdnlb {

struct RlConfig {
    double alpha = 0.5;     // learning rate, (0, 1]
    double gamma = 0.8;     // discount factor, [0, 1)
    double epsilon = 0.9;   // exploit probability, (0, 1]
    double q_init = 1.0;    // initial estimate for every candidate pair
    double convergence_tol = 1e-6;
    int max_iterations = 10000;
};

// One round's final, conflict-free migration decision.
struct MigrationAction {
    std::vector<MigrationTriple> triples;
    bool empty() const { return triples.empty(); }
};

using PairKey = std::pair<ControllerId, ControllerId>;  // (out, in)

// Estimate and reward tables over the round's candidate pairs.
struct QState {
    std::map<PairKey, double> q;
    std::map<PairKey, double> r;
    std::map<PairKey, CandidateTriple> candidates;
};

// (d_before - d_after) / migration_cost: positive when the migration improves
// balance, scaled down by what it costs. Throws std::domain_error when the
// cost is not positive.
double compute_reward(double d_before, double d_after, double migration_cost);

// One temporal-difference step: q + alpha * (reward + gamma * max_next - q).
double q_update_value(double q_current, const RlConfig& config, double reward,
                      double max_next_q);

// Applies the update to the table entry and returns the new estimate.
double q_update(QState& state, const RlConfig& config, ControllerId out, ControllerId in,
                double reward, double max_next_q);

// True iff the tables agree entrywise within tol (inclusive at exactly tol).
bool q_converged(const std::map<PairKey, double>& prev, const std::map<PairKey, double>& next,
                 double tol);

// Decision statistics, mainly for convergence assertions in tests.
struct DecideStats {
    int iterations = 0;        // total TD updates performed
    int commits = 0;           // candidates accepted into the action
    int rejections = 0;        // candidates discarded by the acceptance rule
    bool hit_iteration_cap = false;
};

// Runs the three-phase decision over the candidate set and returns the
// conflict-free action. Deterministic given (candidates, topology, config,
// seed). Every candidate must carry a positive migration_cost.
MigrationAction decide_migration(const std::vector<CandidateTriple>& candidates,
                                 const Topology& topo, const RlConfig& config,
                                 std::uint64_t rng_seed, DecideStats* stats = nullptr);

}  // namespace sdnlb

#endif  // SDNLB_RL_HPP
