#ifndef SDNLB_SELECTION_HPP
#define SDNLB_SELECTION_HPP

// Candidate construction for one migration round. Domain pairing emits an
// (out, in) pair for every controller pair whose mutual deviation exceeds the
// plane-wide deviation while the higher-ratio side sits above the mean load
// ratio. Switch selection then greedily extends a prefix of the out-domain's
// high-efficiency switches as long as each extension strictly lowers the
// pair's predicted deviation and never overloads the in-domain.
//
// All comparisons are exact float comparisons with deterministic tie-breaking
// by ascending id, so identical snapshots always produce identical candidates.

#include <functional>
#include <optional>
#include <vector>

#include "sdnlb/model.hpp"

namespace sdnlb {

struct CandidatePair {
    ControllerId out = 0;
    ControllerId in = 0;
    double pair_deviation = 0.0;
};

struct CandidateTriple {
    CandidatePair pair;
    std::vector<SwitchId> switches;         // non-increasing migration efficiency
    double predicted_pair_deviation = 0.0;  // strictly below pair.pair_deviation
    double migration_cost = 0.0;            // filled by the caller's cost model
};

// Emits one CandidatePair per qualifying unordered controller pair, the
// higher-ratio controller as `out`. Ordered by descending pair_deviation,
// ties by ascending (out, in).
std::vector<CandidatePair> select_migration_domains(const Topology& topo);

// Greedy prefix selection over the out-domain's eligible switches (efficiency
// >= the out-domain's mean). Returns nullopt when no extension improves the
// pair deviation, when the first move would overload the in-domain, or when
// the out-domain owns no switches.
std::optional<CandidateTriple> select_migrating_switches(const Topology& topo,
                                                         const CandidatePair& pair);

// Cost model hook; selection itself is cost-agnostic.
using TripleCostFn = std::function<double(const Topology&, const MigrationTriple&)>;

// Composes domain pairing and switch selection, dropping pairs with no viable
// switch set. Candidate order follows select_migration_domains. When a cost
// function is supplied, each triple's migration_cost is filled in.
std::vector<CandidateTriple> build_candidate_set(const Topology& topo,
                                                 const TripleCostFn& cost_fn = {});

}  // namespace sdnlb

#endif  // SDNLB_SELECTION_HPP
