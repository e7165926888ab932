#ifndef SDNLB_BASELINES_HPP
#define SDNLB_BASELINES_HPP

// Comparison policies sharing the RL policy's round interface. DC-LBM moves
// each over-mean controller's highest-rate switch to the currently
// least-loaded controller when the pair's deviation exceeds the plane-wide
// deviation. MMO-LBM drains an over-mean controller toward its fewest-hop
// neighbor until the source drops to the mean. Both respect the ownership
// partition, role conflict-freedom and the no-new-overload guard, so the
// comparisons isolate the decision rule itself.

#include <string>

#include "sdnlb/rl.hpp"

namespace sdnlb {

enum class PolicyKind { RL_LBM, DC_LBM, MMO_LBM, NONE };

std::string to_string(PolicyKind kind);
PolicyKind parse_policy(const std::string& name);  // throws std::invalid_argument

MigrationAction dc_lbm_decide(const Topology& topo);
MigrationAction mmo_lbm_decide(const Topology& topo);

}  // namespace sdnlb

#endif  // SDNLB_BASELINES_HPP
