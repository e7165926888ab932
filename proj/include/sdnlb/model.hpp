#ifndef SDNLB_MODEL_HPP
#define SDNLB_MODEL_HPP

// Domain model of a multi-controller control plane: controllers with finite
// message capacity, switches emitting packet-in traffic, and a dense hop
// matrix so any switch can be re-homed to any controller. All balance and
// efficiency arithmetic lives here as pure functions over an immutable
// Topology snapshot; mutation happens only through the simulator round loop.

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sdnlb {

using ControllerId = std::int32_t;
using SwitchId = std::int32_t;

struct SwitchState {
    SwitchId id = 0;
    double packet_in_rate = 0.0;  // messages per second
};

struct ControllerState {
    ControllerId id = 0;
    double capacity = 0.0;  // messages per second
    std::set<SwitchId> switches;
};

// One atomic migration decision: move `switches` from controller `out` to
// controller `in`.
struct MigrationTriple {
    ControllerId out = 0;
    ControllerId in = 0;
    std::vector<SwitchId> switches;
};

// Controller/switch inventory plus the dense switch-to-controller hop matrix.
// Construction validates: positive capacities, non-negative rates, unique ids,
// disjoint ownership covering every switch exactly once, hop entries >= 1 for
// every (switch, controller) pair.
class Topology {
  public:
    // hop_rows[i][j] = hops from switches[i] to controllers[j].
    Topology(std::vector<ControllerState> controllers,
             std::vector<SwitchState> switches,
             std::vector<std::vector<int>> hop_rows);

    const std::vector<ControllerState>& controllers() const { return controllers_; }
    const std::vector<SwitchState>& switches() const { return switches_; }

    const ControllerState& controller(ControllerId id) const;
    const SwitchState& switch_state(SwitchId id) const;
    bool has_controller(ControllerId id) const;

    int hops(SwitchId sw, ControllerId ctrl) const;
    ControllerId owner_of(SwitchId sw) const;

    // Round-loop mutators (single-threaded use only).
    void set_packet_in_rate(SwitchId sw, double rate);
    void move_switch(SwitchId sw, ControllerId from, ControllerId to);

  private:
    std::size_t controller_index(ControllerId id) const;
    std::size_t switch_index(SwitchId id) const;

    std::vector<ControllerState> controllers_;
    std::vector<SwitchState> switches_;
    std::vector<int> hops_;  // row-major [switch_index][controller_index]
    std::unordered_map<ControllerId, std::size_t> controller_index_;
    std::unordered_map<SwitchId, std::size_t> switch_index_;
    std::unordered_map<SwitchId, ControllerId> owner_;
};

// Sum of packet-in rates over the switches owned by the controller.
double controller_load(const Topology& topo, ControllerId id);

// Real-time load divided by capacity; may exceed 1 (overload is representable,
// preventing it is the migration mechanism's job).
double load_ratio(const Topology& topo, ControllerId id);

double mean_ratio_pair(const Topology& topo, ControllerId a, ControllerId b);

// Arithmetic mean of all controllers' load ratios. Throws std::domain_error
// on an empty control plane.
double mean_ratio_all(const Topology& topo);

// Population standard deviation of the given ratios divided by their mean;
// defined as 0 when all ratios are 0 (an idle plane is perfectly balanced).
double deviation_from_ratios(std::span<const double> ratios);
double pair_deviation_from_ratios(double ratio_a, double ratio_b);

double discrete_coefficient_pair(const Topology& topo, ControllerId a, ControllerId b);

// The headline balance metric over the whole control plane (smaller = more
// balanced).
double discrete_coefficient_all(const Topology& topo);

// Switch's packet-in rate divided by its hop count to its current controller.
// Precondition: the switch is owned by `ctrl`.
double migration_efficiency(const Topology& topo, ControllerId ctrl, SwitchId sw);

// Mean of migration_efficiency over the controller's owned switches. Throws
// std::domain_error when the controller owns no switches (no candidate
// migrations exist).
double mean_migration_efficiency(const Topology& topo, ControllerId ctrl);

}  // namespace sdnlb

#endif  // SDNLB_MODEL_HPP
