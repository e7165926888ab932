#include "sdnlb/baselines.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace sdnlb {

std::string to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::RL_LBM: return "RL_LBM";
        case PolicyKind::DC_LBM: return "DC_LBM";
        case PolicyKind::MMO_LBM: return "MMO_LBM";
        case PolicyKind::NONE: return "NONE";
    }
    throw std::invalid_argument("unknown policy kind");
}

PolicyKind parse_policy(const std::string& name) {
    std::string up;
    for (char ch : name) up.push_back(static_cast<char>(std::toupper(ch)));
    if (up == "RL_LBM" || up == "RL") return PolicyKind::RL_LBM;
    if (up == "DC_LBM" || up == "DC") return PolicyKind::DC_LBM;
    if (up == "MMO_LBM" || up == "MMO") return PolicyKind::MMO_LBM;
    if (up == "NONE") return PolicyKind::NONE;
    throw std::invalid_argument("unknown policy: " + name);
}

namespace {

std::vector<ControllerId> sorted_ids(const Topology& topo) {
    std::vector<ControllerId> ids;
    for (const auto& c : topo.controllers()) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

MigrationAction dc_lbm_decide(const Topology& topo) {
    MigrationAction action;
    if (topo.controllers().size() < 2) return action;

    Topology work = topo;
    std::set<ControllerId> consumed;
    auto ids = sorted_ids(topo);

    for (ControllerId source : ids) {
        if (consumed.count(source)) continue;

        double mean_ratio = mean_ratio_all(work);
        double global_dev = discrete_coefficient_all(work);
        if (!(load_ratio(work, source) > mean_ratio)) continue;

        // Currently least-loaded unconsumed controller, ties by ascending id.
        ControllerId target = 0;
        double target_ratio = std::numeric_limits<double>::infinity();
        for (ControllerId cid : ids) {
            if (cid == source || consumed.count(cid)) continue;
            double r = load_ratio(work, cid);
            if (r < target_ratio) {
                target_ratio = r;
                target = cid;
            }
        }
        if (target == 0) continue;
        if (!(discrete_coefficient_pair(work, source, target) > global_dev)) continue;

        // Highest-rate owned switch, ties by ascending id.
        SwitchId pick = 0;
        double pick_rate = -1.0;
        for (SwitchId sw : work.controller(source).switches) {
            double r = work.switch_state(sw).packet_in_rate;
            if (r > pick_rate) {
                pick_rate = r;
                pick = sw;
            }
        }
        if (pick == 0) continue;

        double after = (controller_load(work, target) + pick_rate) /
                       work.controller(target).capacity;
        if (after > 1.0) continue;  // would create a new overload

        action.triples.push_back({source, target, {pick}});
        consumed.insert(source);
        consumed.insert(target);
        work.move_switch(pick, source, target);
    }
    return action;
}

MigrationAction mmo_lbm_decide(const Topology& topo) {
    MigrationAction action;
    if (topo.controllers().size() < 2) return action;

    Topology work = topo;
    std::set<ControllerId> consumed;
    auto ids = sorted_ids(topo);
    const double mean_ratio = mean_ratio_all(topo);  // round snapshot

    for (ControllerId source : ids) {
        if (consumed.count(source)) continue;
        if (!(load_ratio(work, source) > mean_ratio)) continue;
        const auto& owned = work.controller(source).switches;
        if (owned.empty()) continue;

        // Fewest-hop neighbor over the source's switches, ties by ascending id.
        ControllerId target = 0;
        int target_hops = std::numeric_limits<int>::max();
        for (ControllerId cid : ids) {
            if (cid == source || consumed.count(cid)) continue;
            int nearest = std::numeric_limits<int>::max();
            for (SwitchId sw : owned) nearest = std::min(nearest, work.hops(sw, cid));
            if (nearest < target_hops) {
                target_hops = nearest;
                target = cid;
            }
        }
        if (target == 0) continue;

        // Drain in ascending hop-to-target order until the source reaches the
        // mean; skip switches that would overload the target.
        std::vector<std::pair<int, SwitchId>> order;
        for (SwitchId sw : owned) order.push_back({work.hops(sw, target), sw});
        std::sort(order.begin(), order.end());

        MigrationTriple triple{source, target, {}};
        for (const auto& [hop, sw] : order) {
            if (!(load_ratio(work, source) > mean_ratio)) break;
            double rate = work.switch_state(sw).packet_in_rate;
            double after = (controller_load(work, target) + rate) /
                           work.controller(target).capacity;
            if (after > 1.0) continue;
            work.move_switch(sw, source, target);
            triple.switches.push_back(sw);
        }
        if (triple.switches.empty()) continue;
        action.triples.push_back(std::move(triple));
        consumed.insert(source);
        consumed.insert(target);
    }
    return action;
}

}  // namespace sdnlb
