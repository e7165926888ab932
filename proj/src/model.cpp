#include "sdnlb/model.hpp"

#include <cmath>

namespace sdnlb {

namespace {

std::string id_str(const char* what, std::int64_t id) {
    return std::string(what) + " " + std::to_string(id);
}

}  // namespace

Topology::Topology(std::vector<ControllerState> controllers,
                   std::vector<SwitchState> switches,
                   std::vector<std::vector<int>> hop_rows)
    : controllers_(std::move(controllers)), switches_(std::move(switches)) {
    for (std::size_t i = 0; i < controllers_.size(); ++i) {
        const auto& c = controllers_[i];
        if (c.capacity <= 0.0)
            throw std::invalid_argument(id_str("controller", c.id) + ": capacity must be > 0");
        if (!controller_index_.emplace(c.id, i).second)
            throw std::invalid_argument(id_str("duplicate controller id", c.id));
    }
    for (std::size_t i = 0; i < switches_.size(); ++i) {
        const auto& s = switches_[i];
        if (s.packet_in_rate < 0.0)
            throw std::invalid_argument(id_str("switch", s.id) + ": packet_in_rate must be >= 0");
        if (!switch_index_.emplace(s.id, i).second)
            throw std::invalid_argument(id_str("duplicate switch id", s.id));
    }
    // Ownership must partition the switch set.
    for (const auto& c : controllers_) {
        for (SwitchId sw : c.switches) {
            if (!switch_index_.count(sw))
                throw std::invalid_argument(id_str("controller", c.id) + " owns undefined " +
                                            id_str("switch", sw));
            if (!owner_.emplace(sw, c.id).second)
                throw std::invalid_argument(id_str("switch", sw) + " owned by two controllers");
        }
    }
    for (const auto& s : switches_) {
        if (!owner_.count(s.id))
            throw std::invalid_argument(id_str("switch", s.id) + " has no owner");
    }
    // Dense hop matrix: every pair defined, every entry >= 1.
    if (hop_rows.size() != switches_.size())
        throw std::invalid_argument("hop matrix must have one row per switch");
    hops_.reserve(switches_.size() * controllers_.size());
    for (std::size_t i = 0; i < hop_rows.size(); ++i) {
        if (hop_rows[i].size() != controllers_.size())
            throw std::invalid_argument("hop matrix row " + std::to_string(i) +
                                        " must have one entry per controller");
        for (int h : hop_rows[i]) {
            if (h < 1) throw std::invalid_argument("hop counts must be >= 1");
            hops_.push_back(h);
        }
    }
}

const ControllerState& Topology::controller(ControllerId id) const {
    return controllers_[controller_index(id)];
}

const SwitchState& Topology::switch_state(SwitchId id) const {
    return switches_[switch_index(id)];
}

bool Topology::has_controller(ControllerId id) const {
    return controller_index_.count(id) != 0;
}

int Topology::hops(SwitchId sw, ControllerId ctrl) const {
    return hops_[switch_index(sw) * controllers_.size() + controller_index(ctrl)];
}

ControllerId Topology::owner_of(SwitchId sw) const {
    auto it = owner_.find(sw);
    if (it == owner_.end()) throw std::out_of_range(id_str("unknown switch", sw));
    return it->second;
}

void Topology::set_packet_in_rate(SwitchId sw, double rate) {
    if (rate < 0.0) throw std::invalid_argument("packet_in_rate must be >= 0");
    switches_[switch_index(sw)].packet_in_rate = rate;
}

void Topology::move_switch(SwitchId sw, ControllerId from, ControllerId to) {
    auto& src = controllers_[controller_index(from)];
    auto& dst = controllers_[controller_index(to)];
    if (!src.switches.erase(sw))
        throw std::invalid_argument(id_str("switch", sw) + " not owned by " +
                                    id_str("controller", from));
    dst.switches.insert(sw);
    owner_[sw] = to;
}

std::size_t Topology::controller_index(ControllerId id) const {
    auto it = controller_index_.find(id);
    if (it == controller_index_.end()) throw std::out_of_range(id_str("unknown controller", id));
    return it->second;
}

std::size_t Topology::switch_index(SwitchId id) const {
    auto it = switch_index_.find(id);
    if (it == switch_index_.end()) throw std::out_of_range(id_str("unknown switch", id));
    return it->second;
}

double controller_load(const Topology& topo, ControllerId id) {
    double load = 0.0;
    for (SwitchId sw : topo.controller(id).switches) load += topo.switch_state(sw).packet_in_rate;
    return load;
}

double load_ratio(const Topology& topo, ControllerId id) {
    return controller_load(topo, id) / topo.controller(id).capacity;
}

double mean_ratio_pair(const Topology& topo, ControllerId a, ControllerId b) {
    return (load_ratio(topo, a) + load_ratio(topo, b)) / 2.0;
}

double mean_ratio_all(const Topology& topo) {
    const auto& ctrls = topo.controllers();
    if (ctrls.empty()) throw std::domain_error("mean load ratio undefined for zero controllers");
    double sum = 0.0;
    for (const auto& c : ctrls) sum += load_ratio(topo, c.id);
    return sum / static_cast<double>(ctrls.size());
}

double deviation_from_ratios(std::span<const double> ratios) {
    if (ratios.empty()) throw std::domain_error("deviation undefined for zero ratios");
    double mean = 0.0;
    for (double r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    if (mean == 0.0) return 0.0;  // idle plane is perfectly balanced
    double sq = 0.0;
    for (double r : ratios) sq += (r - mean) * (r - mean);
    return std::sqrt(sq / static_cast<double>(ratios.size())) / mean;
}

double pair_deviation_from_ratios(double ratio_a, double ratio_b) {
    const double pair[2] = {ratio_a, ratio_b};
    return deviation_from_ratios(pair);
}

double discrete_coefficient_pair(const Topology& topo, ControllerId a, ControllerId b) {
    return pair_deviation_from_ratios(load_ratio(topo, a), load_ratio(topo, b));
}

double discrete_coefficient_all(const Topology& topo) {
    std::vector<double> ratios;
    ratios.reserve(topo.controllers().size());
    for (const auto& c : topo.controllers()) ratios.push_back(load_ratio(topo, c.id));
    return deviation_from_ratios(ratios);
}

double migration_efficiency(const Topology& topo, ControllerId ctrl, SwitchId sw) {
    if (topo.owner_of(sw) != ctrl)
        throw std::invalid_argument(id_str("switch", sw) + " not owned by " +
                                    id_str("controller", ctrl));
    return topo.switch_state(sw).packet_in_rate / static_cast<double>(topo.hops(sw, ctrl));
}

double mean_migration_efficiency(const Topology& topo, ControllerId ctrl) {
    const auto& owned = topo.controller(ctrl).switches;
    if (owned.empty())
        throw std::domain_error(id_str("controller", ctrl) + " owns no switches");
    double sum = 0.0;
    for (SwitchId sw : owned) sum += migration_efficiency(topo, ctrl, sw);
    return sum / static_cast<double>(owned.size());
}

}  // namespace sdnlb
