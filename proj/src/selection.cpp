#include "sdnlb/selection.hpp"

#include <algorithm>

namespace sdnlb {

std::vector<CandidatePair> select_migration_domains(const Topology& topo) {
    const auto& ctrls = topo.controllers();
    std::vector<CandidatePair> pairs;
    if (ctrls.size() < 2) return pairs;

    std::vector<ControllerId> ids;
    ids.reserve(ctrls.size());
    for (const auto& c : ctrls) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());

    const double mean_ratio = mean_ratio_all(topo);
    const double global_dev = discrete_coefficient_all(topo);

    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            double r_i = load_ratio(topo, ids[i]);
            double r_j = load_ratio(topo, ids[j]);
            double pair_dev = pair_deviation_from_ratios(r_i, r_j);
            if (!(pair_dev > global_dev)) continue;
            // pair_dev > 0 implies the ratios differ, so the roles are unambiguous.
            ControllerId hi = r_i > r_j ? ids[i] : ids[j];
            ControllerId lo = r_i > r_j ? ids[j] : ids[i];
            if (!(load_ratio(topo, hi) > mean_ratio)) continue;
            pairs.push_back({hi, lo, pair_dev});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const CandidatePair& a, const CandidatePair& b) {
        if (a.pair_deviation != b.pair_deviation) return a.pair_deviation > b.pair_deviation;
        if (a.out != b.out) return a.out < b.out;
        return a.in < b.in;
    });
    return pairs;
}

std::optional<CandidateTriple> select_migrating_switches(const Topology& topo,
                                                         const CandidatePair& pair) {
    const auto& owned = topo.controller(pair.out).switches;
    if (owned.empty()) return std::nullopt;

    struct Ranked {
        SwitchId id;
        double efficiency;
        double rate;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(owned.size());
    double efficiency_sum = 0.0;
    for (SwitchId sw : owned) {
        double e = migration_efficiency(topo, pair.out, sw);
        ranked.push_back({sw, e, topo.switch_state(sw).packet_in_rate});
        efficiency_sum += e;
    }
    const double mean_efficiency = efficiency_sum / static_cast<double>(ranked.size());

    std::vector<Ranked> eligible;
    for (const auto& r : ranked)
        if (r.efficiency >= mean_efficiency) eligible.push_back(r);
    std::sort(eligible.begin(), eligible.end(), [](const Ranked& a, const Ranked& b) {
        if (a.efficiency != b.efficiency) return a.efficiency > b.efficiency;
        return a.id < b.id;
    });

    const double out_load = controller_load(topo, pair.out);
    const double in_load = controller_load(topo, pair.in);
    const double out_cap = topo.controller(pair.out).capacity;
    const double in_cap = topo.controller(pair.in).capacity;

    CandidateTriple triple;
    triple.pair = pair;
    double best_dev = pair.pair_deviation;
    double moved = 0.0;
    for (const auto& r : eligible) {
        double next_moved = moved + r.rate;
        double ratio_in = (in_load + next_moved) / in_cap;
        if (ratio_in > 1.0) break;  // never create a new overload
        double ratio_out = std::max(0.0, (out_load - next_moved) / out_cap);
        double predicted = pair_deviation_from_ratios(ratio_out, ratio_in);
        if (!(predicted < best_dev)) break;  // first non-improving extension ends the prefix
        triple.switches.push_back(r.id);
        best_dev = predicted;
        moved = next_moved;
    }
    if (triple.switches.empty()) return std::nullopt;
    triple.predicted_pair_deviation = best_dev;
    return triple;
}

std::vector<CandidateTriple> build_candidate_set(const Topology& topo,
                                                 const TripleCostFn& cost_fn) {
    std::vector<CandidateTriple> candidates;
    for (const auto& pair : select_migration_domains(topo)) {
        auto triple = select_migrating_switches(topo, pair);
        if (!triple) continue;
        if (cost_fn)
            triple->migration_cost =
                cost_fn(topo, MigrationTriple{pair.out, pair.in, triple->switches});
        candidates.push_back(std::move(*triple));
    }
    return candidates;
}

}  // namespace sdnlb
