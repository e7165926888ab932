#include "sdnlb/sim.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sdnlb/rng.hpp"

namespace sdnlb {

double TrafficProfile::rate_at(int round) const {
    if (breakpoints.empty()) throw std::logic_error("traffic profile has no breakpoints");
    double rate = breakpoints.front().rate;
    for (const auto& bp : breakpoints) {
        if (bp.round > round) break;
        rate = bp.rate;
    }
    return rate;
}

double DelayModel::controller_delay(double ratio) const {
    if (ratio >= 1.0) return saturation_delay;
    return base_service_time / std::max(epsilon, 1.0 - ratio);
}

Topology Scenario::make_topology() const {
    return Topology(controllers, switches, hops);
}

double migration_cost(const CostModel& model, const Topology& topo,
                      const MigrationTriple& triple) {
    double cost = model.sync_penalty;
    for (SwitchId sw : triple.switches)
        cost += model.per_switch_base +
                model.per_hop * static_cast<double>(topo.hops(sw, triple.in));
    return cost;
}

bool apply_action(Topology& topo, const MigrationAction& action) {
    // Validate the whole action against the current snapshot first so the
    // application below cannot fail half-way.
    std::set<ControllerId> roles;
    std::set<SwitchId> moved;
    for (const auto& t : action.triples) {
        if (t.out == t.in || t.switches.empty()) return false;
        if (!roles.insert(t.out).second) return false;
        if (!roles.insert(t.in).second) return false;
        if (!topo.has_controller(t.out) || !topo.has_controller(t.in)) return false;
        for (SwitchId sw : t.switches) {
            if (!moved.insert(sw).second) return false;
            if (topo.owner_of(sw) != t.out) return false;  // stale
        }
    }
    for (const auto& t : action.triples)
        for (SwitchId sw : t.switches) topo.move_switch(sw, t.out, t.in);
    return true;
}

namespace {

std::vector<ControllerId> sorted_controller_ids(const Topology& topo) {
    std::vector<ControllerId> ids;
    for (const auto& c : topo.controllers()) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

MigrationAction decide(PolicyKind policy, const Topology& topo, const Scenario& scenario,
                       std::uint64_t decision_seed) {
    switch (policy) {
        case PolicyKind::NONE:
            return {};
        case PolicyKind::DC_LBM:
            return dc_lbm_decide(topo);
        case PolicyKind::MMO_LBM:
            return mmo_lbm_decide(topo);
        case PolicyKind::RL_LBM: {
            auto candidates = build_candidate_set(
                topo, [&](const Topology& t, const MigrationTriple& triple) {
                    return migration_cost(scenario.cost_model, t, triple);
                });
            return decide_migration(candidates, topo, scenario.rl, decision_seed);
        }
    }
    return {};
}

}  // namespace

std::vector<RoundRecord> run(const Scenario& scenario, PolicyKind policy,
                             std::uint64_t seed) {
    Topology topo = scenario.make_topology();
    auto ids = sorted_controller_ids(topo);

    // One jitter stream per switch, derived from the profile seed, the run
    // seed and the switch id; advanced every round to keep streams aligned.
    std::vector<SplitMix64> jitter;
    jitter.reserve(scenario.traffic.size());
    for (const auto& profile : scenario.traffic) {
        std::uint64_t base = profile.jitter ? profile.jitter->seed : 0;
        jitter.emplace_back(mix_seed(mix_seed(base, seed),
                                     static_cast<std::uint64_t>(profile.sw)));
    }

    SplitMix64 decision_seeds(mix_seed(seed, 0x5d11b0a7ULL));
    std::vector<RoundRecord> records;
    records.reserve(static_cast<std::size_t>(scenario.rounds));
    double cum_cost = 0.0;

    for (int round = 0; round < scenario.rounds; ++round) {
        // (1) advance traffic
        for (std::size_t i = 0; i < scenario.traffic.size(); ++i) {
            const auto& profile = scenario.traffic[i];
            double rate = profile.rate_at(round);
            double wobble = jitter[i].next_symmetric();
            if (profile.jitter && profile.jitter->amplitude > 0.0)
                rate = std::max(0.0, rate * (1.0 + profile.jitter->amplitude * wobble));
            topo.set_packet_in_rate(profile.sw, rate);
        }

        // (2) pre-migration balance state
        double mean_ratio = mean_ratio_all(topo);
        double deviation = discrete_coefficient_all(topo);
        bool over_mean = false;
        for (ControllerId cid : ids)
            if (load_ratio(topo, cid) > mean_ratio) over_mean = true;

        // (3)-(5) trigger, decide, price, apply
        RoundRecord rec;
        rec.round = round;
        rec.deviation_pre = deviation;
        std::uint64_t decision_seed = decision_seeds.next();
        if (over_mean && deviation > scenario.trigger_threshold) {
            MigrationAction action = decide(policy, topo, scenario, decision_seed);
            if (!action.empty()) {
                double cost = 0.0;
                for (const auto& t : action.triples)
                    cost += migration_cost(scenario.cost_model, topo, t);
                if (apply_action(topo, action)) {
                    rec.migrations = std::move(action.triples);
                    rec.round_cost = cost;
                }
                // A rejected (stale) action leaves the round migration-free.
            }
        }
        cum_cost += rec.round_cost;
        rec.cum_cost = cum_cost;

        // (6) post-migration metrics
        for (ControllerId cid : ids) {
            rec.loads.push_back(controller_load(topo, cid));
            rec.ratios.push_back(load_ratio(topo, cid));
        }
        rec.deviation = discrete_coefficient_all(topo);

        std::set<SwitchId> handed_off;
        for (const auto& t : rec.migrations)
            handed_off.insert(t.switches.begin(), t.switches.end());
        double weighted = 0.0;
        double total_rate = 0.0;
        for (const auto& s : topo.switches()) {
            double d = scenario.delay_model.controller_delay(
                load_ratio(topo, topo.owner_of(s.id)));
            if (handed_off.count(s.id)) d += scenario.delay_model.migration_handoff_penalty;
            weighted += s.packet_in_rate * d;
            total_rate += s.packet_in_rate;
        }
        rec.mean_delay = total_rate > 0.0 ? weighted / total_rate : 0.0;

        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace sdnlb
