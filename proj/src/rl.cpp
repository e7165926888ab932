#include "sdnlb/rl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sdnlb/rng.hpp"

namespace sdnlb {

double compute_reward(double d_before, double d_after, double migration_cost) {
    if (!(migration_cost > 0.0))
        throw std::domain_error("migration cost must be positive");
    return (d_before - d_after) / migration_cost;
}

double q_update_value(double q_current, const RlConfig& config, double reward,
                      double max_next_q) {
    return q_current + config.alpha * (reward + config.gamma * max_next_q - q_current);
}

double q_update(QState& state, const RlConfig& config, ControllerId out, ControllerId in,
                double reward, double max_next_q) {
    auto it = state.q.find({out, in});
    if (it == state.q.end()) throw std::out_of_range("pair not indexed in Q");
    it->second = q_update_value(it->second, config, reward, max_next_q);
    return it->second;
}

bool q_converged(const std::map<PairKey, double>& prev, const std::map<PairKey, double>& next,
                 double tol) {
    auto a = prev.begin();
    auto b = next.begin();
    for (; a != prev.end() && b != next.end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (std::abs(a->second - b->second) > tol) return false;
    }
    return a == prev.end() && b == next.end();
}

namespace {

// Step (a): for every out-domain still in play, the in-domain with the
// largest reward (ties by ascending in-domain id via map order).
std::vector<PairKey> reward_shortlist(const QState& st) {
    std::vector<PairKey> shortlist;
    ControllerId current_out = 0;
    bool have_out = false;
    PairKey best{};
    double best_reward = 0.0;
    for (const auto& [key, reward] : st.r) {
        if (!have_out || key.first != current_out) {
            if (have_out) shortlist.push_back(best);
            current_out = key.first;
            have_out = true;
            best = key;
            best_reward = reward;
        } else if (reward > best_reward) {
            best = key;
            best_reward = reward;
        }
    }
    if (have_out) shortlist.push_back(best);
    return shortlist;
}

PairKey max_estimate_of(const std::vector<PairKey>& keys, const QState& st) {
    PairKey best = keys.front();
    double best_q = st.q.at(best);
    for (const auto& k : keys) {
        double q = st.q.at(k);
        if (q > best_q) {  // ties keep the ascending-key first occurrence
            best = k;
            best_q = q;
        }
    }
    return best;
}

double max_next_estimate(const QState& st, const PairKey& exclude) {
    double best = 0.0;
    bool any = false;
    for (const auto& [key, q] : st.q) {
        if (key == exclude) continue;
        if (!any || q > best) {
            best = q;
            any = true;
        }
    }
    return any ? best : 0.0;
}

void erase_conflicting(QState& st, ControllerId a, ControllerId b) {
    for (auto it = st.candidates.begin(); it != st.candidates.end();) {
        const auto& [out, in] = it->first;
        if (out == a || out == b || in == a || in == b) {
            st.q.erase(it->first);
            st.r.erase(it->first);
            it = st.candidates.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace

MigrationAction decide_migration(const std::vector<CandidateTriple>& candidates,
                                 const Topology& topo, const RlConfig& config,
                                 std::uint64_t rng_seed, DecideStats* stats) {
    (void)topo;  // decisions work on the frozen candidate metrics
    MigrationAction action;
    DecideStats local;
    if (!candidates.empty()) {
        // Initialization phase: A empty, Q at q_init, R from the frozen
        // per-candidate improvement and cost.
        QState st;
        for (const auto& c : candidates) {
            PairKey key{c.pair.out, c.pair.in};
            st.candidates.emplace(key, c);
            st.q.emplace(key, config.q_init);
            st.r.emplace(key, compute_reward(c.pair.pair_deviation, c.predicted_pair_deviation,
                                             c.migration_cost));
        }

        SplitMix64 rng(rng_seed);
        while (!st.candidates.empty() && local.iterations < config.max_iterations) {
            ++local.iterations;
            auto shortlist = reward_shortlist(st);
            // Step (b): exploit the max estimate with probability epsilon,
            // otherwise explore uniformly among the remaining shortlist.
            PairKey sel = max_estimate_of(shortlist, st);
            if (shortlist.size() > 1 && !(rng.next_unit() < config.epsilon)) {
                std::vector<PairKey> others;
                for (const auto& k : shortlist)
                    if (k != sel) others.push_back(k);
                sel = others[rng.next_below(others.size())];
            }
            // Step (c): one temporal-difference step against the best other
            // candidate's estimate.
            double next_q = max_next_estimate(st, sel);
            double old_q = st.q.at(sel);
            double new_q = q_update(st, config, sel.first, sel.second, st.r.at(sel), next_q);

            // The candidate's estimate has stabilized once the update moves it
            // by at most the convergence tolerance. The acceptance rule
            // (estimate must not decrease, inclusive within the same
            // tolerance) is then checked; on acceptance the triple joins the
            // action and every candidate touching either controller is
            // dropped, on rejection only this candidate is dropped.
            if (std::abs(new_q - old_q) <= config.convergence_tol) {
                if (new_q >= old_q - config.convergence_tol) {
                    action.triples.push_back(MigrationTriple{
                        sel.first, sel.second, st.candidates.at(sel).switches});
                    ++local.commits;
                    erase_conflicting(st, sel.first, sel.second);
                } else {
                    ++local.rejections;
                    st.q.erase(sel);
                    st.r.erase(sel);
                    st.candidates.erase(sel);
                }
            }
        }
        local.hit_iteration_cap = !st.candidates.empty();
    }
    if (stats) *stats = local;
    return action;
}

}  // namespace sdnlb
