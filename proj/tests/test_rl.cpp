#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "sdnlb/rl.hpp"

using namespace sdnlb;

namespace {

// Minimal plane holding controllers 1..n, one idle switch each.
Topology dummy_plane(int n) {
    std::vector<ControllerState> ctrls;
    std::vector<SwitchState> sws;
    std::vector<std::vector<int>> hops;
    for (int i = 1; i <= n; ++i) {
        ctrls.push_back({i, 100.0, {100 + i}});
        sws.push_back({100 + i, 0.0});
        hops.emplace_back(n, 1);
    }
    return Topology(ctrls, sws, hops);
}

CandidateTriple make_candidate(ControllerId out, ControllerId in, SwitchId sw,
                               double d_before, double d_after, double cost) {
    CandidateTriple t;
    t.pair = {out, in, d_before};
    t.switches = {sw};
    t.predicted_pair_deviation = d_after;
    t.migration_cost = cost;
    return t;
}

void check_conflict_free(const MigrationAction& action) {
    std::set<ControllerId> roles;
    std::set<SwitchId> moved;
    for (const auto& t : action.triples) {
        CHECK(t.out != t.in);
        CHECK(roles.insert(t.out).second);
        CHECK(roles.insert(t.in).second);
        for (SwitchId sw : t.switches) CHECK(moved.insert(sw).second);
    }
}

}  // namespace

TEST_CASE("reward is improvement over cost, positive for improvement") {
    CHECK(compute_reward(0.5, 0.1, 4.0) == doctest::Approx(0.1));
    CHECK(compute_reward(0.7, 0.7, 3.0) == 0.0);
    CHECK(compute_reward(0.7, 0.7, 123.0) == 0.0);
    CHECK(compute_reward(0.5, 0.6, 2.0) == doctest::Approx(-0.05));
    CHECK_THROWS_AS(compute_reward(0.5, 0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(compute_reward(0.5, 0.1, -1.0), std::domain_error);
}

TEST_CASE("reward ordering: more improvement up, more cost down") {
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    std::uniform_real_distribution<double> c(0.1, 20.0);
    for (int i = 0; i < 200; ++i) {
        double before = d(gen);
        double cost = c(gen);
        double a1 = d(gen) * before;
        double a2 = d(gen) * before;
        if (a1 > a2) std::swap(a1, a2);  // a1 improves at least as much
        CHECK(compute_reward(before, a1, cost) >= compute_reward(before, a2, cost));
        double c2 = cost + c(gen);
        if (before > a1)
            CHECK(compute_reward(before, a1, cost) > compute_reward(before, a1, c2));
    }
}

TEST_CASE("temporal-difference update") {
    RlConfig cfg;
    cfg.alpha = 0.5;
    cfg.gamma = 0.8;
    // Fixed point: reward + gamma * max_next equals the current estimate.
    CHECK(q_update_value(1.0, cfg, 0.2, 1.0) == 1.0);

    RlConfig frozen = cfg;
    frozen.alpha = 0.0;
    CHECK(q_update_value(0.42, frozen, 5.0, 3.0) == 0.42);
    CHECK(q_update_value(-1.0, frozen, 0.0, 0.0) == -1.0);

    RlConfig immediate;
    immediate.alpha = 1.0;
    immediate.gamma = 0.0;
    CHECK(q_update_value(0.0, immediate, 0.3, 7.0) == 0.3);
}

TEST_CASE("q_update writes through the table") {
    QState st;
    st.q[{1, 2}] = 1.0;
    RlConfig cfg;
    cfg.alpha = 1.0;
    cfg.gamma = 0.0;
    CHECK(q_update(st, cfg, 1, 2, 0.25, 9.0) == doctest::Approx(0.25));
    CHECK(st.q[{1, 2}] == doctest::Approx(0.25));
    CHECK_THROWS_AS(q_update(st, cfg, 3, 4, 0.0, 0.0), std::out_of_range);
}

TEST_CASE("q_converged boundary is inclusive") {
    std::map<PairKey, double> a{{{1, 2}, 0.5}, {{3, 4}, 0.25}};
    CHECK(q_converged(a, a, 0.0));
    auto b = a;
    b[{3, 4}] += 2e-6;
    CHECK_FALSE(q_converged(a, b, 1e-6));
    auto c = a;
    c[{3, 4}] += 1e-6;
    CHECK(q_converged(a, c, 1e-6));
    std::map<PairKey, double> other{{{1, 2}, 0.5}};
    CHECK_FALSE(q_converged(a, other, 1.0));
}

TEST_CASE("repeated updates contract onto the fixed point within budget") {
    // Independent of decide_migration: run the greedy update loop by hand over
    // a static reward table and watch the step size vanish.
    RlConfig cfg;  // alpha 0.5, gamma 0.8
    struct Fixture {
        std::vector<std::pair<PairKey, double>> rewards;
    };
    std::vector<Fixture> fixtures = {
        {{{{1, 2}, 0.05}}},
        {{{{1, 2}, 0.05}, {{3, 2}, 0.1}}},
        {{{{1, 2}, 0.4}, {{3, 4}, 0.01}, {{5, 6}, 0.2}}},
        {{{{1, 2}, 0.0}, {{3, 4}, 0.0}}},
    };
    for (const auto& f : fixtures) {
        QState st;
        for (auto& [k, r] : f.rewards) {
            st.q[k] = cfg.q_init;
            st.r[k] = r;
        }
        int iters = 0;
        double step = 1.0;
        while (iters < 10000) {
            ++iters;
            // Greedy: update the max-estimate entry against the best other.
            PairKey sel = st.q.begin()->first;
            for (auto& [k, q] : st.q)
                if (q > st.q.at(sel)) sel = k;
            double next = 0.0;
            for (auto& [k, q] : st.q)
                if (k != sel && q > next) next = q;
            double old_q = st.q.at(sel);
            double new_q = q_update(st, cfg, sel.first, sel.second, st.r.at(sel), next);
            step = std::abs(new_q - old_q);
            if (step < 1e-6) break;
        }
        CHECK(step < 1e-6);
        CHECK(iters < 10000);
    }
}

TEST_CASE("single candidate is always committed") {
    Topology topo = dummy_plane(2);
    RlConfig cfg;
    cfg.epsilon = 1.0;
    DecideStats stats;
    auto action = decide_migration({make_candidate(1, 2, 101, 0.8, 0.2, 5.0)}, topo, cfg, 7,
                                   &stats);
    REQUIRE(action.triples.size() == 1);
    CHECK(action.triples[0].out == 1);
    CHECK(action.triples[0].in == 2);
    CHECK(action.triples[0].switches == std::vector<SwitchId>{101});
    CHECK(stats.commits == 1);
    CHECK_FALSE(stats.hit_iteration_cap);
}

TEST_CASE("empty candidate set yields a no-op round") {
    Topology topo = dummy_plane(2);
    DecideStats stats;
    auto action = decide_migration({}, topo, RlConfig{}, 1, &stats);
    CHECK(action.empty());
    CHECK(stats.iterations == 0);
}

TEST_CASE("conflicting in-domain: the higher converged estimate wins") {
    Topology topo = dummy_plane(3);
    RlConfig cfg;
    cfg.epsilon = 1.0;

    // Same improvement, different costs: (3 -> 2) is cheaper, so its reward
    // and hence converged estimate are higher.
    auto a = make_candidate(1, 2, 101, 0.8, 0.3, 10.0);  // reward 0.05
    auto b = make_candidate(3, 2, 103, 0.8, 0.3, 5.0);   // reward 0.10
    auto action = decide_migration({a, b}, topo, cfg, 11);
    REQUIRE(action.triples.size() == 1);
    CHECK(action.triples[0].out == 3);

    // Swapped ordering: now (1 -> 2) is the cheaper candidate.
    auto a2 = make_candidate(1, 2, 101, 0.8, 0.3, 5.0);
    auto b2 = make_candidate(3, 2, 103, 0.8, 0.3, 10.0);
    auto action2 = decide_migration({a2, b2}, topo, cfg, 11);
    REQUIRE(action2.triples.size() == 1);
    CHECK(action2.triples[0].out == 1);
}

TEST_CASE("exploit-only decisions are a pure function of the inputs") {
    Topology topo = dummy_plane(4);
    RlConfig cfg;
    cfg.epsilon = 1.0;
    std::vector<CandidateTriple> candidates = {
        make_candidate(1, 2, 101, 0.9, 0.4, 4.0),
        make_candidate(3, 4, 103, 0.7, 0.3, 6.0),
    };
    auto one = decide_migration(candidates, topo, cfg, 1);
    auto two = decide_migration(candidates, topo, cfg, 1);
    auto other_seed = decide_migration(candidates, topo, cfg, 999);
    REQUIRE(one.triples.size() == two.triples.size());
    REQUIRE(one.triples.size() == other_seed.triples.size());
    for (std::size_t i = 0; i < one.triples.size(); ++i) {
        CHECK(one.triples[i].out == two.triples[i].out);
        CHECK(one.triples[i].in == two.triples[i].in);
        CHECK(one.triples[i].switches == two.triples[i].switches);
        CHECK(one.triples[i].out == other_seed.triples[i].out);
        CHECK(one.triples[i].in == other_seed.triples[i].in);
    }
    // Independent pairs: both must be committed.
    CHECK(one.triples.size() == 2);
}

TEST_CASE("fixed seeds reproduce decisions under exploration") {
    Topology topo = dummy_plane(6);
    RlConfig cfg;
    cfg.epsilon = 0.5;  // exploration-heavy
    std::vector<CandidateTriple> candidates = {
        make_candidate(1, 2, 101, 0.9, 0.4, 4.0),
        make_candidate(3, 2, 103, 0.8, 0.3, 5.0),
        make_candidate(5, 6, 105, 0.6, 0.2, 3.0),
    };
    for (std::uint64_t seed : {1ULL, 17ULL, 987654321ULL}) {
        auto one = decide_migration(candidates, topo, cfg, seed);
        auto two = decide_migration(candidates, topo, cfg, seed);
        REQUIRE(one.triples.size() == two.triples.size());
        for (std::size_t i = 0; i < one.triples.size(); ++i) {
            CHECK(one.triples[i].out == two.triples[i].out);
            CHECK(one.triples[i].in == two.triples[i].in);
        }
        check_conflict_free(one);
    }
}

TEST_CASE("fuzz: decisions are conflict-free for arbitrary candidate sets") {
    std::mt19937 gen(20240601);
    std::uniform_real_distribution<double> dev(0.01, 1.0);
    std::uniform_real_distribution<double> cost(0.5, 10.0);
    std::uniform_int_distribution<int> n_cand(1, 6);
    std::uniform_int_distribution<int> ctrl(1, 8);
    std::uniform_real_distribution<double> eps(0.1, 1.0);

    Topology topo = dummy_plane(8);
    for (int trial = 0; trial < 300; ++trial) {
        std::set<PairKey> used;
        std::vector<CandidateTriple> candidates;
        int n = n_cand(gen);
        for (int i = 0; i < n; ++i) {
            ControllerId out = ctrl(gen);
            ControllerId in = ctrl(gen);
            if (out == in || !used.insert({out, in}).second) continue;
            double before = dev(gen);
            double after = before * dev(gen);
            candidates.push_back(
                make_candidate(out, in, 1000 + trial * 10 + i, before, after, cost(gen)));
        }
        RlConfig cfg;
        cfg.epsilon = eps(gen);
        DecideStats stats;
        auto action = decide_migration(candidates, topo, cfg, trial, &stats);
        check_conflict_free(action);
        CHECK_FALSE(stats.hit_iteration_cap);
    }
}
