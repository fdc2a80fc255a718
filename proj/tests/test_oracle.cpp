#include <gtest/gtest.h>

#include "pbias/fixtures.hpp"
#include "pbias/goal_reward.hpp"
#include "pbias/oracle.hpp"

using namespace pbias;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

} // namespace

TEST(Oracle, AcceptsEngineTables) {
    Graph g = generate("change").graph;
    for (const Rational& b : {R(1), R(2), R(10)}) {
        AgentSpec a = AgentSpec::sophisticated(b);
        EXPECT_TRUE(oracle::brute_force_equilibrium_check(g, a, cost_table(g, a)).pass);
    }
}

TEST(Oracle, RejectsSwappedSuccessor) {
    Graph g = generate("change").graph;
    AgentSpec a = AgentSpec::sophisticated(R(2));
    CostTable t = cost_table(g, a);
    // s should go to v at b=2; force u instead
    t.successor[0] = g.node("u");
    oracle::Verdict v = oracle::brute_force_equilibrium_check(g, a, t);
    EXPECT_FALSE(v.pass);
    ASSERT_TRUE(v.node);
    EXPECT_EQ(*v.node, "s");
    EXPECT_FALSE(v.detail.empty());
}

TEST(Oracle, RejectsWrongValue) {
    Graph g = generate("two-fan").graph;
    AgentSpec a = AgentSpec::naive(R(2));
    CostTable t = cost_table(g, a);
    t.value[static_cast<std::size_t>(g.node("v1"))] += R(1, 7);
    EXPECT_FALSE(oracle::brute_force_equilibrium_check(g, a, t).pass);
}

TEST(Oracle, RejectsWrongTieOrder) {
    GraphSpec spec;
    spec.nodes = {"s", "a", "b", "t"};
    spec.source = "s";
    spec.target = "t";
    spec.edge("s", "a", 1).edge("s", "b", 1).edge("a", "t", 1).edge("b", "t", 1);
    Graph g = validate(spec);
    AgentSpec later = AgentSpec::sophisticated(R(2), TieBreakPolicy::PreferLaterSuccessorId);
    CostTable t = cost_table(g, later);
    EXPECT_EQ(t.successor[0], g.node("b"));
    EXPECT_TRUE(oracle::brute_force_equilibrium_check(g, later, t).pass);
    t.successor[0] = g.node("a");
    EXPECT_FALSE(oracle::brute_force_equilibrium_check(g, later, t).pass);
    AgentSpec earlier = AgentSpec::sophisticated(R(2), TieBreakPolicy::PreferEarlierSuccessorId);
    EXPECT_TRUE(oracle::brute_force_equilibrium_check(g, earlier, t).pass);
}

TEST(Oracle, FaultInjectionOnRandomTables) {
    int caught = 0, injected = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Graph g = random_dag(seed, 4 + static_cast<int>(seed % 6), {.weight_max = 9});
        AgentSpec a = AgentSpec::sophisticated(R(2));
        CostTable good = cost_table(g, a);
        for (int u = 0; u + 1 < g.node_count(); ++u) {
            const Topology& t = g.topo();
            if (t.out_degree(u) < 2) continue;
            for (int e = t.out_begin(u); e < t.out_end(u); ++e) {
                int v = t.to(e);
                if (v == good.successor[static_cast<std::size_t>(u)]) continue;
                CostTable bad = good;
                bad.successor[static_cast<std::size_t>(u)] = v;
                ++injected;
                oracle::Verdict verdict = oracle::brute_force_equilibrium_check(g, a, bad);
                caught += !verdict.pass;
            }
        }
    }
    EXPECT_GT(injected, 100);
    EXPECT_EQ(caught, injected);
}

TEST(Oracle, GridMatchesExactSet) {
    Graph g = generate("counter-w0", {{"n", "4"}}).graph;
    const Rational b(13, 8);
    RewardIntervalSet set = feasible_reward_set(g, b);
    std::vector<Rational> samples;
    for (int k = 0; k < 400; ++k) samples.push_back(R(k, 16));
    std::vector<char> grid = oracle::feasibility_grid(g, b, samples);
    ASSERT_EQ(grid.size(), samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) EXPECT_EQ(set.contains(samples[i]), grid[i] != 0) << samples[i];
}

TEST(Oracle, PartiallyNaiveBelief) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Graph g = random_dag(seed, 3 + static_cast<int>(seed % 8));
        for (const auto& [b, bp] : {std::pair{R(2), R(3, 2)}, std::pair{R(3, 2), R(3)}}) {
            AgentSpec a = AgentSpec::partially_naive(b, bp);
            ASSERT_TRUE(oracle::brute_force_equilibrium_check(g, a, cost_table(g, a)).pass) << seed;
        }
    }
}
