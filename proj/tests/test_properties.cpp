// Invariants checked over random and exhaustive small graphs.
#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pbias/commitment.hpp"
#include "pbias/fixtures.hpp"
#include "pbias/goal_reward.hpp"
#include "pbias/io.hpp"
#include "pbias/reward_seeking.hpp"
#include "pbias/suites.hpp"

using namespace pbias;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

const std::vector<Rational>& biases() {
    static const std::vector<Rational> b{R(3, 2), R(2), R(3)};
    return b;
}

std::vector<Graph> cost_graphs(int count) {
    suites::RandomSuite s;
    s.count = count;
    s.max_nodes = 10;
    return suites::random_suite(s);
}

std::vector<Graph> reward_graphs(int count) {
    suites::RandomSuite s;
    s.count = count;
    s.max_nodes = 10;
    s.rewards = true;
    s.seed_base = 50000;
    return suites::random_suite(s);
}

} // namespace

TEST(Properties, OptimalValuesMatchEnumeration) {
    for (const Graph& g : cost_graphs(150)) {
        CostTable t = shortest_path(g, "s").table;
        for (int u = 0; u < g.node_count(); ++u) {
            const NodeId& id = g.topo().id(u);
            std::vector<Path> paths = enumerate_paths(g, id, "t");
            Rational best = paths.front().total_cost;
            for (const Path& p : paths) best = std::min(best, p.total_cost);
            ASSERT_EQ(t.value[static_cast<std::size_t>(u)], best);
        }
    }
    for (const Graph& g : reward_graphs(150)) {
        Rational best;
        for (const Path& p : enumerate_paths(g, "s", "t")) best = std::max(best, p.total_reward);
        ASSERT_EQ(heaviest_path(g, "s").path.total_reward, best);
    }
}

TEST(Properties, TopologicalOrderAndIdempotentValidate) {
    for (const Graph& g : cost_graphs(200)) {
        std::vector<NodeId> order = topological_order(g);
        ASSERT_EQ(static_cast<int>(order.size()), g.node_count());
        std::set<NodeId> seen(order.begin(), order.end());
        ASSERT_EQ(seen.size(), order.size());
        for (int e = 0; e < g.edge_count(); ++e) {
            auto pos = [&](const NodeId& id) { return std::find(order.begin(), order.end(), id) - order.begin(); };
            ASSERT_LT(pos(g.topo().id(g.topo().from(e))), pos(g.topo().id(g.topo().to(e))));
        }
        ASSERT_EQ(io::to_json(validate(g)).dump(), io::to_json(g).dump());
        ASSERT_EQ(io::to_json(validate(validate(g))).dump(), io::to_json(validate(g)).dump());
    }
}

TEST(Properties, CostRatioBounds) {
    for (const Graph& g : cost_graphs(300)) {
        Rational co = shortest_path(g, "s").path.total_cost;
        EXPECT_EQ(simulate(g, AgentSpec::optimal()).true_total, co);
        for (const Rational& b : biases()) {
            Rational cs = simulate(g, AgentSpec::sophisticated(b)).true_total;
            Rational cn = simulate(g, AgentSpec::naive(b)).true_total;
            EXPECT_LE(cs, b * co);
            if (!cn.is_zero()) EXPECT_LE(cs / cn, b);
            for (const Rational& bp : {b + R(1, 2), R(2) * b})
                EXPECT_LE(simulate(g, AgentSpec::partially_naive(b, bp)).true_total, bp * co);
        }
        for (const Rational& b : {R(1, 2), R(3, 4)})
            EXPECT_LE(simulate(g, AgentSpec::future_biased(b)).true_total, co / b);
    }
}

TEST(Properties, SophisticatedFixedPoint) {
    for (const Graph& g : cost_graphs(200)) {
        for (const Rational& b : biases()) {
            CostTable t = cost_table(g, AgentSpec::sophisticated(b));
            const Topology& topo = g.topo();
            for (int u = 0; u + 1 < g.node_count(); ++u) {
                int s = t.successor[static_cast<std::size_t>(u)];
                Rational chosen = b * g.cost(topo.find_edge(u, s)) + t.value[static_cast<std::size_t>(s)];
                for (int e = topo.out_begin(u); e < topo.out_end(u); ++e)
                    ASSERT_LE(chosen, b * g.cost(e) + t.value[static_cast<std::size_t>(topo.to(e))]);
            }
        }
    }
}

TEST(Properties, NoMidCourseAbandonment) {
    for (const Graph& g : cost_graphs(200))
        for (const Rational& b : biases())
            for (const Rational& r : reward_breakpoints(g, b)) {
                TraversalTrace tr = traverse_with_reward(g, b, r);
                if (tr.abandoned_at) {
                    ASSERT_EQ(*tr.abandoned_at, "s");
                    ASSERT_EQ(tr.path.nodes.size(), 1u);
                } else {
                    ASSERT_EQ(tr.path.nodes.back(), "t");
                }
            }
}

TEST(Properties, MotivatingPathIsSimpleMinimalAndMonotone) {
    for (const Graph& g : cost_graphs(150))
        for (const Rational& b : biases()) {
            std::vector<Rational> bp = reward_breakpoints(g, b);
            bool found = false;
            for (const Rational& r : bp) {
                std::optional<Path> p = find_motivating_path(g, b, r);
                if (found) ASSERT_TRUE(p) << "not monotone at R=" << r;
                if (!p) continue;
                found = true;
                std::set<NodeId> uniq(p->nodes.begin(), p->nodes.end());
                ASSERT_EQ(uniq.size(), p->nodes.size());
                // the path alone motivates the agent: b*c(prefix edge) + remaining true cost <= R
                Rational rest = p->total_cost;
                for (std::size_t i = 0; i + 1 < p->nodes.size(); ++i) {
                    Rational c = g.cost(g.edge(p->nodes[i], p->nodes[i + 1]));
                    ASSERT_LE(b * c + rest - c, r);
                    rest -= c;
                }
            }
        }
}

TEST(Properties, RewardChainWithInternalRewards) {
    int searched = 0;
    for (const Graph& g : cost_graphs(120)) {
        if (g.edge_count() > 7) continue;
        const Rational b(2);
        Rational co = shortest_path(g, "s").path.total_cost;
        if (co.is_zero()) continue;
        Rational rd = min_reward_with_deletion(g, b).r_d;
        Rational rm = min_reward(g, b);
        InternalSearchResult in = min_internal_reward_search(g, b);
        ++searched;
        EXPECT_LE(rd, in.r_i);
        EXPECT_LE(in.r_i, rm);
        EXPECT_LE(in.lower_bound, in.r_i);
    }
    EXPECT_GT(searched, 20);
}

TEST(Properties, RewardSeekingBounds) {
    for (const Graph& g : reward_graphs(300)) {
        Rational ro = heaviest_path(g, "s").path.total_reward;
        for (const Rational& b : biases()) {
            Rational rn = simulate_rewards(g, AgentSpec::naive(b)).true_total;
            EXPECT_LE(ro, b * rn);
            for (const AgentSpec& a : {AgentSpec::sophisticated(b), AgentSpec::naive(b),
                                       AgentSpec::partially_naive(b, b + R(1))})
                EXPECT_LE(simulate_rewards(g, a).true_total, ro);
        }
    }
}

TEST(Properties, FanReversal) {
    for (int n : {2, 3, 4, 6}) {
        Graph fan = generate("fan", {{"n", std::to_string(n)}}).graph;
        const Rational b(3, 2);
        Rational soph = reward_ratio(fan, AgentSpec::sophisticated(b));
        Rational naive = reward_ratio(fan, AgentSpec::naive(b));
        EXPECT_LT(naive, soph) << n;
        EXPECT_LE(naive, b) << n;
        EXPECT_EQ(soph, Rational::pow(R(7, 5), n)) << n;
    }
}

TEST(Properties, CommitmentInvariants) {
    for (const Graph& g : reward_graphs(120)) {
        Rational ro = heaviest_path(g, "s").path.total_reward;
        for (const Rational& b : biases()) {
            CommitmentResult z = best_zero_edge(g, b);
            EXPECT_LE(ro, b * Rational(g.node_count()) * z.reward_after);
            if (!(b < Rational(g.node_count()))) continue;
            CommitmentResult d = commit_by_deletion(g, b, 3);
            EXPECT_LE(d.deletion->optimal_after, ro);
            EXPECT_TRUE(d.deletion->meets_j);
            EXPECT_TRUE(d.deletion->interval_clear);
        }
    }
}

TEST(Properties, ExhaustiveCounts) {
    EXPECT_EQ(suites::exhaustive_count(2, 3), 4u);
    EXPECT_EQ(suites::exhaustive_count(3, 3), 80u);
    EXPECT_EQ(suites::exhaustive_count(4, 3), 9280u);
    EXPECT_EQ(suites::exhaustive_count(5, 3), 5684480u);
    std::uint64_t seen = 0;
    suites::for_each_small_dag(4, 3, false, [&](const Graph&) { ++seen; });
    EXPECT_EQ(seen, 4u + 80u + 9280u);
}

TEST(Properties, ExhaustiveSerialAndParallelAgree) {
    for (auto p : {suites::Property::SophisticatedCostRatio, suites::Property::RewardChain,
                   suites::Property::NaiveRewardBound}) {
        suites::SuiteStats par = suites::run_exhaustive(p, biases(), 4, 3);
        suites::SuiteStats ser = suites::run_exhaustive_serial(p, biases(), 4, 3);
        EXPECT_EQ(par.graphs, 9364u);
        EXPECT_EQ(par.checks, 3u * 9364u);
        EXPECT_EQ(par.checks, ser.checks);
        EXPECT_EQ(par.violations, 0u) << par.first_violation;
        EXPECT_EQ(ser.violations, 0u) << ser.first_violation;
    }
}

TEST(Properties, ExhaustiveKernelMatchesPublicApi) {
    // the suite kernel must agree with the library on the chain it checks
    std::uint64_t graphs = 0;
    suites::for_each_small_dag(4, 2, false, [&](const Graph& g) {
        ++graphs;
        Rational co = shortest_path(g, "s").path.total_cost;
        for (const Rational& b : biases()) {
            Rational rm = min_reward(g, b);
            Rational rd = min_reward_with_deletion(g, b).r_d;
            ASSERT_LE(co, rd);
            ASSERT_LE(rd, rm);
            ASSERT_LE(rm, b * co);
        }
    });
    EXPECT_GT(graphs, 1000u);
}
