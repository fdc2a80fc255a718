#include <gtest/gtest.h>

#include "pbias/commitment.hpp"
#include "pbias/fixtures.hpp"
#include "pbias/reward_seeking.hpp"

using namespace pbias;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

RandomDagOptions reward_options() {
    RandomDagOptions opt;
    opt.costs = false;
    opt.rewards = true;
    opt.weight_max = 9;
    return opt;
}

} // namespace

TEST(Commitment, DeletionCertificateOnFan) {
    Graph fan = generate("fan", {{"n", "8"}}).graph;
    const Rational b(3, 2);
    for (int k : {3, 4, 5}) {
        CommitmentResult r = commit_by_deletion(fan, b, k);
        ASSERT_TRUE(r.deletion);
        const DeletionCertificate& d = *r.deletion;
        EXPECT_EQ(r.device, Device::IntervalDeletion);
        EXPECT_EQ(d.k, k);
        EXPECT_EQ(d.removal_bound, 2 * fan.edge_count() / k);
        EXPECT_LE(d.removed, d.removal_bound);
        EXPECT_EQ(static_cast<int>(r.deleted_edges.size()), d.removed);
        EXPECT_TRUE(d.within_budget && d.meets_k && d.interval_clear) << k;
        EXPECT_EQ(d.guarantee_k, r.optimal_reward * Rational::pow(R(1, fan.node_count()), k));
        EXPECT_LE(d.guarantee_k, r.reward_after);
        EXPECT_LT(d.interval_lo, d.interval_hi);
        EXPECT_EQ(r.optimal_reward, heaviest_path(fan, "s").path.total_reward);
    }
    EXPECT_THROW(commit_by_deletion(fan, b, 2), Error);
}

TEST(Commitment, DeletionOnRandomGraphs) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        Graph g = random_dag(seed, 3 + static_cast<int>(seed % 9), reward_options());
        for (int k : {3, 4})
            for (const Rational& b : {R(3, 2), R(2)}) {
                if (!(b < Rational(g.node_count()))) continue;
                CommitmentResult r = commit_by_deletion(g, b, k);
                EXPECT_TRUE(r.deletion->within_budget) << seed;
                EXPECT_LE(r.deletion->guarantee_k, r.reward_after) << seed;
            }
    }
}

TEST(Commitment, ZeroEdge) {
    Graph fan = generate("fan").graph;
    CommitmentResult r = best_zero_edge(fan, R(3, 2));
    EXPECT_EQ(r.device, Device::ZeroEdge);
    EXPECT_EQ(r.reward_after, Rational::pow(R(7, 5), 4));
    ASSERT_TRUE(r.zero_edge);
    EXPECT_TRUE(r.zero_edge->bound_holds);
    EXPECT_EQ(r.added_edges.size(), 1u);

    Fixture zb = generate("zero-bad");
    CommitmentResult z = best_zero_edge(zb.graph, R(2), *zb.required_tie_break);
    EXPECT_EQ(z.reward_after, R(1));
    EXPECT_TRUE(z.zero_edge->bound_holds);
}

TEST(Commitment, ZeroEdgeSerialAndParallelAgree) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        Graph g = random_dag(seed, 3 + static_cast<int>(seed % 7), reward_options());
        for (const Rational& b : {R(3, 2), R(3)}) {
            CommitmentResult p = best_zero_edge(g, b), s = best_zero_edge_serial(g, b);
            ASSERT_EQ(p.reward_after, s.reward_after) << seed;
            ASSERT_EQ(p.added_edges, s.added_edges) << seed;
            ASSERT_EQ(p.path_after.nodes, s.path_after.nodes) << seed;
        }
    }
}

TEST(Commitment, PlanOnFanNeedsCSlightlyBelowB) {
    EdgeRewards eps{{{"v4", "t"}, R(1, 100)}};
    Graph close = generate("fan", {{"c", "749/500"}}).graph;
    CommitmentResult ok = evaluate_plan(close, R(3, 2), eps);
    ASSERT_TRUE(ok.plan);
    EXPECT_TRUE(ok.plan->accepted);
    EXPECT_EQ(ok.plan->budget, R(1, 100));
    EXPECT_TRUE(ok.plan->within_bound);
    EXPECT_EQ(ok.path_after.nodes.back(), "t");
    EXPECT_EQ(ok.reward_after, Rational::pow(R(749, 500), 4) + R(1, 100));

    Graph far = generate("fan").graph;
    EXPECT_FALSE(evaluate_plan(far, R(3, 2), eps).plan->accepted);
    // threshold is c^3 (b - c)
    EdgeRewards enough{{{"v4", "t"}, R(343, 1250)}};
    EXPECT_TRUE(evaluate_plan(far, R(3, 2), enough).plan->accepted);
}

TEST(Commitment, PlanningBadPrefersNoPlan) {
    for (const char* n : {"2", "3", "4"}) {
        Graph g = generate("planning-bad", {{"n", n}}).graph;
        CommitmentResult r = search_plan(g, R(3));
        ASSERT_TRUE(r.plan);
        EXPECT_TRUE(r.placement.empty()) << n;
        EXPECT_TRUE(r.plan->budget.is_zero()) << n;
        EXPECT_GT(r.plan->profiles, 0u);
    }
}

TEST(Commitment, SearchedPlansRespectTheBudgetBound) {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        Graph g = random_dag(seed, 3 + static_cast<int>(seed % 4), reward_options());
        if (g.edge_count() > 7) continue;
        for (const Rational& b : {R(3, 2), R(2), R(3)}) {
            CommitmentResult r = search_plan(g, b);
            if (r.plan->accepted && !r.plan->budget.is_zero()) EXPECT_TRUE(r.plan->within_bound) << seed;
            EXPECT_LE(r.reward_before, r.optimal_reward);
        }
    }
}

TEST(Commitment, DeviceNames) {
    EXPECT_EQ(device_name(Device::PlanningPhase), "planning_phase");
    EXPECT_EQ(device_name(Device::ZeroEdge), "zero_edge");
    EXPECT_EQ(device_name(Device::IntervalDeletion), "interval_deletion");
}
