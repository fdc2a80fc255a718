#include <gtest/gtest.h>

#include "pbias/fixtures.hpp"
#include "pbias/graph.hpp"

using namespace pbias;

namespace {

GraphSpec diamond() {
    GraphSpec g;
    g.nodes = {"s", "a", "b", "t"};
    g.source = "s";
    g.target = "t";
    g.edge("s", "a", 1).edge("s", "b", 2).edge("a", "t", 4).edge("b", "t", 1);
    return g;
}

std::string joined(const std::vector<NodeId>& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : "-") + id;
    return out;
}

template <class F>
ValidationError caught(F f) {
    try {
        f();
    } catch (const ValidationError& e) {
        return e;
    }
    ADD_FAILURE() << "no ValidationError";
    return ValidationError({});
}

} // namespace

TEST(Graph, TopologyIndexing) {
    Graph g = validate(diamond());
    const Topology& t = g.topo();
    EXPECT_EQ(t.node_count(), 4);
    EXPECT_EQ(t.edge_count(), 4);
    EXPECT_EQ(t.id(t.source()), "s");
    EXPECT_EQ(t.id(t.target()), "t");
    EXPECT_EQ(t.index_of("zz"), -1);
    for (int e = 0; e < t.edge_count(); ++e) EXPECT_LT(t.from(e), t.to(e));
    int sa = g.edge("s", "a");
    EXPECT_EQ(g.cost(sa), Rational(1));
    EXPECT_EQ(t.find_edge(t.index_of("a"), t.index_of("b")), -1);
    EXPECT_THROW(g.node("zz"), Error);
    EXPECT_THROW(g.edge("a", "b"), Error);
    EXPECT_EQ(joined(topological_order(g)), "s-a-b-t");
}

TEST(Graph, OutEdgesSortedBySuccessorId) {
    GraphSpec spec;
    spec.nodes = {"s", "z", "m", "a", "t"};
    spec.source = "s";
    spec.target = "t";
    spec.edge("s", "z", 0).edge("s", "t", 0).edge("s", "m", 0).edge("s", "a", 0);
    spec.edge("z", "t", 0).edge("m", "t", 0).edge("a", "t", 0);
    Graph g = validate(spec);
    const Topology& t = g.topo();
    std::vector<NodeId> succ;
    for (int e = t.out_begin(0); e < t.out_end(0); ++e) succ.push_back(t.id(t.to(e)));
    EXPECT_EQ(joined(succ), "a-m-t-z");
}

TEST(Graph, ValidationReportsEveryViolation) {
    GraphSpec g = diamond();
    g.edge("a", "s", 1);
    g.edge("s", "a", 2);
    g.edge("b", "t", -1);
    ValidationError e = caught([&] { validate(g); });
    EXPECT_TRUE(e.has(ErrorCode::CycleDetected));
    EXPECT_TRUE(e.has(ErrorCode::DuplicateEdge));
    EXPECT_TRUE(e.has(ErrorCode::NegativeWeight));
    EXPECT_GE(e.violations().size(), 3u);
}

TEST(Graph, ValidationCodes) {
    GraphSpec g = diamond();
    g.source = "q";
    EXPECT_TRUE(caught([&] { validate(g); }).has(ErrorCode::MissingSourceOrTarget));
    g = diamond();
    g.edge("a", "ghost", 0);
    EXPECT_TRUE(caught([&] { validate(g); }).has(ErrorCode::UnknownEndpoint));
    g = diamond();
    g.nodes.push_back("a");
    EXPECT_TRUE(caught([&] { validate(g); }).has(ErrorCode::DuplicateNode));
    g = diamond();
    g.target = "s";
    EXPECT_TRUE(caught([&] { validate(g); }).has(ErrorCode::SourceEqualsTarget));
    g = diamond();
    g.edges.erase(g.edges.begin() + 2, g.edges.end());
    EXPECT_TRUE(caught([&] { validate(g); }).has(ErrorCode::NoSourceTargetPath));
    g = diamond();
    g.edge("a", "a", 0);
    EXPECT_TRUE(caught([&] { validate(g); }).has(ErrorCode::CycleDetected));
}

TEST(Graph, DeadEndsAreStripped) {
    GraphSpec g = diamond();
    g.nodes.push_back("dead");
    g.nodes.push_back("orphan");
    g.edge("a", "dead", 0).edge("orphan", "t", 0);
    Graph v = validate(g);
    EXPECT_EQ(v.node_count(), 4);
    EXPECT_EQ(v.edge_count(), 4);
    std::vector<char> keep(static_cast<std::size_t>(v.edge_count()), 1);
    keep[static_cast<std::size_t>(v.edge("a", "t"))] = 0;
    Graph r = restrict_edges(v, keep);
    EXPECT_EQ(joined(r.topo().ids()), "s-b-t");
}

TEST(Graph, ShortestAndHeaviest) {
    Graph g = validate(diamond());
    OptimalResult lo = shortest_path(g, "s");
    EXPECT_EQ(joined(lo.path.nodes), "s-b-t");
    EXPECT_EQ(lo.path.total_cost, Rational(3));
    EXPECT_EQ(lo.table.value[0], Rational(3));
    EXPECT_EQ(shortest_path(g, "a").path.total_cost, Rational(4));

    GraphSpec r = diamond();
    for (auto& e : r.edges) std::swap(e.cost, e.reward);
    OptimalResult hi = heaviest_path(validate(r), "s");
    EXPECT_EQ(joined(hi.path.nodes), "s-a-t");
    EXPECT_EQ(hi.path.total_reward, Rational(5));
}

TEST(Graph, TieBreakOnEqualShortestPaths) {
    GraphSpec spec;
    spec.nodes = {"s", "a", "b", "t"};
    spec.source = "s";
    spec.target = "t";
    spec.edge("s", "a", 1).edge("s", "b", 1).edge("a", "t", 1).edge("b", "t", 1);
    Graph g = validate(spec);
    EXPECT_EQ(joined(shortest_path(g, "s").path.nodes), "s-a-t");
    EXPECT_EQ(joined(shortest_path(g, "s", TieBreakPolicy::PreferLaterSuccessorId).path.nodes), "s-b-t");
}

TEST(Graph, EnumeratePaths) {
    EXPECT_EQ(enumerate_paths(generate("change").graph, "s", "t").size(), 3u);
    EXPECT_EQ(enumerate_paths(generate("one-fan").graph, "s", "t").size(), 2u);
    EXPECT_EQ(enumerate_paths(generate("counter", {{"n", "3"}}).graph, "s", "t").size(), 8u);
    auto paths = enumerate_paths(validate(diamond()), "s", "t");
    ASSERT_EQ(paths.size(), 2u);
    EXPECT_EQ(paths[0].total_cost + paths[1].total_cost, Rational(8));
    try {
        enumerate_paths(generate("counter", {{"n", "8"}}).graph, "s", "t", 10);
        FAIL() << "limit not enforced";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PathLimitExceeded);
    }
}

TEST(Graph, TieBreakNamesRoundTrip) {
    for (auto p : {TieBreakPolicy::MinTrueContinuation, TieBreakPolicy::MaxTrueContinuation,
                   TieBreakPolicy::PreferEarlierSuccessorId, TieBreakPolicy::PreferLaterSuccessorId,
                   TieBreakPolicy::MaxImmediateEdgeWeight})
        EXPECT_EQ(parse_tie_break(tie_break_name(p)), p);
    EXPECT_THROW(parse_tie_break("sideways"), Error);
}

TEST(Graph, WithWeightsKeepsStructure) {
    Graph g = validate(diamond());
    Graph h = g.with_costs(std::vector<Rational>(4, Rational(2)));
    EXPECT_EQ(h.topology(), g.topology());
    EXPECT_EQ(shortest_path(h, "s").path.total_cost, Rational(4));
    EXPECT_ANY_THROW(g.with_rewards({Rational(1)}));
}
