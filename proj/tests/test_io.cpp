#include <gtest/gtest.h>

#include "pbias/fixtures.hpp"
#include "pbias/io.hpp"

using namespace pbias;
using io::json;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

ErrorCode code_of(const json& j) {
    try {
        io::graph_from_json(j);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::PreconditionViolated;
}

} // namespace

TEST(Io, RationalForms) {
    EXPECT_EQ(io::to_json(R(-3, 4)), json("-3/4"));
    EXPECT_EQ(io::rational_from_json(json(5), "x"), R(5));
    EXPECT_EQ(io::rational_from_json(json("7/3"), "x"), R(7, 3));
    EXPECT_EQ(io::rational_from_json(json("0.25"), "x"), R(1, 4));
    EXPECT_THROW(io::rational_from_json(json(0.5), "x"), Error);
    EXPECT_THROW(io::rational_from_json(json("half"), "x"), Error);
}

TEST(Io, GraphRoundTrip) {
    for (const FamilyInfo& f : fixture_families()) {
        Graph g = generate(f.name).graph;
        json j = io::to_json(g);
        Graph back = io::graph_from_json(json::parse(j.dump()));
        EXPECT_EQ(io::to_json(back).dump(), j.dump()) << f.name;
        EXPECT_EQ(back.costs(), g.costs()) << f.name;
        EXPECT_EQ(back.rewards(), g.rewards()) << f.name;
    }
}

TEST(Io, GraphDefaultsAndErrors) {
    json j = json::parse(R"({"nodes":["s","t"],"edges":[{"from":"s","to":"t","cost":"3/2"}],"source":"s","target":"t"})");
    Graph g = io::graph_from_json(j);
    EXPECT_EQ(g.cost(0), R(3, 2));
    EXPECT_TRUE(g.reward(0).is_zero());
    EXPECT_EQ(code_of(json::array()), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of(json::parse(R"({"nodes":["s","t"],"source":"s","target":"t"})")), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of(json::parse(R"({"nodes":["s","t"],"edges":[{"from":"s","to":"t","cost":"-1"}],"source":"s","target":"t"})")),
              ErrorCode::NegativeWeight);
    EXPECT_EQ(code_of(json::parse(R"({"nodes":["s",3],"edges":[],"source":"s","target":"t"})")), ErrorCode::InvalidInput);
}

TEST(Io, Dot) {
    std::string dot = io::to_dot(generate("one-fan").graph);
    EXPECT_EQ(dot.rfind("digraph G {", 0), 0u);
    EXPECT_NE(dot.find("\"s\" -> \"v1\" [label=\"0\"];"), std::string::npos);
    EXPECT_NE(dot.find("\"v1\" -> \"t\" [label=\"3/2\"];"), std::string::npos);
    EXPECT_NE(dot.find("\"t\" [shape=doublecircle]"), std::string::npos);
    std::string rdot = io::to_dot(generate("fan").graph);
    EXPECT_NE(rdot.find("r="), std::string::npos);
}

TEST(Io, AgentRoundTrip) {
    AgentSpec a = AgentSpec::partially_naive(R(2), R(3, 2), TieBreakPolicy::PreferLaterSuccessorId).rewards();
    AgentSpec back = io::agent_from_json(io::to_json(a));
    EXPECT_EQ(back.kind, a.kind);
    EXPECT_EQ(back.b, a.b);
    EXPECT_EQ(back.b_prime, a.b_prime);
    EXPECT_EQ(back.tie_break, a.tie_break);
    EXPECT_EQ(back.objective, a.objective);
    EXPECT_EQ(io::agent_from_json(json::parse(R"({"kind":"optimal"})")).b, R(1));
    EXPECT_THROW(io::agent_from_json(json::parse(R"({"kind":"partially_naive","b":"2"})")), Error);
    EXPECT_THROW(io::agent_from_json(json::parse(R"({"kind":"wizard","b":"2"})")), Error);
}

TEST(Io, Placement) {
    json list = json::parse(R"([{"from":"s","to":"v","reward":"3"},{"from":"s","to":"v","reward":1}])");
    EdgeRewards p = io::placement_from_json(list);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.at({"s", "v"}), R(4));
    Rational terminal;
    json obj = json::parse(R"({"edges":[{"from":"v","to":"t","reward":"1/2"}],"terminal":"9"})");
    EdgeRewards q = io::placement_from_json(obj, &terminal);
    EXPECT_EQ(terminal, R(9));
    EXPECT_EQ(io::placement_from_json(io::to_json(q)), q);
    EXPECT_THROW(io::placement_from_json(obj), Error);
    try {
        io::placement_from_json(json::parse(R"([{"from":"s","to":"v","reward":"-1"}])"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeWeight);
    }
}

TEST(Io, ResultShapes) {
    Graph nm = generate("non-monotone").graph;
    EXPECT_EQ(io::to_json(feasible_reward_set(nm, R(2))).dump(), R"([["9","10"],["11",null]])");
    TraversalTrace tr = traverse_with_reward(nm, R(2), R(10));
    json t = io::to_json(tr);
    EXPECT_EQ(t["abandoned_at"], json("s"));
    json ok = io::to_json(traverse_with_reward(nm, R(2), R(9)));
    EXPECT_TRUE(ok["abandoned_at"].is_null());
    EXPECT_EQ(ok["path"].front(), json("s"));
    json table = io::to_json(cost_table(nm, AgentSpec::sophisticated(R(2))), nm);
    EXPECT_TRUE(table["t"]["successor"].is_null());
    json rep = io::to_json(prune(nm, R(2), R(10)), nm);
    EXPECT_FALSE(rep["source_live"].get<bool>());
    json cr = io::to_json(commit_by_deletion(generate("fan").graph, R(3, 2), 3));
    EXPECT_EQ(cr["device"], json("interval_deletion"));
    EXPECT_TRUE(cr["certificate"].contains("removal_bound"));
}
