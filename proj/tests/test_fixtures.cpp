#include <gtest/gtest.h>

#include "pbias/fixtures.hpp"
#include "pbias/io.hpp"

using namespace pbias;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

ErrorCode code_of(const std::string& family, const std::map<std::string, std::string>& params) {
    try {
        generate(family, params);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::PreconditionViolated;
}

} // namespace

TEST(Fixtures, EveryFamilyGeneratesWithDefaults) {
    for (const FamilyInfo& f : fixture_families()) {
        Fixture x = generate(f.name);
        EXPECT_EQ(x.spec.family, f.name);
        EXPECT_FALSE(x.provenance.empty()) << f.name;
        EXPECT_NO_THROW(validate(x.graph)) << f.name;
        EXPECT_FALSE(f.description.empty()) << f.name;
    }
    EXPECT_GE(fixture_families().size(), 20u);
}

TEST(Fixtures, Shapes) {
    struct Row {
        const char* family;
        int nodes, edges;
    };
    for (const Row& r : {Row{"one-fan", 3, 3}, Row{"two-fan", 4, 5}, Row{"change", 5, 6}, Row{"non-monotone", 4, 4},
                         Row{"min-inf-reward-g1", 2, 1}, Row{"fan", 6, 9}}) {
        Graph g = generate(r.family).graph;
        EXPECT_EQ(g.node_count(), r.nodes) << r.family;
        EXPECT_EQ(g.edge_count(), r.edges) << r.family;
    }
}

TEST(Fixtures, Deterministic) {
    for (const FamilyInfo& f : fixture_families()) {
        auto a = io::to_json(generate(f.name).graph).dump();
        auto b = io::to_json(generate(f.name).graph).dump();
        EXPECT_EQ(a, b) << f.name;
    }
}

TEST(Fixtures, ResolvedParameters) {
    Fixture c = generate("counter", {{"c", "8/5"}});
    EXPECT_EQ(c.resolved.at("b"), R(13, 8));
    EXPECT_EQ(c.resolved.at("n"), R(3));
    Fixture r = generate("rtight", {{"m", "auto"}});
    // ceil(b(1-eps)/eps) at b=2, eps=1/100
    EXPECT_EQ(r.resolved.at("m"), R(198));
    Fixture two = generate("two-fan", {{"c", "7/5"}, {"b", "3/2"}});
    EXPECT_EQ(two.graph.cost(two.graph.edge("v2", "t")), R(49, 25));
}

TEST(Fixtures, ConstraintViolations) {
    EXPECT_EQ(code_of("two-fan", {{"c", "3/2"}, {"b", "3"}}), ErrorCode::ParameterConstraintViolated);
    EXPECT_EQ(code_of("one-fan", {{"c", "3"}, {"b", "2"}}), ErrorCode::ParameterConstraintViolated);
    EXPECT_EQ(code_of("sophnaive", {{"eps", "1/2"}}), ErrorCode::ParameterConstraintViolated);
    EXPECT_EQ(code_of("future", {{"b", "2"}}), ErrorCode::ParameterConstraintViolated);
    EXPECT_EQ(code_of("planning-bad", {{"b", "3/2"}}), ErrorCode::ParameterConstraintViolated);
    EXPECT_EQ(code_of("optpart", {{"b_prime", "3"}}), ErrorCode::ParameterConstraintViolated);
    EXPECT_EQ(code_of("no-such-family", {}), ErrorCode::UnknownFamily);
    EXPECT_EQ(code_of("change", {{"x", "1"}}), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of("fan", {{"c", "abc"}}), ErrorCode::InvalidInput);
}

TEST(Fixtures, Snake) {
    GraphSpec spec;
    spec.nodes = {"s", "t"};
    spec.source = "s";
    spec.target = "t";
    add_snake(spec, "s", "t", R(3), 4, "z");
    Graph g = validate(spec);
    EXPECT_EQ(g.node_count(), 5);
    EXPECT_EQ(g.edge_count(), 4);
    for (int e = 0; e < g.edge_count(); ++e) EXPECT_EQ(g.cost(e), R(3, 4));
    Graph rt = generate("rtight", {{"m", "3"}}).graph;
    int snake_nodes = 0;
    for (const auto& id : rt.topo().ids()) snake_nodes += id.find("_z") != std::string::npos;
    EXPECT_EQ(snake_nodes, 5 * 2);
}

TEST(Fixtures, RandomDagIsDeterministicAndValid) {
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        int n = 2 + static_cast<int>(seed % 15);
        Graph g = random_dag(seed, n);
        ASSERT_NO_THROW(validate(g)) << seed;
        EXPECT_EQ(g.node_count(), n) << seed;
        EXPECT_EQ(g.topo().id(0), "s");
        EXPECT_EQ(g.topo().id(n - 1), "t");
        for (int e = 0; e < g.edge_count(); ++e) {
            EXPECT_LE(R(0), g.cost(e));
            EXPECT_LE(g.cost(e), R(3));
            EXPECT_TRUE(g.reward(e).is_zero());
        }
    }
    EXPECT_EQ(io::to_json(random_dag(42, 9)).dump(), io::to_json(random_dag(42, 9)).dump());
    EXPECT_NE(io::to_json(random_dag(42, 9)).dump(), io::to_json(random_dag(43, 9)).dump());
}
