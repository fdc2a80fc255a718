#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbias/goal_reward.hpp"
#include "pbias/graph.hpp"

namespace pbias {

struct FixtureSpec {
    std::string family;
    std::map<std::string, std::string> params; // values parsed as rationals or integers
};

struct Fixture {
    Graph graph;
    FixtureSpec spec;
    std::map<std::string, Rational> resolved; // every parameter actually used, defaults included
    std::optional<TieBreakPolicy> required_tie_break;
    std::string provenance;
};

struct FamilyInfo {
    std::string name;
    std::string parameters;  // with defaults
    std::string constraints;
    std::string description;
};

const std::vector<FamilyInfo>& fixture_families();

// Pure function of (family, params). Throws UnknownFamily or
// ParameterConstraintViolated naming the violated constraint.
Fixture generate(const FixtureSpec& spec);
Fixture generate(const std::string& family, const std::map<std::string, std::string>& params = {});

// Appends a chain of m edges of cost total/m from `from` to `to`, with fresh
// interior nodes named prefix + index.
void add_snake(GraphSpec& spec, const NodeId& from, const NodeId& to, const Rational& total, int m,
               const std::string& prefix);

// Prescribed placement for the internal-ratio family: b*y_n on (v_n, t) and
// D_{n-1} = b*y_{n-1} - p_{n-1} on the direct edge (v_{n-1}, v_n).
EdgeRewards internal_ratio_placement(const Rational& b, int n);
// Sequences of the internal-ratio construction, index 0..n.
struct InternalRatioTerms {
    std::vector<Rational> y, p, d; // p[0] and d[0] are unused (0)
};
InternalRatioTerms internal_ratio_terms(const Rational& b, int n);

struct RandomDagOptions {
    Rational density = Rational(1, 2);
    std::int64_t weight_min = 0;
    std::int64_t weight_max = 3;
    bool costs = true;   // fill cost field
    bool rewards = false; // fill reward field
};

// Deterministic layered DAG for a seed; every node lies on a source-target path.
Graph random_dag(std::uint64_t seed, int n, const RandomDagOptions& options = {});

} // namespace pbias
