#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbias/agents.hpp"
#include "pbias/graph.hpp"

// Brute-force verifiers. They use graph-core types and path enumeration only,
// never the decision engine they are meant to check.
namespace pbias::oracle {

struct Verdict {
    bool pass = true;
    std::optional<NodeId> node; // first violating node
    std::string detail;
};

// Checks every node of `table` against the agent's decision rule: the recorded
// successor must be optimal, ties must follow the agent's policy, and values
// must equal the true weight of the induced walk.
Verdict brute_force_equilibrium_check(const Graph& graph, const AgentSpec& agent, const CostTable& table);

// Traversability of the sophisticated agent with reward R at the target, for
// every sample, from an independent recursive model. Samples run in parallel.
std::vector<char> feasibility_grid(const Graph& graph, const Rational& b, const std::vector<Rational>& rewards,
                                   TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);

} // namespace pbias::oracle
