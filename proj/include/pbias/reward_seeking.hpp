#pragma once

#include "pbias/agents.hpp"
#include "pbias/graph.hpp"

namespace pbias {

// Reward model: edge rewards only, the agent maximizes what it collects and
// always travels to the target. The objective of `agent` is forced to rewards.
CostTable reward_table(const Graph& graph, const AgentSpec& agent);
TraversalTrace simulate_rewards(const Graph& graph, const AgentSpec& agent);
// R_o(s) over the collected reward. Throws ZeroCollectedReward.
Rational reward_ratio(const Graph& graph, const AgentSpec& agent);

} // namespace pbias
