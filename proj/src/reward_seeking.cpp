#include "pbias/reward_seeking.hpp"

namespace pbias {

CostTable reward_table(const Graph& graph, const AgentSpec& agent) { return cost_table(graph, agent.rewards()); }

TraversalTrace simulate_rewards(const Graph& graph, const AgentSpec& agent) { return simulate(graph, agent.rewards()); }

Rational reward_ratio(const Graph& graph, const AgentSpec& agent) {
    TraversalTrace tr = simulate_rewards(graph, agent);
    if (tr.true_total.is_zero())
        throw Error(ErrorCode::ZeroCollectedReward, "agent collects no reward; ratio undefined");
    const Topology& t = graph.topo();
    return heaviest_path(graph, t.id(t.source())).table.value[t.source()] / tr.true_total;
}

} // namespace pbias
