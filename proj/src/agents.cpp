#include "pbias/agents.hpp"

#include <map>

#include "engine.hpp"

namespace pbias {

AgentSpec AgentSpec::optimal(TieBreakPolicy tie) {
    AgentSpec a;
    a.kind = AgentKind::Optimal;
    a.b = Rational(1);
    a.tie_break = tie;
    return a;
}

AgentSpec AgentSpec::naive(Rational b, TieBreakPolicy tie) {
    AgentSpec a;
    a.kind = AgentKind::Naive;
    a.b = std::move(b);
    a.tie_break = tie;
    return a;
}

AgentSpec AgentSpec::sophisticated(Rational b, TieBreakPolicy tie) {
    AgentSpec a;
    a.kind = AgentKind::Sophisticated;
    a.b = std::move(b);
    a.tie_break = tie;
    return a;
}

AgentSpec AgentSpec::partially_naive(Rational b, Rational b_prime, TieBreakPolicy tie) {
    AgentSpec a;
    a.kind = AgentKind::PartiallyNaive;
    a.b = std::move(b);
    a.b_prime = std::move(b_prime);
    a.tie_break = tie;
    return a;
}

AgentSpec AgentSpec::future_biased(Rational b, TieBreakPolicy tie) {
    AgentSpec a;
    a.kind = AgentKind::FutureBiased;
    a.b = std::move(b);
    a.tie_break = tie;
    return a;
}

AgentSpec AgentSpec::rewards() const {
    AgentSpec a = *this;
    a.objective = Objective::MaximizeReward;
    return a;
}

std::string_view agent_kind_name(AgentKind kind) {
    switch (kind) {
    case AgentKind::Optimal: return "optimal";
    case AgentKind::Naive: return "naive";
    case AgentKind::Sophisticated: return "sophisticated";
    case AgentKind::PartiallyNaive: return "partially_naive";
    case AgentKind::FutureBiased: return "future_biased";
    }
    return "?";
}

AgentKind parse_agent_kind(std::string_view name) {
    static const std::map<std::string, AgentKind, std::less<>> names = {
        {"optimal", AgentKind::Optimal},
        {"naive", AgentKind::Naive},
        {"sophisticated", AgentKind::Sophisticated},
        {"partially_naive", AgentKind::PartiallyNaive},
        {"partially-naive", AgentKind::PartiallyNaive},
        {"future_biased", AgentKind::FutureBiased},
        {"future-biased", AgentKind::FutureBiased},
    };
    auto it = names.find(name);
    if (it == names.end()) throw Error(ErrorCode::InvalidInput, "unknown agent kind '" + std::string(name) + "'");
    return it->second;
}

void check_agent(const AgentSpec& agent) {
    const Rational one(1);
    switch (agent.kind) {
    case AgentKind::Optimal:
        return;
    case AgentKind::Naive:
    case AgentKind::Sophisticated:
        if (agent.b < one)
            throw Error(ErrorCode::BiasOutOfRange,
                        std::string(agent_kind_name(agent.kind)) + " agent needs b >= 1, got " + agent.b.str());
        return;
    case AgentKind::PartiallyNaive:
        if (agent.b < one || agent.b_prime < one)
            throw Error(ErrorCode::BiasOutOfRange, "partially naive agent needs b >= 1 and b' >= 1, got b=" +
                                                       agent.b.str() + ", b'=" + agent.b_prime.str());
        return;
    case AgentKind::FutureBiased:
        if (agent.b.sign() <= 0 || !(agent.b < one))
            throw Error(ErrorCode::BiasOutOfRange, "future-biased agent needs 0 < b < 1, got " + agent.b.str());
        return;
    }
}

CostTable cost_table(const Graph& graph, const AgentSpec& agent) {
    check_agent(agent);
    CostTable out;
    detail::AgentScratch scratch;
    const auto& w = agent.objective == Objective::MaximizeReward ? graph.rewards() : graph.costs();
    detail::agent_pass(graph.topo(), w, agent, out, scratch);
    return out;
}

TraversalTrace trace_from_table(const Graph& graph, const CostTable& table, bool reward_objective) {
    const Topology& t = graph.topo();
    TraversalTrace tr;
    std::vector<int> nodes = follow(table, t.source());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        tr.steps.push_back(TraceStep{t.id(nodes[i]), t.id(nodes[i + 1]), table.perceived[nodes[i]]});
    tr.path = graph.make_path(nodes);
    tr.true_total = reward_objective ? tr.path.total_reward : tr.path.total_cost;
    return tr;
}

TraversalTrace simulate(const Graph& graph, const AgentSpec& agent) {
    CostTable table = cost_table(graph, agent);
    return trace_from_table(graph, table, agent.objective == Objective::MaximizeReward);
}

Rational cost_ratio(const Graph& graph, const AgentSpec& agent) {
    TraversalTrace tr = simulate(graph, agent);
    Rational opt = shortest_path(graph, graph.topo().id(graph.topo().source())).table.value[0];
    if (opt.is_zero()) throw Error(ErrorCode::ZeroOptimalCost, "optimal cost is 0; ratio undefined");
    return tr.true_total / opt;
}

} // namespace pbias
