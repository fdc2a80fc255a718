#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pbias/graph.hpp"

namespace pbias {

enum class AgentKind { Optimal, Naive, Sophisticated, PartiallyNaive, FutureBiased };
enum class Objective { MinimizeCost, MaximizeReward };

struct AgentSpec {
    AgentKind kind = AgentKind::Sophisticated;
    Rational b = Rational(2);
    Rational b_prime = Rational(1); // believed bias, PartiallyNaive only
    TieBreakPolicy tie_break = TieBreakPolicy::MinTrueContinuation;
    Objective objective = Objective::MinimizeCost;

    static AgentSpec optimal(TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
    static AgentSpec naive(Rational b, TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
    static AgentSpec sophisticated(Rational b, TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
    static AgentSpec partially_naive(Rational b, Rational b_prime,
                                     TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
    static AgentSpec future_biased(Rational b, TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
    AgentSpec rewards() const; // same agent, reward objective
};

std::string_view agent_kind_name(AgentKind kind);
AgentKind parse_agent_kind(std::string_view name);

// Throws BiasOutOfRange when the bias does not suit the kind.
void check_agent(const AgentSpec& agent);

struct TraceStep {
    NodeId node;
    NodeId successor;
    Rational perceived;
};

struct TraversalTrace {
    Path path;
    std::vector<TraceStep> steps;
    Rational true_total;
    std::optional<NodeId> abandoned_at;

    bool reached_target() const { return !abandoned_at.has_value(); }
};

// Table for the agent's decision rule under its objective (costs or rewards).
CostTable cost_table(const Graph& graph, const AgentSpec& agent);
TraversalTrace simulate(const Graph& graph, const AgentSpec& agent);
// Agent's true cost over the optimal cost. Throws ZeroOptimalCost.
Rational cost_ratio(const Graph& graph, const AgentSpec& agent);

// Builds the trace of a successor table walk from the source.
TraversalTrace trace_from_table(const Graph& graph, const CostTable& table, bool reward_objective);

} // namespace pbias
