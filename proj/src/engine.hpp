#pragma once

#include <vector>

#include "pbias/agents.hpp"
#include "pbias/graph.hpp"

// Decision core shared by the optimal, biased, reward-at-goal and
// reward-seeking computations.
namespace pbias::detail {

enum class Sense { Min, Max };

inline bool strictly_better(Sense s, const Rational& a, const Rational& b) {
    return s == Sense::Min ? a < b : b < a;
}

struct Option {
    int succ = -1;
    const Rational* primary = nullptr; // perceived value of the option
    const Rational* cont = nullptr;    // realized continuation value at succ
    const Rational* weight = nullptr;  // active weight of the edge
};

// True when option a beats option b at the same node.
bool prefer(const Topology& topo, Sense sense, TieBreakPolicy tie, const Option& a, const Option& b);

// Reverse-topological pass over all nodes:
//   S(u) = arg-opt over (u,v) of  bias * w(u,v) + X(v)
//   value(u) = w(u,S(u)) + value(S(u))
// where X is `belief` if given, otherwise the table being built.
void backward_pass(const Topology& topo, const std::vector<Rational>& w, const Rational& bias, Sense sense,
                   TieBreakPolicy tie, const std::vector<Rational>* belief, CostTable& out);

struct AgentScratch {
    CostTable belief;
};

// Table for any agent kind over the active weights w, reusing buffers.
void agent_pass(const Topology& topo, const std::vector<Rational>& w, const AgentSpec& agent, CostTable& out,
                AgentScratch& scratch);

// b * cost per edge, computed once per (graph, b) and shared by the passes below.
std::vector<Rational> scaled_costs(const std::vector<Rational>& cost, const Rational& b);
void scaled_costs(const std::vector<Rational>& cost, const Rational& b, std::vector<Rational>& out);

// Reward-at-goal pruning pass. Returns whether the source stays live.
bool prune_pass(const Topology& topo, const std::vector<Rational>& cost, const std::vector<Rational>& scaled,
                const Rational& R, TieBreakPolicy tie, CostTable& out, std::vector<char>& live);

// Greedy motivating-path pass: among successors with b*c + T(v) <= R keep the
// one with the least true cost c + T(v). Returns whether the source stays live.
bool greedy_pass(const Topology& topo, const std::vector<Rational>& cost, const std::vector<Rational>& scaled,
                 const Rational& R, CostTable& out, std::vector<char>& live);

// Sorted distinct v->t path costs for every node v.
void path_cost_sets(const Topology& topo, const std::vector<Rational>& cost, std::size_t limit,
                    std::vector<std::vector<Rational>>& out);

} // namespace pbias::detail
