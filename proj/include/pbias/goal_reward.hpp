#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pbias/agents.hpp"
#include "pbias/graph.hpp"

namespace pbias {

using EdgeKey = std::pair<NodeId, NodeId>;
using EdgeRewards = std::map<EdgeKey, Rational>;

struct PruneReport {
    std::optional<Graph> surviving; // empty when the source is abandoned
    std::vector<NodeId> abandoned_nodes;
    std::vector<EdgeKey> pruned_edges;
    Rational reward;
    CostTable table;        // sophisticated choices among surviving edges
    std::vector<char> live; // per node index of the input graph
};

// Reverse-topological pruning for a reward R at the target. An edge survives
// iff its head is live and b*c + C(head) <= R.
PruneReport prune(const Graph& graph, const Rational& b, const Rational& R,
                  TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
TraversalTrace traverse_with_reward(const Graph& graph, const Rational& b, const Rational& R,
                                    TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
bool traversable(const Graph& graph, const Rational& b, const Rational& R,
                 TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
// Throws NotFeasible when the agent does not start.
Path path_for_reward(const Graph& graph, const Rational& b, const Rational& R,
                     TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);

struct RewardInterval {
    Rational lo;
    std::optional<Rational> hi; // empty means unbounded
};

struct RewardIntervalSet {
    std::vector<RewardInterval> intervals;
    bool contains(const Rational& R) const;
};

inline constexpr std::size_t kDefaultBreakpointLimit = 1u << 20;

// All values b*c(u,v) + (cost of some v->t path), sorted and distinct.
// Throws PathLimitExceeded when the distinct set grows beyond limit.
std::vector<Rational> reward_breakpoints(const Graph& graph, const Rational& b,
                                         std::size_t limit = kDefaultBreakpointLimit);

RewardIntervalSet feasible_reward_set(const Graph& graph, const Rational& b,
                                      TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation,
                                      std::size_t limit = kDefaultBreakpointLimit);
// Single-threaded reference for the sweep above.
RewardIntervalSet feasible_reward_set_serial(const Graph& graph, const Rational& b,
                                             TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation,
                                             std::size_t limit = kDefaultBreakpointLimit);

Rational min_reward(const Graph& graph, const Rational& b, TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation,
                    std::size_t limit = kDefaultBreakpointLimit);

struct DeletionResult {
    Rational r_d;
    Path path;
};

DeletionResult min_reward_with_deletion(const Graph& graph, const Rational& b,
                                        std::size_t limit = kDefaultBreakpointLimit);
std::optional<Path> find_motivating_path(const Graph& graph, const Rational& b, const Rational& R);

struct InternalCheck {
    bool traversable = false;
    TraversalTrace trace;
    Rational collected; // edge rewards plus terminal reward along the path
};

// Sophisticated agent with rewards collected after each edge. At u the net
// perceived cost of (u,v) is b*c - r(u,v) + N(v), with N(t) = -terminal_reward;
// the agent moves only when that is <= 0.
InternalCheck check_internal_distribution(const Graph& graph, const Rational& b, const EdgeRewards& rewards,
                                          TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation,
                                          const Rational& terminal_reward = Rational());

struct InternalSearchResult {
    Rational r_i;         // smallest verified total
    Rational lower_bound; // no placement of smaller total exists
    EdgeRewards placement;
    Rational terminal_reward;
    std::size_t profiles = 0;
};

inline constexpr std::size_t kDefaultSearchBudget = 200000;
inline constexpr int kMaxSearchEdges = 12;

// Exact search over behaviour profiles with one LP per profile. Throws
// SearchBudgetExceeded above kMaxSearchEdges edges or budget profiles.
InternalSearchResult min_internal_reward_search(const Graph& graph, const Rational& b,
                                                TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation,
                                                std::size_t budget = kDefaultSearchBudget);

} // namespace pbias
