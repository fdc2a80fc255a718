#pragma once

#include <optional>
#include <vector>

#include "pbias/goal_reward.hpp"
#include "pbias/graph.hpp"

namespace pbias {

enum class Device { PlanningPhase, ZeroEdge, IntervalDeletion };

std::string_view device_name(Device device);

struct DeletionCertificate {
    int k = 0;
    int j = 0;
    Rational interval_lo; // open interval (R* n^{-j-1}, R* n^{-j+1})
    Rational interval_hi;
    int removed = 0;
    int removal_bound = 0; // floor(2|E|/k)
    Rational guarantee_j;  // R* n^{-j}
    Rational guarantee_k;  // R* n^{-k}
    Rational optimal_after; // R_o(s) of the modified graph
    bool within_budget = false;
    bool meets_j = false;
    bool meets_k = false;
    bool interval_clear = false; // no off-path edge reward left inside the interval
};

struct PlanCertificate {
    Rational budget;          // B
    Rational budget_bound;    // (R_o - R_s)/(b-1)
    bool accepted = false;
    Rational plan_collected;  // reward collected on the augmented graph
    Rational net;             // plan_collected - B
    bool within_bound = false;
    std::size_t profiles = 0; // search only
};

struct ZeroEdgeCertificate {
    int nodes = 0;
    std::size_t candidates = 0;
    bool bound_holds = false; // b*n*reward_after >= R_o(s)
};

struct CommitmentResult {
    Device device = Device::IntervalDeletion;
    std::vector<EdgeKey> deleted_edges;
    std::vector<EdgeKey> added_edges;
    EdgeRewards placement;
    Rational optimal_reward; // R_o(s) = R*
    Rational reward_before;  // R_s(s)
    Rational reward_after;
    Path path_after;
    std::optional<DeletionCertificate> deletion;
    std::optional<PlanCertificate> plan;
    std::optional<ZeroEdgeCertificate> zero_edge;
};

CommitmentResult commit_by_deletion(const Graph& graph, const Rational& b, int k,
                                    TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);

CommitmentResult best_zero_edge(const Graph& graph, const Rational& b,
                                TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
// Single-threaded reference for the candidate search above.
CommitmentResult best_zero_edge_serial(const Graph& graph, const Rational& b,
                                       TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);

CommitmentResult evaluate_plan(const Graph& graph, const Rational& b, const EdgeRewards& placement,
                               TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);

CommitmentResult search_plan(const Graph& graph, const Rational& b,
                             TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation,
                             std::size_t budget = kDefaultSearchBudget);

} // namespace pbias
