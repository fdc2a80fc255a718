#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pbias/errors.hpp"
#include "pbias/rational.hpp"

namespace pbias {

using NodeId = std::string;

struct EdgeSpec {
    NodeId from;
    NodeId to;
    Rational cost;
    Rational reward;
};

// Unvalidated graph description, as read from JSON or built by hand.
struct GraphSpec {
    std::vector<NodeId> nodes;
    std::vector<EdgeSpec> edges;
    NodeId source;
    NodeId target;

    GraphSpec& edge(NodeId from, NodeId to, Rational cost, Rational reward = Rational());
};

// Shared, immutable structure of a validated graph. Node index equals the
// position in the deterministic topological order, so source is 0 and target
// is node_count()-1. Out-edges of a node are contiguous and sorted by successor id.
class Topology {
public:
    int node_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(from_.size()); }
    int source() const { return 0; }
    int target() const { return node_count() - 1; }

    const NodeId& id(int u) const { return ids_[static_cast<std::size_t>(u)]; }
    const std::vector<NodeId>& ids() const { return ids_; }
    int index_of(std::string_view id) const; // -1 when absent
    // Position of the node in lexicographic id order.
    int rank(int u) const { return rank_[static_cast<std::size_t>(u)]; }

    int from(int e) const { return from_[static_cast<std::size_t>(e)]; }
    int to(int e) const { return to_[static_cast<std::size_t>(e)]; }
    int out_begin(int u) const { return offset_[static_cast<std::size_t>(u)]; }
    int out_end(int u) const { return offset_[static_cast<std::size_t>(u) + 1]; }
    int out_degree(int u) const { return out_end(u) - out_begin(u); }
    int find_edge(int u, int v) const; // -1 when absent

    // Builds from already-checked data. Edges are (from, to) index pairs into ids;
    // ids must be in a topological order. Returns the CSR permutation applied.
    static std::shared_ptr<const Topology> build(std::vector<NodeId> ids,
                                                 const std::vector<std::pair<int, int>>& edges,
                                                 std::vector<int>* edge_order);

private:
    std::vector<NodeId> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> rank_;
    std::vector<int> from_, to_, offset_;
};

struct Path {
    std::vector<NodeId> nodes;
    Rational total_cost;
    Rational total_reward;
};

class Graph {
public:
    Graph(std::shared_ptr<const Topology> topo, std::vector<Rational> costs, std::vector<Rational> rewards);

    const Topology& topo() const { return *topo_; }
    const std::shared_ptr<const Topology>& topology() const { return topo_; }
    int node_count() const { return topo_->node_count(); }
    int edge_count() const { return topo_->edge_count(); }
    const Rational& cost(int e) const { return cost_[static_cast<std::size_t>(e)]; }
    const Rational& reward(int e) const { return reward_[static_cast<std::size_t>(e)]; }
    const std::vector<Rational>& costs() const { return cost_; }
    const std::vector<Rational>& rewards() const { return reward_; }

    // Same structure, new weights. Sizes must equal edge_count().
    Graph with_costs(std::vector<Rational> costs) const;
    Graph with_rewards(std::vector<Rational> rewards) const;

    int node(std::string_view id) const;                         // throws UnknownNode
    int edge(std::string_view from, std::string_view to) const;  // throws UnknownEdge
    Path make_path(const std::vector<int>& nodes) const;
    GraphSpec to_spec() const;

private:
    std::shared_ptr<const Topology> topo_;
    std::vector<Rational> cost_;
    std::vector<Rational> reward_;
};

// Checks every invariant and returns the graph restricted to nodes lying on
// some source-target path. Throws ValidationError listing all violations.
Graph validate(const GraphSpec& spec);
Graph validate(const Graph& graph);
// Keeps only edges with keep[e] != 0, then validates (dead ends are stripped).
Graph restrict_edges(const Graph& graph, const std::vector<char>& keep);

std::vector<NodeId> topological_order(const Graph& graph);

enum class TieBreakPolicy {
    MinTrueContinuation,
    MaxTrueContinuation,
    PreferEarlierSuccessorId,
    PreferLaterSuccessorId,
    MaxImmediateEdgeWeight,
};

std::string_view tie_break_name(TieBreakPolicy policy);
TieBreakPolicy parse_tie_break(std::string_view name); // throws InvalidInput

// Per-node table produced by every decision rule. successor is -1 at the
// target; perceived holds the value of the chosen option as seen at the node.
struct CostTable {
    std::vector<Rational> value;
    std::vector<int> successor;
    std::vector<Rational> perceived;
};

struct OptimalResult {
    CostTable table;
    Path path;
};

OptimalResult shortest_path(const Graph& graph, std::string_view from,
                            TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
OptimalResult heaviest_path(const Graph& graph, std::string_view from,
                            TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);

inline constexpr std::size_t kDefaultPathLimit = 200000;

std::vector<Path> enumerate_paths(const Graph& graph, std::string_view from, std::string_view to,
                                  std::size_t limit = kDefaultPathLimit);

// Walks a successor table from a node to the target.
std::vector<int> follow(const CostTable& table, int from);

} // namespace pbias
