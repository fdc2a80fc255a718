#include "pbias/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "engine.hpp"

namespace pbias {

GraphSpec& GraphSpec::edge(NodeId from, NodeId to, Rational cost, Rational reward) {
    edges.push_back(EdgeSpec{std::move(from), std::move(to), std::move(cost), std::move(reward)});
    return *this;
}

int Topology::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? -1 : it->second;
}

int Topology::find_edge(int u, int v) const {
    for (int e = out_begin(u); e < out_end(u); ++e)
        if (to(e) == v) return e;
    return -1;
}

std::shared_ptr<const Topology> Topology::build(std::vector<NodeId> ids,
                                                const std::vector<std::pair<int, int>>& edges,
                                                std::vector<int>* edge_order) {
    auto t = std::make_shared<Topology>();
    const int n = static_cast<int>(ids.size());
    t->ids_ = std::move(ids);
    t->index_.reserve(t->ids_.size());
    for (int i = 0; i < n; ++i) t->index_.emplace(t->ids_[i], i);

    std::vector<int> by_id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) by_id[i] = i;
    std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return t->ids_[a] < t->ids_[b]; });
    t->rank_.assign(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) t->rank_[by_id[r]] = r;

    std::vector<int> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (edges[a].first != edges[b].first) return edges[a].first < edges[b].first;
        return t->rank_[edges[a].second] < t->rank_[edges[b].second];
    });
    t->from_.resize(edges.size());
    t->to_.resize(edges.size());
    t->offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        t->from_[i] = edges[order[i]].first;
        t->to_[i] = edges[order[i]].second;
        ++t->offset_[edges[order[i]].first + 1];
    }
    for (int u = 0; u < n; ++u) t->offset_[u + 1] += t->offset_[u];
    if (edge_order) *edge_order = std::move(order);
    return t;
}

Graph::Graph(std::shared_ptr<const Topology> topo, std::vector<Rational> costs, std::vector<Rational> rewards)
    : topo_(std::move(topo)), cost_(std::move(costs)), reward_(std::move(rewards)) {
    if (cost_.size() != static_cast<std::size_t>(topo_->edge_count()) ||
        reward_.size() != static_cast<std::size_t>(topo_->edge_count()))
        throw Error(ErrorCode::InvalidInput, "weight vector size does not match edge count");
}

Graph Graph::with_costs(std::vector<Rational> costs) const { return Graph(topo_, std::move(costs), reward_); }

Graph Graph::with_rewards(std::vector<Rational> rewards) const { return Graph(topo_, cost_, std::move(rewards)); }

int Graph::node(std::string_view id) const {
    int u = topo_->index_of(id);
    if (u < 0) throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(id) + "'");
    return u;
}

int Graph::edge(std::string_view from, std::string_view to) const {
    int u = topo_->index_of(from), v = topo_->index_of(to);
    int e = (u < 0 || v < 0) ? -1 : topo_->find_edge(u, v);
    if (e < 0)
        throw Error(ErrorCode::UnknownEdge, "unknown edge '" + std::string(from) + "' -> '" + std::string(to) + "'");
    return e;
}

Path Graph::make_path(const std::vector<int>& nodes) const {
    Path p;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        p.nodes.push_back(topo_->id(nodes[i]));
        if (i + 1 < nodes.size()) {
            int e = topo_->find_edge(nodes[i], nodes[i + 1]);
            if (e < 0) throw Error(ErrorCode::UnknownEdge, "path step is not an edge");
            p.total_cost += cost_[e];
            p.total_reward += reward_[e];
        }
    }
    return p;
}

GraphSpec Graph::to_spec() const {
    GraphSpec s;
    s.nodes = topo_->ids();
    for (int e = 0; e < edge_count(); ++e)
        s.edges.push_back(EdgeSpec{topo_->id(topo_->from(e)), topo_->id(topo_->to(e)), cost_[e], reward_[e]});
    s.source = topo_->id(topo_->source());
    s.target = topo_->id(topo_->target());
    return s;
}

Graph validate(const GraphSpec& spec) {
    std::vector<Violation> bad;
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
        if (!index.emplace(spec.nodes[i], static_cast<int>(i)).second)
            bad.push_back({ErrorCode::DuplicateNode, "node '" + spec.nodes[i] + "' listed twice"});
    }
    const bool has_s = !spec.source.empty() && index.count(spec.source);
    const bool has_t = !spec.target.empty() && index.count(spec.target);
    if (!has_s) bad.push_back({ErrorCode::MissingSourceOrTarget, "source '" + spec.source + "' is not a node"});
    if (!has_t) bad.push_back({ErrorCode::MissingSourceOrTarget, "target '" + spec.target + "' is not a node"});
    if (has_s && has_t && spec.source == spec.target)
        bad.push_back({ErrorCode::SourceEqualsTarget, "source and target are both '" + spec.source + "'"});

    const int n = static_cast<int>(spec.nodes.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> spec_edge; // spec index for each kept edge
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
        const EdgeSpec& e = spec.edges[i];
        std::string label = "'" + e.from + "' -> '" + e.to + "'";
        auto fu = index.find(e.from), fv = index.find(e.to);
        if (fu == index.end() || fv == index.end()) {
            bad.push_back({ErrorCode::UnknownEndpoint, "edge " + label + " references an unknown node"});
            continue;
        }
        if (e.cost.sign() < 0) bad.push_back({ErrorCode::NegativeWeight, "edge " + label + " has cost " + e.cost.str()});
        if (e.reward.sign() < 0)
            bad.push_back({ErrorCode::NegativeWeight, "edge " + label + " has reward " + e.reward.str()});
        if (fu->second == fv->second) {
            bad.push_back({ErrorCode::CycleDetected, "self-loop on '" + e.from + "'"});
            continue;
        }
        if (!seen.insert({fu->second, fv->second}).second) {
            bad.push_back({ErrorCode::DuplicateEdge, "edge " + label + " appears more than once"});
            continue;
        }
        edges.emplace_back(fu->second, fv->second);
        spec_edge.push_back(static_cast<int>(i));
    }

    // Kahn's algorithm, smallest id first.
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        out[u].push_back(v);
        in[v].push_back(u);
        ++indeg[v];
    }
    auto by_id = [&](int a, int b) { return spec.nodes[a] > spec.nodes[b]; };
    std::priority_queue<int, std::vector<int>, decltype(by_id)> ready(by_id);
    for (int u = 0; u < n; ++u)
        if (indeg[u] == 0) ready.push(u);
    std::vector<int> order;
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int v : out[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) != n) {
        std::string stuck;
        for (int u = 0; u < n; ++u)
            if (indeg[u] > 0) stuck += (stuck.empty() ? "" : ", ") + spec.nodes[u];
        bad.push_back({ErrorCode::CycleDetected, "cycle through {" + stuck + "}"});
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));

    const int s = index.at(spec.source), t = index.at(spec.target);
    std::vector<char> fwd(static_cast<std::size_t>(n), 0), bwd(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{s};
    fwd[s] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : out[u])
            if (!fwd[v]) fwd[v] = 1, stack.push_back(v);
    }
    stack = {t};
    bwd[t] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : in[u])
            if (!bwd[v]) bwd[v] = 1, stack.push_back(v);
    }
    if (!fwd[t])
        throw ValidationError({{ErrorCode::NoSourceTargetPath, "no path from '" + spec.source + "' to '" + spec.target + "'"}});

    std::vector<int> new_index(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> ids;
    for (int u : order) {
        if (fwd[u] && bwd[u]) {
            new_index[u] = static_cast<int>(ids.size());
            ids.push_back(spec.nodes[u]);
        }
    }
    std::vector<std::pair<int, int>> kept;
    std::vector<int> kept_spec;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (new_index[u] >= 0 && new_index[v] >= 0) {
            kept.emplace_back(new_index[u], new_index[v]);
            kept_spec.push_back(spec_edge[i]);
        }
    }
    std::vector<int> perm;
    auto topo = Topology::build(std::move(ids), kept, &perm);
    std::vector<Rational> costs(perm.size()), rewards(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const EdgeSpec& e = spec.edges[kept_spec[perm[i]]];
        costs[i] = e.cost;
        rewards[i] = e.reward;
    }
    return Graph(std::move(topo), std::move(costs), std::move(rewards));
}

Graph validate(const Graph& graph) { return validate(graph.to_spec()); }

Graph restrict_edges(const Graph& graph, const std::vector<char>& keep) {
    GraphSpec s = graph.to_spec();
    std::vector<EdgeSpec> edges;
    for (std::size_t e = 0; e < s.edges.size(); ++e)
        if (keep[e]) edges.push_back(s.edges[e]);
    s.edges = std::move(edges);
    return validate(s);
}

std::vector<NodeId> topological_order(const Graph& graph) { return graph.topo().ids(); }

std::string_view tie_break_name(TieBreakPolicy policy) {
    switch (policy) {
    case TieBreakPolicy::MinTrueContinuation: return "min_true_continuation";
    case TieBreakPolicy::MaxTrueContinuation: return "max_true_continuation";
    case TieBreakPolicy::PreferEarlierSuccessorId: return "prefer_earlier_successor_id";
    case TieBreakPolicy::PreferLaterSuccessorId: return "prefer_later_successor_id";
    case TieBreakPolicy::MaxImmediateEdgeWeight: return "max_immediate_edge_weight";
    }
    return "?";
}

TieBreakPolicy parse_tie_break(std::string_view name) {
    static const std::map<std::string, TieBreakPolicy, std::less<>> names = {
        {"min_true_continuation", TieBreakPolicy::MinTrueContinuation},
        {"MinTrueContinuation", TieBreakPolicy::MinTrueContinuation},
        {"max_true_continuation", TieBreakPolicy::MaxTrueContinuation},
        {"MaxTrueContinuation", TieBreakPolicy::MaxTrueContinuation},
        {"prefer_earlier_successor_id", TieBreakPolicy::PreferEarlierSuccessorId},
        {"PreferEarlierSuccessorId", TieBreakPolicy::PreferEarlierSuccessorId},
        {"prefer_later_successor_id", TieBreakPolicy::PreferLaterSuccessorId},
        {"PreferLaterSuccessorId", TieBreakPolicy::PreferLaterSuccessorId},
        {"max_immediate_edge_weight", TieBreakPolicy::MaxImmediateEdgeWeight},
        {"MaxImmediateEdgeWeight", TieBreakPolicy::MaxImmediateEdgeWeight},
    };
    auto it = names.find(name);
    if (it == names.end()) throw Error(ErrorCode::InvalidInput, "unknown tie-break policy '" + std::string(name) + "'");
    return it->second;
}

std::vector<int> follow(const CostTable& table, int from) {
    std::vector<int> nodes{from};
    while (table.successor[nodes.back()] >= 0) nodes.push_back(table.successor[nodes.back()]);
    return nodes;
}

namespace {

OptimalResult optimal(const Graph& graph, std::string_view from, TieBreakPolicy tie, bool reward) {
    OptimalResult r;
    detail::backward_pass(graph.topo(), reward ? graph.rewards() : graph.costs(), Rational(1),
                          reward ? detail::Sense::Max : detail::Sense::Min, tie, nullptr, r.table);
    r.path = graph.make_path(follow(r.table, graph.node(from)));
    return r;
}

} // namespace

OptimalResult shortest_path(const Graph& graph, std::string_view from, TieBreakPolicy tie) {
    return optimal(graph, from, tie, false);
}

OptimalResult heaviest_path(const Graph& graph, std::string_view from, TieBreakPolicy tie) {
    return optimal(graph, from, tie, true);
}

std::vector<Path> enumerate_paths(const Graph& graph, std::string_view from, std::string_view to, std::size_t limit) {
    const Topology& t = graph.topo();
    const int a = graph.node(from), z = graph.node(to);
    std::vector<Path> paths;
    std::vector<int> stack{a};
    std::function<void(int)> dfs = [&](int u) {
        if (u == z) {
            if (paths.size() >= limit)
                throw Error(ErrorCode::PathLimitExceeded,
                            "more than " + std::to_string(limit) + " paths from '" + std::string(from) + "'");
            paths.push_back(graph.make_path(stack));
            return;
        }
        for (int e = t.out_begin(u); e < t.out_end(u); ++e) {
            stack.push_back(t.to(e));
            dfs(t.to(e));
            stack.pop_back();
        }
    };
    dfs(a);
    return paths;
}

} // namespace pbias
