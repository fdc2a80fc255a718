#include "pbias/oracle.hpp"

#include <functional>
#include <map>

namespace pbias::oracle {

namespace {

struct Arc {
    std::string to;
    Rational w; // active weight
};

// Plain adjacency by id, built from the edge list.
using Adj = std::map<NodeId, std::vector<Arc>>;

Adj adjacency(const Graph& g, bool rewards) {
    GraphSpec spec = g.to_spec();
    Adj adj;
    for (const auto& id : spec.nodes) adj[id];
    for (const auto& e : spec.edges) adj[e.from].push_back({e.to, rewards ? e.reward : e.cost});
    return adj;
}

// Is candidate a strictly ahead of b in the policy order, given equal perceived
// values? cont_* are the agent's own continuation values, maximize flips them.
bool ahead(TieBreakPolicy tie, bool maximize, const NodeId& a, const Rational& cont_a, const Rational& w_a,
           const NodeId& b, const Rational& cont_b, const Rational& w_b) {
    switch (tie) {
    case TieBreakPolicy::MinTrueContinuation:
        if (cont_a != cont_b) return maximize ? cont_b < cont_a : cont_a < cont_b;
        return a < b;
    case TieBreakPolicy::MaxTrueContinuation:
        if (cont_a != cont_b) return maximize ? cont_a < cont_b : cont_b < cont_a;
        return a < b;
    case TieBreakPolicy::PreferEarlierSuccessorId:
        return a < b;
    case TieBreakPolicy::PreferLaterSuccessorId:
        return b < a;
    case TieBreakPolicy::MaxImmediateEdgeWeight:
        if (w_a != w_b) return w_b < w_a;
        return a < b;
    }
    return false;
}

struct Choice {
    NodeId succ;
    Rational value;
};

// Sophisticated fixed point by memoized recursion over ids.
std::map<NodeId, Choice> sophisticated(const Adj& adj, const NodeId& target, const Rational& bias, bool maximize,
                                       TieBreakPolicy tie) {
    std::map<NodeId, Choice> memo;
    std::function<const Choice&(const NodeId&)> go = [&](const NodeId& u) -> const Choice& {
        auto it = memo.find(u);
        if (it != memo.end()) return it->second;
        Choice best{"", Rational()};
        if (u != target) {
            bool have = false;
            Rational best_p, best_w, best_cont;
            for (const auto& a : adj.at(u)) {
                Rational cont = go(a.to).value;
                Rational p = bias * a.w + cont;
                bool take = !have || (maximize ? best_p < p : p < best_p) ||
                            (p == best_p && ahead(tie, maximize, a.to, cont, a.w, best.succ, best_cont, best_w));
                if (take) {
                    have = true;
                    best_p = p;
                    best_w = a.w;
                    best_cont = cont;
                    best.succ = a.to;
                    best.value = a.w + cont;
                }
            }
        }
        return memo.emplace(u, best).first->second;
    };
    for (const auto& [id, arcs] : adj) go(id);
    return memo;
}

// Optimum of the remaining weight to the target over every enumerated path.
std::map<NodeId, Rational> enumerated_optimum(const Graph& g, bool maximize) {
    std::map<NodeId, Rational> best;
    const NodeId& t = g.topo().id(g.topo().target());
    for (const auto& id : g.topo().ids()) {
        std::vector<Path> paths = enumerate_paths(g, id, t);
        bool have = false;
        Rational v;
        for (const auto& p : paths) {
            const Rational& x = maximize ? p.total_reward : p.total_cost;
            if (!have || (maximize ? v < x : x < v)) v = x;
            have = true;
        }
        best[id] = v;
    }
    return best;
}

Verdict fail(const NodeId& node, std::string detail) { return Verdict{false, node, std::move(detail)}; }

} // namespace

Verdict brute_force_equilibrium_check(const Graph& graph, const AgentSpec& agent, const CostTable& table) {
    const Topology& topo = graph.topo();
    const int n = topo.node_count();
    if (static_cast<int>(table.successor.size()) != n || static_cast<int>(table.value.size()) != n)
        return Verdict{false, std::nullopt, "table size does not match the graph"};
    const bool maximize = agent.objective == Objective::MaximizeReward;
    Adj adj = adjacency(graph, maximize);
    const NodeId& target = topo.id(topo.target());

    // Belief X(v) the rule adds to bias * w(u,v), and the bias applied.
    std::map<NodeId, Rational> belief;
    Rational bias = agent.b;
    bool belief_is_table = false;
    switch (agent.kind) {
    case AgentKind::Optimal:
        bias = Rational(1);
        belief = enumerated_optimum(graph, maximize);
        break;
    case AgentKind::Naive:
    case AgentKind::FutureBiased:
        belief = enumerated_optimum(graph, maximize);
        break;
    case AgentKind::Sophisticated:
        belief_is_table = true;
        break;
    case AgentKind::PartiallyNaive:
        for (auto& [id, c] : sophisticated(adj, target, agent.b_prime, maximize, agent.tie_break))
            belief[id] = c.value;
        break;
    }

    for (int u = 0; u < n; ++u) {
        const NodeId& uid = topo.id(u);
        int su = table.successor[static_cast<std::size_t>(u)];
        if (uid == target) {
            if (su != -1) return fail(uid, "target has a successor");
            if (!table.value[static_cast<std::size_t>(u)].is_zero()) return fail(uid, "target value is not 0");
            continue;
        }
        if (su < 0 || su >= n) return fail(uid, "missing successor");
        const NodeId& sid = topo.id(su);
        const Arc* chosen = nullptr;
        for (const auto& a : adj.at(uid))
            if (a.to == sid) chosen = &a;
        if (!chosen) return fail(uid, "successor " + sid + " is not an out-neighbour");

        auto value_of = [&](const NodeId& v) { return table.value[static_cast<std::size_t>(topo.index_of(v))]; };
        auto x_of = [&](const NodeId& v) { return belief_is_table ? value_of(v) : belief.at(v); };

        if (table.value[static_cast<std::size_t>(u)] != chosen->w + value_of(sid))
            return fail(uid, "value is not the true weight of the induced walk");

        Rational chosen_p = bias * chosen->w + x_of(sid);
        for (const auto& a : adj.at(uid)) {
            if (a.to == sid) continue;
            Rational p = bias * a.w + x_of(a.to);
            bool better = maximize ? chosen_p < p : p < chosen_p;
            if (better)
                return fail(uid, "successor " + a.to + " has perceived " + p.str() + ", better than " + sid + " at " +
                                     chosen_p.str());
            if (p == chosen_p &&
                ahead(agent.tie_break, maximize, a.to, value_of(a.to), a.w, sid, value_of(sid), chosen->w))
                return fail(uid, "tie between " + sid + " and " + a.to + " resolved against the policy");
        }
    }
    return Verdict{};
}

std::vector<char> feasibility_grid(const Graph& graph, const Rational& b, const std::vector<Rational>& rewards,
                                   TieBreakPolicy tie) {
    Adj adj = adjacency(graph, false);
    const NodeId source = graph.topo().id(graph.topo().source());
    const NodeId target = graph.topo().id(graph.topo().target());
    std::vector<char> out(rewards.size(), 0);
    const long long count = static_cast<long long>(rewards.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < count; ++i) {
        const Rational& R = rewards[static_cast<std::size_t>(i)];
        // Cost still to pay from each node, empty where the agent abandons.
        std::map<NodeId, std::optional<Rational>> memo;
        std::function<std::optional<Rational>(const NodeId&)> go = [&](const NodeId& u) -> std::optional<Rational> {
            auto it = memo.find(u);
            if (it != memo.end()) return it->second;
            std::optional<Rational> result;
            if (u == target) {
                result = Rational();
            } else {
                NodeId best;
                Rational best_p, best_w, best_cont;
                for (const auto& a : adj.at(u)) {
                    std::optional<Rational> cont = go(a.to);
                    if (!cont) continue;
                    Rational p = b * a.w + *cont;
                    if (R < p) continue; // perceived cost above the reward
                    if (!result || p < best_p ||
                        (p == best_p && ahead(tie, false, a.to, *cont, a.w, best, best_cont, best_w))) {
                        best = a.to;
                        best_p = p;
                        best_w = a.w;
                        best_cont = *cont;
                        result = a.w + *cont;
                    }
                }
            }
            memo.emplace(u, result);
            return result;
        };
        out[static_cast<std::size_t>(i)] = go(source).has_value() ? 1 : 0;
    }
    return out;
}

} // namespace pbias::oracle
