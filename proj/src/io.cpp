#include "pbias/io.hpp"

#include <sstream>
#include <stdexcept>

namespace pbias::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) bad(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) bad(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

json edge_key(const EdgeKey& k) { return json::array({k.first, k.second}); }

json node_list(const std::vector<NodeId>& ids) {
    json a = json::array();
    for (const auto& id : ids) a.push_back(id);
    return a;
}

json edge_list(const std::vector<EdgeKey>& keys) {
    json a = json::array();
    for (const auto& k : keys) a.push_back(edge_key(k));
    return a;
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad(what + ": not a rational: \"" + j.get<std::string>() + "\"");
        }
    }
    bad(what + ": expected an integer or a \"p/q\" string");
}

GraphSpec graph_spec_from_json(const json& j) {
    if (!j.is_object()) bad("graph: expected a JSON object");
    GraphSpec g;
    const json& nodes = field(j, "nodes", "graph");
    if (!nodes.is_array()) bad("graph: \"nodes\" must be an array");
    for (const auto& n : nodes) {
        if (!n.is_string()) bad("graph: node ids must be strings");
        g.nodes.push_back(n.get<std::string>());
    }
    const json& edges = field(j, "edges", "graph");
    if (!edges.is_array()) bad("graph: \"edges\" must be an array");
    std::size_t i = 0;
    for (const auto& e : edges) {
        std::string where = "graph edge " + std::to_string(i++);
        EdgeSpec spec;
        spec.from = string_field(e, "from", where);
        spec.to = string_field(e, "to", where);
        spec.cost = e.contains("cost") ? rational_from_json(e.at("cost"), where + " cost") : Rational();
        spec.reward = e.contains("reward") ? rational_from_json(e.at("reward"), where + " reward") : Rational();
        g.edges.push_back(std::move(spec));
    }
    if (j.contains("source")) g.source = string_field(j, "source", "graph");
    if (j.contains("target")) g.target = string_field(j, "target", "graph");
    return g;
}

Graph graph_from_json(const json& j) { return validate(graph_spec_from_json(j)); }

json to_json(const Graph& g) {
    GraphSpec spec = g.to_spec();
    json edges = json::array();
    for (const auto& e : spec.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"cost", to_json(e.cost)}, {"reward", to_json(e.reward)}});
    return {{"nodes", node_list(spec.nodes)}, {"edges", edges}, {"source", spec.source}, {"target", spec.target}};
}

std::string to_dot(const Graph& g) {
    GraphSpec spec = g.to_spec();
    std::ostringstream out;
    out << "digraph G {\n  rankdir=LR;\n";
    for (const auto& id : spec.nodes) {
        out << "  \"" << id << "\"";
        if (id == spec.source || id == spec.target) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const auto& e : spec.edges) {
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << e.cost.str();
        if (!e.reward.is_zero()) out << " / r=" << e.reward.str();
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

AgentSpec agent_from_json(const json& j) {
    if (!j.is_object()) bad("agent: expected a JSON object");
    AgentSpec a;
    a.kind = parse_agent_kind(string_field(j, "kind", "agent"));
    a.b = a.kind == AgentKind::Optimal && !j.contains("b") ? Rational(1) : rational_from_json(field(j, "b", "agent"), "agent b");
    if (a.kind == AgentKind::PartiallyNaive)
        a.b_prime = rational_from_json(field(j, "b_prime", "agent"), "agent b_prime");
    else if (j.contains("b_prime"))
        a.b_prime = rational_from_json(j.at("b_prime"), "agent b_prime");
    if (j.contains("tie_break")) a.tie_break = parse_tie_break(string_field(j, "tie_break", "agent"));
    if (j.contains("objective")) {
        std::string o = string_field(j, "objective", "agent");
        if (o == "cost") a.objective = Objective::MinimizeCost;
        else if (o == "reward") a.objective = Objective::MaximizeReward;
        else bad("agent: objective must be \"cost\" or \"reward\"");
    }
    return a;
}

json to_json(const AgentSpec& a) {
    json j{{"kind", std::string(agent_kind_name(a.kind))}, {"b", to_json(a.b)}};
    if (a.kind == AgentKind::PartiallyNaive) j["b_prime"] = to_json(a.b_prime);
    j["tie_break"] = std::string(tie_break_name(a.tie_break));
    j["objective"] = a.objective == Objective::MaximizeReward ? "reward" : "cost";
    return j;
}

EdgeRewards placement_from_json(const json& j, Rational* terminal) {
    const json* list = &j;
    if (j.is_object()) {
        list = &field(j, "edges", "placement");
        if (j.contains("terminal")) {
            Rational t = rational_from_json(j.at("terminal"), "placement terminal");
            if (!terminal && !t.is_zero()) bad("placement: terminal reward not accepted here");
            if (terminal) *terminal = t;
        }
    }
    if (!list->is_array()) bad("placement: expected an array of {from, to, reward}");
    EdgeRewards out;
    std::size_t i = 0;
    for (const auto& e : *list) {
        std::string where = "placement entry " + std::to_string(i++);
        EdgeKey k{string_field(e, "from", where), string_field(e, "to", where)};
        Rational r = rational_from_json(field(e, "reward", where), where + " reward");
        if (r.sign() < 0) throw Error(ErrorCode::NegativeWeight, where + ": negative reward");
        out[k] = out.count(k) ? out[k] + r : r;
    }
    return out;
}

json to_json(const EdgeRewards& r) {
    json a = json::array();
    for (const auto& [k, v] : r) a.push_back({{"from", k.first}, {"to", k.second}, {"reward", to_json(v)}});
    return a;
}

json to_json(const Path& p) {
    return {{"nodes", node_list(p.nodes)}, {"cost", to_json(p.total_cost)}, {"reward", to_json(p.total_reward)}};
}

json to_json(const TraversalTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"node", s.node}, {"successor", s.successor}, {"perceived", to_json(s.perceived)}});
    json j{{"path", node_list(t.path.nodes)}, {"total", to_json(t.true_total)}, {"steps", steps}};
    j["abandoned_at"] = t.abandoned_at ? json(*t.abandoned_at) : json(nullptr);
    return j;
}

json to_json(const CostTable& table, const Graph& g) {
    json rows = json::object();
    const Topology& topo = g.topo();
    for (int u = 0; u < topo.node_count(); ++u) {
        int s = table.successor[static_cast<std::size_t>(u)];
        rows[topo.id(u)] = {{"value", to_json(table.value[static_cast<std::size_t>(u)])},
                            {"successor", s < 0 ? json(nullptr) : json(topo.id(s))},
                            {"perceived", to_json(table.perceived[static_cast<std::size_t>(u)])}};
    }
    return rows;
}

json to_json(const PruneReport& r, const Graph& g) {
    json j{{"reward", to_json(r.reward)}, {"source_live", r.surviving.has_value()}};
    j["abandoned_nodes"] = node_list(r.abandoned_nodes);
    j["pruned_edges"] = edge_list(r.pruned_edges);
    j["surviving"] = r.surviving ? to_json(*r.surviving) : json(nullptr);
    json live = json::array();
    for (int u = 0; u < g.node_count(); ++u)
        if (r.live[static_cast<std::size_t>(u)]) live.push_back(g.topo().id(u));
    j["live_nodes"] = live;
    return j;
}

json to_json(const RewardIntervalSet& s) {
    json a = json::array();
    for (const auto& iv : s.intervals) a.push_back(json::array({to_json(iv.lo), iv.hi ? to_json(*iv.hi) : json(nullptr)}));
    return a;
}

json to_json(const DeletionResult& d) { return {{"r_d", to_json(d.r_d)}, {"path", to_json(d.path)}}; }

json to_json(const InternalCheck& c) {
    return {{"traversable", c.traversable}, {"collected", to_json(c.collected)}, {"trace", to_json(c.trace)}};
}

json to_json(const InternalSearchResult& r) {
    return {{"r_i", to_json(r.r_i)},
            {"lower_bound", to_json(r.lower_bound)},
            {"placement", to_json(r.placement)},
            {"terminal", to_json(r.terminal_reward)},
            {"profiles", r.profiles}};
}

json to_json(const CommitmentResult& r) {
    json j{{"device", std::string(device_name(r.device))},
           {"deleted_edges", edge_list(r.deleted_edges)},
           {"added_edges", edge_list(r.added_edges)},
           {"placement", to_json(r.placement)},
           {"optimal_reward", to_json(r.optimal_reward)},
           {"reward_before", to_json(r.reward_before)},
           {"reward_after", to_json(r.reward_after)},
           {"path_after", node_list(r.path_after.nodes)}};
    if (r.deletion) {
        const auto& d = *r.deletion;
        j["certificate"] = {{"k", d.k},
                            {"j", d.j},
                            {"interval", json::array({to_json(d.interval_lo), to_json(d.interval_hi)})},
                            {"removed", d.removed},
                            {"removal_bound", d.removal_bound},
                            {"guarantee_j", to_json(d.guarantee_j)},
                            {"guarantee_k", to_json(d.guarantee_k)},
                            {"optimal_after", to_json(d.optimal_after)},
                            {"within_budget", d.within_budget},
                            {"meets_j", d.meets_j},
                            {"meets_k", d.meets_k},
                            {"interval_clear", d.interval_clear}};
    }
    if (r.plan) {
        const auto& p = *r.plan;
        j["certificate"] = {{"budget", to_json(p.budget)},
                            {"budget_bound", to_json(p.budget_bound)},
                            {"accepted", p.accepted},
                            {"plan_collected", to_json(p.plan_collected)},
                            {"net", to_json(p.net)},
                            {"within_bound", p.within_bound},
                            {"profiles", p.profiles}};
    }
    if (r.zero_edge) {
        const auto& z = *r.zero_edge;
        j["certificate"] = {{"nodes", z.nodes}, {"candidates", z.candidates}, {"bound_holds", z.bound_holds}};
    }
    return j;
}

json to_json(const oracle::Verdict& v) {
    return {{"pass", v.pass}, {"node", v.node ? json(*v.node) : json(nullptr)}, {"detail", v.detail}};
}

} // namespace pbias::io
