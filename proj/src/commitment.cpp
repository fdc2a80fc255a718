#include "pbias/commitment.hpp"

#include <functional>
#include <set>

#include "engine.hpp"
#include "pbias/lp.hpp"
#include "pbias/reward_seeking.hpp"

namespace pbias {

std::string_view device_name(Device device) {
    switch (device) {
    case Device::PlanningPhase: return "planning_phase";
    case Device::ZeroEdge: return "zero_edge";
    case Device::IntervalDeletion: return "interval_deletion";
    }
    return "?";
}

namespace {

Rational source_value(const Graph& g, const CostTable& t) { return t.value[g.topo().source()]; }

TraversalTrace sophisticated_rewards(const Graph& g, const Rational& b, TieBreakPolicy tie) {
    return simulate_rewards(g, AgentSpec::sophisticated(b, tie));
}

Rational heaviest(const Graph& g, TieBreakPolicy tie) {
    return source_value(g, heaviest_path(g, g.topo().id(g.topo().source()), tie).table);
}

void check_reward_bias(const Rational& b) {
    if (b < Rational(1)) throw Error(ErrorCode::BiasOutOfRange, "commitment devices need b >= 1, got " + b.str());
}

} // namespace

CommitmentResult commit_by_deletion(const Graph& graph, const Rational& b, int k, TieBreakPolicy tie) {
    check_reward_bias(b);
    const Topology& topo = graph.topo();
    const int n = topo.node_count();
    if (!(b < Rational(n)))
        throw Error(ErrorCode::PreconditionViolated, "need |V| > b, got |V|=" + std::to_string(n) + ", b=" + b.str());
    if (k <= 2) throw Error(ErrorCode::PreconditionViolated, "need k > 2, got " + std::to_string(k));

    CommitmentResult res;
    res.device = Device::IntervalDeletion;
    OptimalResult opt = heaviest_path(graph, topo.id(topo.source()), tie);
    const Rational rstar = source_value(graph, opt.table);
    res.optimal_reward = rstar;
    res.reward_before = sophisticated_rewards(graph, b, tie).true_total;

    std::vector<char> on_path(static_cast<std::size_t>(graph.edge_count()), 0);
    std::vector<int> pnodes = follow(opt.table, topo.source());
    for (std::size_t i = 0; i + 1 < pnodes.size(); ++i) on_path[topo.find_edge(pnodes[i], pnodes[i + 1])] = 1;

    const Rational nn(n);
    auto inside = [&](const Rational& r, const Rational& lo, const Rational& hi) { return lo < r && r < hi; };
    int best_j = -1, best_count = 0;
    Rational best_lo, best_hi;
    for (int i = 0; i < k; ++i) {
        const int j = k - i;
        Rational lo = rstar * Rational::pow(nn, -j - 1), hi = rstar * Rational::pow(nn, -j + 1);
        int count = 0;
        for (int e = 0; e < graph.edge_count(); ++e)
            if (!on_path[e] && inside(graph.reward(e), lo, hi)) ++count;
        if (best_j < 0 || count < best_count || (count == best_count && j < best_j)) {
            best_j = j;
            best_count = count;
            best_lo = lo;
            best_hi = hi;
        }
    }

    std::vector<char> keep(static_cast<std::size_t>(graph.edge_count()), 1);
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (!on_path[e] && inside(graph.reward(e), best_lo, best_hi)) {
            keep[e] = 0;
            res.deleted_edges.emplace_back(topo.id(topo.from(e)), topo.id(topo.to(e)));
        }
    }
    Graph modified = restrict_edges(graph, keep);
    TraversalTrace after = sophisticated_rewards(modified, b, tie);
    res.reward_after = after.true_total;
    res.path_after = after.path;

    DeletionCertificate cert;
    cert.k = k;
    cert.j = best_j;
    cert.interval_lo = best_lo;
    cert.interval_hi = best_hi;
    cert.removed = static_cast<int>(res.deleted_edges.size());
    cert.removal_bound = 2 * graph.edge_count() / k;
    cert.guarantee_j = rstar * Rational::pow(nn, -best_j);
    cert.guarantee_k = rstar * Rational::pow(nn, -k);
    cert.optimal_after = heaviest(modified, tie);
    cert.within_budget = cert.removed <= cert.removal_bound;
    cert.meets_j = !(res.reward_after < cert.guarantee_j);
    cert.meets_k = !(res.reward_after < cert.guarantee_k);
    cert.interval_clear = true;
    std::set<std::pair<int, int>> path_pairs;
    for (std::size_t i = 0; i + 1 < pnodes.size(); ++i) path_pairs.insert({pnodes[i], pnodes[i + 1]});
    const Topology& mt = modified.topo();
    for (int e = 0; e < modified.edge_count(); ++e) {
        int u = topo.index_of(mt.id(mt.from(e))), v = topo.index_of(mt.id(mt.to(e)));
        if (!path_pairs.count({u, v}) && inside(modified.reward(e), best_lo, best_hi)) cert.interval_clear = false;
    }
    res.deletion = cert;
    return res;
}

namespace {

CommitmentResult zero_edge_search(const Graph& graph, const Rational& b, TieBreakPolicy tie, bool parallel) {
    check_reward_bias(b);
    const Topology& topo = graph.topo();
    const int n = topo.node_count();
    std::vector<std::pair<int, int>> cand;
    for (int v = 1; v < n; ++v)
        if (topo.find_edge(0, v) < 0) cand.emplace_back(0, v);
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (topo.find_edge(u, v) < 0) cand.emplace_back(u, v);

    const GraphSpec base = graph.to_spec();
    std::vector<Rational> collected(cand.size());
    std::vector<Path> paths(cand.size());
    const long count = static_cast<long>(cand.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel && count > 16)
    for (long i = 0; i < count; ++i) {
        GraphSpec s = base;
        s.edge(topo.id(cand[i].first), topo.id(cand[i].second), Rational(), Rational());
        TraversalTrace tr = simulate_rewards(validate(s), AgentSpec::sophisticated(b, tie));
        collected[i] = tr.true_total;
        paths[i] = tr.path;
    }

    CommitmentResult res;
    res.device = Device::ZeroEdge;
    res.optimal_reward = heaviest(graph, tie);
    TraversalTrace before = sophisticated_rewards(graph, b, tie);
    res.reward_before = before.true_total;
    res.reward_after = before.true_total;
    res.path_after = before.path;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (res.reward_after < collected[i]) {
            res.reward_after = collected[i];
            res.path_after = paths[i];
            res.added_edges = {{topo.id(cand[i].first), topo.id(cand[i].second)}};
        }
    }
    ZeroEdgeCertificate cert;
    cert.nodes = n;
    cert.candidates = cand.size();
    cert.bound_holds = !(b * Rational(n) * res.reward_after < res.optimal_reward);
    res.zero_edge = cert;
    return res;
}

std::vector<Rational> augmented(const Graph& graph, const EdgeRewards& placement, Rational& total) {
    std::vector<Rational> r = graph.rewards();
    total = Rational();
    for (const auto& [key, amount] : placement) {
        if (amount.sign() < 0) throw Error(ErrorCode::NegativeWeight, "negative placement " + amount.str());
        r[graph.edge(key.first, key.second)] += amount;
        total += amount;
    }
    return r;
}

} // namespace

CommitmentResult best_zero_edge(const Graph& graph, const Rational& b, TieBreakPolicy tie) {
    return zero_edge_search(graph, b, tie, true);
}

CommitmentResult best_zero_edge_serial(const Graph& graph, const Rational& b, TieBreakPolicy tie) {
    return zero_edge_search(graph, b, tie, false);
}

CommitmentResult evaluate_plan(const Graph& graph, const Rational& b, const EdgeRewards& placement,
                               TieBreakPolicy tie) {
    check_reward_bias(b);
    CommitmentResult res;
    res.device = Device::PlanningPhase;
    res.placement = placement;
    res.optimal_reward = heaviest(graph, tie);
    TraversalTrace before = sophisticated_rewards(graph, b, tie);
    res.reward_before = before.true_total;

    PlanCertificate cert;
    Graph aug = graph.with_rewards(augmented(graph, placement, cert.budget));
    TraversalTrace tr = sophisticated_rewards(aug, b, tie);
    cert.plan_collected = tr.true_total;
    cert.net = tr.true_total - cert.budget;
    cert.accepted = !(tr.true_total < res.reward_before + b * cert.budget);
    if (b > Rational(1)) {
        cert.budget_bound = (res.optimal_reward - res.reward_before) / (b - Rational(1));
        cert.within_bound = !(cert.budget_bound < cert.budget);
    } else {
        cert.within_bound = true;
    }
    res.reward_after = cert.accepted ? tr.true_total : res.reward_before;
    res.path_after = cert.accepted ? tr.path : before.path;
    res.plan = cert;
    return res;
}

CommitmentResult search_plan(const Graph& graph, const Rational& b, TieBreakPolicy tie, std::size_t budget) {
    check_reward_bias(b);
    const Topology& topo = graph.topo();
    const int n = topo.node_count(), m = graph.edge_count();
    if (m > kMaxSearchEdges)
        throw Error(ErrorCode::SearchBudgetExceeded, "plan search limited to " + std::to_string(kMaxSearchEdges) +
                                                         " edges, graph has " + std::to_string(m));
    const Rational r_s = sophisticated_rewards(graph, b, tie).true_total;

    struct Affine {
        std::vector<Rational> coef;
        Rational constant;
    };
    std::vector<int> choice(static_cast<std::size_t>(n), -1);
    std::vector<Affine> value(static_cast<std::size_t>(n));
    value[topo.target()] = Affine{std::vector<Rational>(static_cast<std::size_t>(m)), Rational()};

    CommitmentResult best = evaluate_plan(graph, b, {}, tie);
    std::size_t profiles = 0;

    auto perceived = [&](int e) {
        Affine a = value[topo.to(e)];
        a.coef[e] += b;
        a.constant += b * graph.reward(e);
        return a;
    };
    auto solve_profile = [&]() {
        LinearProgram lp;
        lp.variables = m;
        const Affine& top = value[topo.source()];
        // maximize top - sum(x)  ==  minimize sum(x) - top
        lp.objective.assign(static_cast<std::size_t>(m), Rational(1));
        for (int e = 0; e < m; ++e) lp.objective[e] -= top.coef[e];
        for (int u = 0; u < n - 1; ++u) {
            Affine chosen = perceived(choice[u]);
            for (int e = topo.out_begin(u); e < topo.out_end(u); ++e) {
                if (e == choice[u]) continue;
                Affine alt = perceived(e);
                LpRow row;
                row.coef.resize(static_cast<std::size_t>(m));
                for (int j = 0; j < m; ++j) row.coef[j] = chosen.coef[j] - alt.coef[j];
                row.rhs = alt.constant - chosen.constant;
                row.rel = Relation::GreaterEqual;
                lp.rows.push_back(std::move(row));
            }
        }
        LpRow accept; // top - b*sum(x) >= R_s(s)
        accept.coef.resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) accept.coef[j] = top.coef[j] - b;
        accept.rhs = r_s - top.constant;
        accept.rel = Relation::GreaterEqual;
        lp.rows.push_back(std::move(accept));
        LpResult res = solve_lp(lp);
        if (res.status != LpResult::Status::Optimal) return;
        EdgeRewards placement;
        for (int e = 0; e < m; ++e)
            if (!res.x[e].is_zero()) placement[{topo.id(topo.from(e)), topo.id(topo.to(e))}] = res.x[e];
        CommitmentResult cand = evaluate_plan(graph, b, placement, tie);
        if (!cand.plan->accepted) return;
        const PlanCertificate& cur = *best.plan;
        if (cur.net < cand.plan->net || (cand.plan->net == cur.net && cand.plan->budget < cur.budget))
            best = std::move(cand);
    };
    std::function<void(int)> assign = [&](int u) {
        if (u < 0) {
            if (++profiles > budget)
                throw Error(ErrorCode::SearchBudgetExceeded,
                            "more than " + std::to_string(budget) + " behaviour profiles");
            solve_profile();
            return;
        }
        for (int e = topo.out_begin(u); e < topo.out_end(u); ++e) {
            choice[u] = e;
            Affine a = value[topo.to(e)];
            a.coef[e] += Rational(1);
            a.constant += graph.reward(e);
            value[u] = std::move(a);
            assign(u - 1);
        }
    };
    assign(n - 2);
    best.plan->profiles = profiles;
    return best;
}

} // namespace pbias
