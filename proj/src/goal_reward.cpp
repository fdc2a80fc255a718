#include "pbias/goal_reward.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "engine.hpp"
#include "pbias/lp.hpp"

namespace pbias {

namespace detail {

void scaled_costs(const std::vector<Rational>& cost, const Rational& b, std::vector<Rational>& out) {
    out.resize(cost.size());
    for (std::size_t e = 0; e < cost.size(); ++e) out[e] = b * cost[e];
}

std::vector<Rational> scaled_costs(const std::vector<Rational>& cost, const Rational& b) {
    std::vector<Rational> out;
    scaled_costs(cost, b, out);
    return out;
}

namespace {

// Dead nodes get value and perceived 0 inside the passes, so only t is set here.
void reset(const Topology& topo, CostTable& out, std::vector<char>& live) {
    const auto n = static_cast<std::size_t>(topo.node_count());
    out.value.resize(n);
    out.perceived.resize(n);
    out.successor.assign(n, -1);
    live.assign(n, 0);
    live[topo.target()] = 1;
    out.value[topo.target()] = Rational();
    out.perceived[topo.target()] = Rational();
}

} // namespace

bool prune_pass(const Topology& topo, const std::vector<Rational>& cost, const std::vector<Rational>& scaled,
                const Rational& R, TieBreakPolicy tie, CostTable& out, std::vector<char>& live) {
    const int n = topo.node_count();
    reset(topo, out, live);
    Rational p, best_p;
    for (int u = n - 2; u >= 0; --u) {
        Option best;
        int best_edge = -1;
        for (int e = topo.out_begin(u); e < topo.out_end(u); ++e) {
            int v = topo.to(e);
            if (!live[v]) continue;
            p = scaled[e] + out.value[v];
            if (R < p) continue;
            Option cand{v, &p, &out.value[v], &cost[e]};
            if (best_edge < 0 || prefer(topo, Sense::Min, tie, cand, best)) {
                best_p = p;
                best = Option{v, &best_p, &out.value[v], &cost[e]};
                best_edge = e;
            }
        }
        if (best_edge < 0) {
            out.value[u] = Rational();
            out.perceived[u] = Rational();
            continue;
        }
        live[u] = 1;
        out.successor[u] = best.succ;
        out.perceived[u] = best_p;
        out.value[u] = cost[best_edge] + out.value[best.succ];
    }
    return live[topo.source()] != 0;
}

bool greedy_pass(const Topology& topo, const std::vector<Rational>& cost, const std::vector<Rational>& scaled,
                 const Rational& R, CostTable& out, std::vector<char>& live) {
    const int n = topo.node_count();
    reset(topo, out, live);
    Rational p, total, best_total;
    for (int u = n - 2; u >= 0; --u) {
        int best = -1;
        for (int e = topo.out_begin(u); e < topo.out_end(u); ++e) {
            int v = topo.to(e);
            if (!live[v]) continue;
            p = scaled[e] + out.value[v];
            if (R < p) continue;
            total = cost[e] + out.value[v];
            if (best < 0 || total < best_total ||
                (total == best_total && topo.rank(v) < topo.rank(out.successor[u]))) {
                best = e;
                best_total = total;
                out.successor[u] = v;
                out.perceived[u] = p;
            }
        }
        if (best < 0) {
            out.value[u] = Rational();
            out.perceived[u] = Rational();
            continue;
        }
        live[u] = 1;
        out.value[u] = best_total;
    }
    return live[topo.source()] != 0;
}

void path_cost_sets(const Topology& topo, const std::vector<Rational>& cost, std::size_t limit,
                    std::vector<std::vector<Rational>>& out) {
    const int n = topo.node_count();
    out.assign(static_cast<std::size_t>(n), {});
    out[topo.target()] = {Rational()};
    for (int u = n - 2; u >= 0; --u) {
        auto& set = out[u];
        for (int e = topo.out_begin(u); e < topo.out_end(u); ++e)
            for (const Rational& x : out[topo.to(e)]) set.push_back(cost[e] + x);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        if (set.size() > limit)
            throw Error(ErrorCode::PathLimitExceeded, "more than " + std::to_string(limit) +
                                                          " distinct path costs from '" + topo.id(u) + "'");
    }
}

} // namespace detail

namespace {

bool eval_traversable(const Graph& g, const Rational& b, const Rational& R, TieBreakPolicy tie) {
    CostTable t;
    std::vector<char> live;
    return detail::prune_pass(g.topo(), g.costs(), detail::scaled_costs(g.costs(), b), R, tie, t, live);
}

void check_bias(const Rational& b) {
    if (b < Rational(1)) throw Error(ErrorCode::BiasOutOfRange, "reward analysis needs b >= 1, got " + b.str());
}

} // namespace

bool RewardIntervalSet::contains(const Rational& R) const {
    for (const auto& iv : intervals)
        if (!(R < iv.lo) && (!iv.hi || R < *iv.hi)) return true;
    return false;
}

PruneReport prune(const Graph& graph, const Rational& b, const Rational& R, TieBreakPolicy tie) {
    check_bias(b);
    const Topology& topo = graph.topo();
    PruneReport rep;
    rep.reward = R;
    detail::prune_pass(topo, graph.costs(), detail::scaled_costs(graph.costs(), b), R, tie, rep.table, rep.live);
    std::vector<char> keep(static_cast<std::size_t>(graph.edge_count()), 0);
    for (int e = 0; e < graph.edge_count(); ++e) {
        int u = topo.from(e), v = topo.to(e);
        bool kept = rep.live[v] && !(R < b * graph.cost(e) + rep.table.value[v]);
        keep[e] = kept ? 1 : 0;
        if (!kept) rep.pruned_edges.emplace_back(topo.id(u), topo.id(v));
    }
    for (int u = 0; u < topo.node_count(); ++u)
        if (!rep.live[u]) rep.abandoned_nodes.push_back(topo.id(u));
    if (rep.live[topo.source()]) rep.surviving = restrict_edges(graph, keep);
    return rep;
}

TraversalTrace traverse_with_reward(const Graph& graph, const Rational& b, const Rational& R, TieBreakPolicy tie) {
    check_bias(b);
    CostTable table;
    std::vector<char> live;
    if (!detail::prune_pass(graph.topo(), graph.costs(), detail::scaled_costs(graph.costs(), b), R, tie, table, live)) {
        TraversalTrace tr;
        tr.abandoned_at = graph.topo().id(graph.topo().source());
        tr.path = graph.make_path({graph.topo().source()});
        return tr;
    }
    return trace_from_table(graph, table, false);
}

bool traversable(const Graph& graph, const Rational& b, const Rational& R, TieBreakPolicy tie) {
    check_bias(b);
    return eval_traversable(graph, b, R, tie);
}

Path path_for_reward(const Graph& graph, const Rational& b, const Rational& R, TieBreakPolicy tie) {
    TraversalTrace tr = traverse_with_reward(graph, b, R, tie);
    if (!tr.reached_target()) throw Error(ErrorCode::NotFeasible, "agent does not start for reward " + R.str());
    return tr.path;
}

std::vector<Rational> reward_breakpoints(const Graph& graph, const Rational& b, std::size_t limit) {
    const Topology& topo = graph.topo();
    std::vector<std::vector<Rational>> sets;
    detail::path_cost_sets(topo, graph.costs(), limit, sets);
    std::vector<Rational> out;
    for (int e = 0; e < topo.edge_count(); ++e) {
        Rational base = b * graph.cost(e);
        for (const Rational& x : sets[topo.to(e)]) out.push_back(base + x);
        if (out.size() > 4 * limit) {
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            if (out.size() > limit)
                throw Error(ErrorCode::PathLimitExceeded, "more than " + std::to_string(limit) + " breakpoints");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > limit)
        throw Error(ErrorCode::PathLimitExceeded, "more than " + std::to_string(limit) + " breakpoints");
    return out;
}

namespace {

RewardIntervalSet assemble(const std::vector<Rational>& bp, const std::vector<char>& at, const std::vector<char>& mid) {
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        if (mid[i] != at[i])
            throw std::logic_error("feasibility changed strictly between breakpoints " + bp[i].str() + " and " +
                                   bp[i + 1].str());
    RewardIntervalSet out;
    for (std::size_t i = 0; i < bp.size(); ++i) {
        if (!at[i]) continue;
        if (i == 0 || !at[i - 1]) out.intervals.push_back(RewardInterval{bp[i], std::nullopt});
        if (i + 1 < bp.size() && !at[i + 1]) out.intervals.back().hi = bp[i + 1];
    }
    if (!bp.empty() && !at.back()) throw std::logic_error("graph not traversable above every breakpoint");
    return out;
}

RewardIntervalSet sweep(const Graph& graph, const Rational& b, TieBreakPolicy tie, std::size_t limit, bool parallel) {
    check_bias(b);
    const std::vector<Rational> bp = reward_breakpoints(graph, b, limit);
    const long count = static_cast<long>(bp.size());
    std::vector<char> at(bp.size(), 0), mid(bp.empty() ? 0 : bp.size() - 1, 0);
    const long jobs = 2 * count - 1;
    const std::vector<Rational> scaled = detail::scaled_costs(graph.costs(), b);
#pragma omp parallel if (parallel && jobs > 64)
    {
        CostTable table;
        std::vector<char> live;
#pragma omp for schedule(dynamic, 8)
        for (long j = 0; j < jobs; ++j) {
            if (j < count) {
                at[j] = detail::prune_pass(graph.topo(), graph.costs(), scaled, bp[j], tie, table, live) ? 1 : 0;
            } else {
                long i = j - count;
                Rational r = (bp[i] + bp[i + 1]) / Rational(2);
                mid[i] = detail::prune_pass(graph.topo(), graph.costs(), scaled, r, tie, table, live) ? 1 : 0;
            }
        }
    }
    return assemble(bp, at, mid);
}

} // namespace

RewardIntervalSet feasible_reward_set(const Graph& graph, const Rational& b, TieBreakPolicy tie, std::size_t limit) {
    return sweep(graph, b, tie, limit, true);
}

RewardIntervalSet feasible_reward_set_serial(const Graph& graph, const Rational& b, TieBreakPolicy tie,
                                             std::size_t limit) {
    return sweep(graph, b, tie, limit, false);
}

Rational min_reward(const Graph& graph, const Rational& b, TieBreakPolicy tie, std::size_t limit) {
    check_bias(b);
    const std::vector<Rational> bp = reward_breakpoints(graph, b, limit);
    CostTable table;
    std::vector<char> live;
    const std::vector<Rational> scaled = detail::scaled_costs(graph.costs(), b);
    for (const Rational& r : bp)
        if (detail::prune_pass(graph.topo(), graph.costs(), scaled, r, tie, table, live)) return r;
    throw std::logic_error("graph not traversable at any breakpoint");
}

std::optional<Path> find_motivating_path(const Graph& graph, const Rational& b, const Rational& R) {
    check_bias(b);
    CostTable table;
    std::vector<char> live;
    if (!detail::greedy_pass(graph.topo(), graph.costs(), detail::scaled_costs(graph.costs(), b), R, table, live))
        return std::nullopt;
    return graph.make_path(follow(table, graph.topo().source()));
}

DeletionResult min_reward_with_deletion(const Graph& graph, const Rational& b, std::size_t limit) {
    check_bias(b);
    const Topology& topo = graph.topo();
    const Rational c_opt = shortest_path(graph, topo.id(topo.source())).table.value[topo.source()];
    const Rational hi = b * c_opt;
    std::vector<Rational> cand;
    for (const Rational& r : reward_breakpoints(graph, b, limit))
        if (!(r < c_opt) && !(hi < r)) cand.push_back(r);
    if (cand.empty() || cand.back() != hi) cand.push_back(hi);
    CostTable table;
    std::vector<char> live;
    const std::vector<Rational> scaled = detail::scaled_costs(graph.costs(), b);
    std::size_t lo = 0, top = cand.size() - 1; // cand[top] is always feasible
    while (lo < top) {
        std::size_t mid = lo + (top - lo) / 2;
        if (detail::greedy_pass(topo, graph.costs(), scaled, cand[mid], table, live)) top = mid;
        else lo = mid + 1;
    }
    if (!detail::greedy_pass(topo, graph.costs(), scaled, cand[top], table, live))
        throw std::logic_error("optimal path not motivating at b*C_o(s)");
    return DeletionResult{cand[top], graph.make_path(follow(table, topo.source()))};
}

InternalCheck check_internal_distribution(const Graph& graph, const Rational& b, const EdgeRewards& rewards,
                                          TieBreakPolicy tie, const Rational& terminal_reward) {
    check_bias(b);
    const Topology& topo = graph.topo();
    std::vector<Rational> r(static_cast<std::size_t>(graph.edge_count()));
    for (const auto& [key, amount] : rewards) {
        if (amount.sign() < 0) throw Error(ErrorCode::NegativeWeight, "negative internal reward " + amount.str());
        r[graph.edge(key.first, key.second)] = amount;
    }
    if (terminal_reward.sign() < 0) throw Error(ErrorCode::NegativeWeight, "negative terminal reward");
    const int n = topo.node_count();
    std::vector<Rational> net(static_cast<std::size_t>(n)), perceived(static_cast<std::size_t>(n));
    std::vector<int> succ(static_cast<std::size_t>(n), -1);
    std::vector<char> live(static_cast<std::size_t>(n), 0);
    net[topo.target()] = -terminal_reward;
    live[topo.target()] = 1;
    Rational p, best_p;
    for (int u = n - 2; u >= 0; --u) {
        detail::Option best;
        int best_edge = -1;
        for (int e = topo.out_begin(u); e < topo.out_end(u); ++e) {
            int v = topo.to(e);
            if (!live[v]) continue;
            p = b * graph.cost(e) - r[e] + net[v];
            if (p.sign() > 0) continue;
            detail::Option cand{v, &p, &net[v], &graph.cost(e)};
            if (best_edge < 0 || detail::prefer(topo, detail::Sense::Min, tie, cand, best)) {
                best_p = p;
                best = detail::Option{v, &best_p, &net[v], &graph.cost(e)};
                best_edge = e;
            }
        }
        if (best_edge < 0) continue;
        live[u] = 1;
        succ[u] = best.succ;
        perceived[u] = best_p;
        net[u] = graph.cost(best_edge) - r[best_edge] + net[best.succ];
    }
    InternalCheck out;
    if (!live[topo.source()]) {
        out.trace.abandoned_at = topo.id(topo.source());
        out.trace.path = graph.make_path({topo.source()});
        return out;
    }
    out.traversable = true;
    std::vector<int> nodes{topo.source()};
    while (succ[nodes.back()] >= 0) {
        int u = nodes.back();
        out.trace.steps.push_back(TraceStep{topo.id(u), topo.id(succ[u]), perceived[u]});
        out.collected += r[topo.find_edge(u, succ[u])];
        nodes.push_back(succ[u]);
    }
    out.collected += terminal_reward;
    out.trace.path = graph.make_path(nodes);
    out.trace.true_total = out.trace.path.total_cost;
    return out;
}

namespace {

// Affine form over the LP variables (one per edge, then the terminal reward).
struct Affine {
    std::vector<Rational> coef;
    Rational constant;
};

} // namespace

InternalSearchResult min_internal_reward_search(const Graph& graph, const Rational& b, TieBreakPolicy tie,
                                                std::size_t budget) {
    check_bias(b);
    const Topology& topo = graph.topo();
    const int n = topo.node_count(), m = graph.edge_count();
    if (m > kMaxSearchEdges)
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "internal reward search limited to " + std::to_string(kMaxSearchEdges) + " edges, graph has " +
                        std::to_string(m));
    const int vars = m + 1;
    std::vector<int> choice(static_cast<std::size_t>(n), -1); // chosen edge, -1 = abandon
    std::vector<char> live(static_cast<std::size_t>(n), 0);
    std::vector<Affine> net(static_cast<std::size_t>(n));
    live[topo.target()] = 1;
    net[topo.target()].coef.assign(static_cast<std::size_t>(vars), Rational());
    net[topo.target()].coef[m] = Rational(-1);

    InternalSearchResult best;
    bool have_verified = false, have_bound = false;
    std::size_t profiles = 0;

    auto perceived = [&](int e) {
        Affine a = net[topo.to(e)];
        a.coef[e] -= Rational(1);
        a.constant += b * graph.cost(e);
        return a;
    };
    auto row = [&](const Affine& lhs, const Affine& rhs, Relation rel) {
        // lhs - rhs (rel) 0
        LpRow r;
        r.coef.resize(static_cast<std::size_t>(vars));
        for (int j = 0; j < vars; ++j) r.coef[j] = lhs.coef[j] - rhs.coef[j];
        r.rhs = rhs.constant - lhs.constant;
        r.rel = rel;
        return r;
    };

    auto solve_profile = [&]() {
        LinearProgram lp;
        lp.variables = vars;
        lp.objective.assign(static_cast<std::size_t>(vars), Rational(1));
        Affine zero{std::vector<Rational>(static_cast<std::size_t>(vars)), Rational()};
        for (int u = 0; u < n - 1; ++u) {
            if (choice[u] >= 0) {
                Affine chosen = perceived(choice[u]);
                lp.rows.push_back(row(chosen, zero, Relation::LessEqual));
                for (int e = topo.out_begin(u); e < topo.out_end(u); ++e)
                    if (e != choice[u] && live[topo.to(e)])
                        lp.rows.push_back(row(chosen, perceived(e), Relation::LessEqual));
            } else {
                for (int e = topo.out_begin(u); e < topo.out_end(u); ++e)
                    if (live[topo.to(e)]) lp.rows.push_back(row(perceived(e), zero, Relation::GreaterEqual));
            }
        }
        LpResult res = solve_lp(lp);
        if (res.status != LpResult::Status::Optimal) return;
        if (!have_bound || res.value < best.lower_bound) {
            best.lower_bound = res.value;
            have_bound = true;
        }
        if (have_verified && !(res.value < best.r_i)) return;
        EdgeRewards placement;
        for (int e = 0; e < m; ++e)
            if (!res.x[e].is_zero()) placement[{topo.id(topo.from(e)), topo.id(topo.to(e))}] = res.x[e];
        InternalCheck chk = check_internal_distribution(graph, b, placement, tie, res.x[m]);
        if (!chk.traversable) return;
        best.r_i = res.value;
        best.placement = std::move(placement);
        best.terminal_reward = res.x[m];
        have_verified = true;
    };

    std::function<void(int)> assign = [&](int u) {
        if (u < 0) {
            if (++profiles > budget)
                throw Error(ErrorCode::SearchBudgetExceeded,
                            "more than " + std::to_string(budget) + " behaviour profiles");
            solve_profile();
            return;
        }
        // abandon (not allowed at the source: only traversing profiles matter)
        if (u != topo.source()) {
            choice[u] = -1;
            live[u] = 0;
            assign(u - 1);
        }
        for (int e = topo.out_begin(u); e < topo.out_end(u); ++e) {
            int v = topo.to(e);
            if (!live[v]) continue;
            choice[u] = e;
            live[u] = 1;
            Affine a = net[v];
            a.coef[e] -= Rational(1);
            a.constant += graph.cost(e);
            net[u] = std::move(a);
            assign(u - 1);
        }
        live[u] = 0;
        choice[u] = -1;
    };
    assign(n - 2);

    best.profiles = profiles;
    if (!have_verified) throw std::logic_error("no verified internal placement found");
    return best;
}

} // namespace pbias
