#include "engine.hpp"

namespace pbias::detail {

bool prefer(const Topology& topo, Sense sense, TieBreakPolicy tie, const Option& a, const Option& b) {
    if (*a.primary != *b.primary) return strictly_better(sense, *a.primary, *b.primary);
    switch (tie) {
    case TieBreakPolicy::MinTrueContinuation:
        if (*a.cont != *b.cont) return strictly_better(sense, *a.cont, *b.cont);
        break;
    case TieBreakPolicy::MaxTrueContinuation:
        if (*a.cont != *b.cont) return strictly_better(sense, *b.cont, *a.cont);
        break;
    case TieBreakPolicy::PreferEarlierSuccessorId:
        break;
    case TieBreakPolicy::PreferLaterSuccessorId:
        return topo.rank(a.succ) > topo.rank(b.succ);
    case TieBreakPolicy::MaxImmediateEdgeWeight:
        if (*a.weight != *b.weight) return *b.weight < *a.weight;
        break;
    }
    return topo.rank(a.succ) < topo.rank(b.succ);
}

void backward_pass(const Topology& topo, const std::vector<Rational>& w, const Rational& bias, Sense sense,
                   TieBreakPolicy tie, const std::vector<Rational>* belief, CostTable& out) {
    const int n = topo.node_count();
    out.value.assign(static_cast<std::size_t>(n), Rational());
    out.successor.assign(static_cast<std::size_t>(n), -1);
    out.perceived.assign(static_cast<std::size_t>(n), Rational());
    const std::vector<Rational>& x = belief ? *belief : out.value;
    const bool unit = bias == Rational(1);
    Rational best_p, p;
    for (int u = n - 2; u >= 0; --u) {
        Option best;
        int best_edge = -1;
        for (int e = topo.out_begin(u); e < topo.out_end(u); ++e) {
            int v = topo.to(e);
            p = unit ? w[e] + x[v] : bias * w[e] + x[v];
            Option cand{v, &p, &out.value[v], &w[e]};
            if (best_edge < 0 || prefer(topo, sense, tie, cand, best)) {
                best_p = p;
                best = Option{v, &best_p, &out.value[v], &w[e]};
                best_edge = e;
            }
        }
        out.successor[u] = best.succ;
        out.perceived[u] = best_p;
        out.value[u] = w[best_edge] + out.value[best.succ];
    }
}

void agent_pass(const Topology& topo, const std::vector<Rational>& w, const AgentSpec& agent, CostTable& out,
                AgentScratch& scratch) {
    const Sense sense = agent.objective == Objective::MaximizeReward ? Sense::Max : Sense::Min;
    switch (agent.kind) {
    case AgentKind::Optimal:
        backward_pass(topo, w, Rational(1), sense, agent.tie_break, nullptr, out);
        return;
    case AgentKind::Sophisticated:
        backward_pass(topo, w, agent.b, sense, agent.tie_break, nullptr, out);
        return;
    case AgentKind::Naive:
    case AgentKind::FutureBiased:
        backward_pass(topo, w, Rational(1), sense, agent.tie_break, nullptr, scratch.belief);
        backward_pass(topo, w, agent.b, sense, agent.tie_break, &scratch.belief.value, out);
        return;
    case AgentKind::PartiallyNaive:
        backward_pass(topo, w, agent.b_prime, sense, agent.tie_break, nullptr, scratch.belief);
        backward_pass(topo, w, agent.b, sense, agent.tie_break, &scratch.belief.value, out);
        return;
    }
}

} // namespace pbias::detail
