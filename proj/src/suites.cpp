#include "pbias/suites.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "engine.hpp"
#include "pbias/fixtures.hpp"

namespace pbias::suites {

namespace {

using detail::Sense;

std::vector<NodeId> small_ids(int n) {
    std::vector<NodeId> ids{"s"};
    for (int i = 1; i + 1 < n; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    ids.push_back("t");
    return ids;
}

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

struct Scratch {
    CostTable opt, agent, table;
    std::vector<char> live;
    std::vector<Rational> weights;
    std::vector<std::vector<Rational>> sets;
    std::vector<Rational> breakpoints;
    std::vector<Rational> scaled;
};

// Distinct v->t path costs per node, into reused buffers.
void path_sets(const Topology& topo, const std::vector<Rational>& w, Scratch& s) {
    const int n = topo.node_count();
    if (s.sets.size() < static_cast<std::size_t>(n)) s.sets.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) s.sets[u].clear();
    s.sets[topo.target()].push_back(Rational());
    for (int u = n - 2; u >= 0; --u) {
        auto& set = s.sets[u];
        for (int e = topo.out_begin(u); e < topo.out_end(u); ++e)
            for (const Rational& x : s.sets[topo.to(e)]) set.push_back(w[e] + x);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
}

// Sorted distinct b*c(u,v) + (v->t path cost), from the sets above.
void breakpoints(const Topology& topo, Scratch& s) {
    s.breakpoints.clear();
    for (int e = 0; e < topo.edge_count(); ++e) {
        for (const Rational& x : s.sets[topo.to(e)]) s.breakpoints.push_back(s.scaled[e] + x);
    }
    std::sort(s.breakpoints.begin(), s.breakpoints.end());
    s.breakpoints.erase(std::unique(s.breakpoints.begin(), s.breakpoints.end()), s.breakpoints.end());
}

template <class... T>
std::string concat(const T&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

// Bias-independent work for one weighted graph.
void prepare(Property property, const Topology& topo, const std::vector<Rational>& w, TieBreakPolicy tie, Scratch& s) {
    switch (property) {
    case Property::SophisticatedCostRatio:
        detail::backward_pass(topo, w, Rational(1), Sense::Min, tie, nullptr, s.opt);
        break;
    case Property::RewardChain:
        detail::backward_pass(topo, w, Rational(1), Sense::Min, tie, nullptr, s.opt);
        path_sets(topo, w, s);
        break;
    case Property::NaiveRewardBound:
        detail::backward_pass(topo, w, Rational(1), Sense::Max, tie, nullptr, s.opt);
        break;
    }
}

// True when the property holds; otherwise fills why. Expects prepare() on the
// same graph. No allocation on success.
bool check(Property property, const Topology& topo, const std::vector<Rational>& w, const Rational& b,
           TieBreakPolicy tie, Scratch& s, std::string& why) {
    switch (property) {
    case Property::SophisticatedCostRatio: {
        detail::backward_pass(topo, w, b, Sense::Min, tie, nullptr, s.agent);
        const Rational& co = s.opt.value[0];
        const Rational& cs = s.agent.value[0];
        if (!(b * co < cs)) return true;
        why = concat("sophisticated cost ", cs, " > b*C_o = ", b * co);
        return false;
    }
    case Property::RewardChain: {
        const Rational& co = s.opt.value[0];
        const Rational top = b * co;
        detail::scaled_costs(w, b, s.scaled);
        breakpoints(topo, s);
        const auto& bp = s.breakpoints;
        // Nothing below min over (s,v) of b*c(s,v) + C_o(v) can be perceived as worth it at s.
        Rational floor_s;
        for (int e = topo.out_begin(0); e < topo.out_end(0); ++e) {
            Rational p = s.scaled[e] + s.opt.value[topo.to(e)];
            if (e == topo.out_begin(0) || p < floor_s) floor_s = p;
        }
        const std::size_t first = static_cast<std::size_t>(std::lower_bound(bp.begin(), bp.end(), floor_s) - bp.begin());
        std::size_t rmin = bp.size();
        for (std::size_t i = first; i < bp.size(); ++i)
            if (detail::prune_pass(topo, w, s.scaled, bp[i], tie, s.table, s.live)) {
                rmin = i;
                break;
            }
        if (rmin == bp.size()) {
            why = "not traversable at any breakpoint";
            return false;
        }
        // Greedy feasibility is monotone in R, so R_d <= R^min iff it holds at R^min.
        std::size_t lo = first, hi = rmin;
        if (!detail::greedy_pass(topo, w, s.scaled, bp[hi], s.table, s.live)) {
            why = concat("no motivating path at R^min=", bp[rmin], " (C_o=", co, ")");
            return false;
        }
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (detail::greedy_pass(topo, w, s.scaled, bp[mid], s.table, s.live)) hi = mid;
            else lo = mid + 1;
        }
        const Rational& rd = bp[hi];
        const Rational& rm = bp[rmin];
        if (!(rd < co || rm < rd || top < rm)) return true;
        why = concat("chain broken: C_o=", co, " R_d=", rd, " R^min=", rm, " b*C_o=", top);
        return false;
    }
    case Property::NaiveRewardBound: {
        detail::backward_pass(topo, w, b, Sense::Max, tie, &s.opt.value, s.agent);
        const Rational& ro = s.opt.value[0];
        const Rational& rn = s.agent.value[0];
        if (!(b * rn < ro)) return true;
        why = concat("b*R_n = ", b * rn, " < R_o = ", ro);
        return false;
    }
    }
    return true;
}

std::string describe(const Topology& topo, const std::vector<Rational>& w, const Rational& b) {
    std::ostringstream out;
    out << "b=" << b << " edges:";
    for (int e = 0; e < topo.edge_count(); ++e)
        out << ' ' << topo.id(topo.from(e)) << "->" << topo.id(topo.to(e)) << '=' << w[e];
    return out.str();
}

SuiteStats run(Property property, const std::vector<Rational>& biases, int max_nodes, int max_weight,
               TieBreakPolicy tie, bool parallel) {
    std::vector<std::shared_ptr<const Topology>> topos;
    for (int n = 2; n <= max_nodes; ++n)
        for (auto& t : forward_topologies(n)) topos.push_back(std::move(t));
    const std::uint64_t base = static_cast<std::uint64_t>(max_weight) + 1;
    // prefix[i] = first global index of topology i
    std::vector<std::uint64_t> prefix{0};
    for (const auto& t : topos) prefix.push_back(prefix.back() + ipow(base, t->edge_count()));
    const std::uint64_t total = prefix.back();
    const long long graphs = static_cast<long long>(total);

    SuiteStats stats;
    stats.graphs = total;
    std::uint64_t violations = 0;
    long long first = std::numeric_limits<long long>::max();
#pragma omp parallel if (parallel) reduction(+ : violations)
    {
        Scratch s;
        std::string why;
        s.weights.reserve(32);
#pragma omp for schedule(static, 1024)
        for (long long g = 0; g < graphs; ++g) {
            const auto ug = static_cast<std::uint64_t>(g);
            std::size_t ti = static_cast<std::size_t>(std::upper_bound(prefix.begin(), prefix.end(), ug) - prefix.begin()) - 1;
            const Topology& topo = *topos[ti];
            std::uint64_t code = ug - prefix[ti];
            s.weights.resize(static_cast<std::size_t>(topo.edge_count()));
            for (int e = 0; e < topo.edge_count(); ++e) {
                s.weights[e] = Rational(static_cast<std::int64_t>(code % base));
                code /= base;
            }
            prepare(property, topo, s.weights, tie, s);
            for (std::size_t bi = 0; bi < biases.size(); ++bi) {
                if (check(property, topo, s.weights, biases[bi], tie, s, why)) continue;
                ++violations;
                const long long job = g * static_cast<long long>(biases.size()) + static_cast<long long>(bi);
#pragma omp critical(pbias_suite_first)
                if (job < first) {
                    first = job;
                    stats.first_violation = why + " [" + describe(topo, s.weights, biases[bi]) + "]";
                }
            }
        }
    }
    stats.checks = total * biases.size();
    stats.violations = violations;
    return stats;
}

} // namespace

std::vector<std::shared_ptr<const Topology>> forward_topologies(int n) {
    if (n < 2 || n > 7) throw Error(ErrorCode::PreconditionViolated, "forward_topologies supports 2..7 nodes");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::vector<NodeId> ids = small_ids(n);
    std::vector<std::shared_ptr<const Topology>> out;
    const std::uint32_t masks = 1u << pairs.size();
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
        std::vector<char> from_s(static_cast<std::size_t>(n), 0), to_t(static_cast<std::size_t>(n), 0);
        from_s[0] = 1;
        to_t[static_cast<std::size_t>(n - 1)] = 1;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((mask >> p & 1u) && from_s[pairs[p].first]) from_s[pairs[p].second] = 1;
        for (std::size_t p = pairs.size(); p-- > 0;)
            if ((mask >> p & 1u) && to_t[pairs[p].second]) to_t[pairs[p].first] = 1;
        bool all = true;
        for (int u = 0; u < n; ++u) all = all && from_s[u] && to_t[u];
        if (!all) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (mask >> p & 1u) edges.push_back(pairs[p]);
        out.push_back(Topology::build(ids, edges, nullptr));
    }
    return out;
}

std::uint64_t exhaustive_count(int n, int max_weight) {
    std::uint64_t total = 0;
    for (const auto& t : forward_topologies(n)) total += ipow(static_cast<std::uint64_t>(max_weight) + 1, t->edge_count());
    return total;
}

void for_each_small_dag(int max_nodes, int max_weight, bool rewards, const std::function<void(const Graph&)>& fn) {
    const std::uint64_t base = static_cast<std::uint64_t>(max_weight) + 1;
    for (int n = 2; n <= max_nodes; ++n)
        for (const auto& topo : forward_topologies(n)) {
            const int m = topo->edge_count();
            const std::uint64_t count = ipow(base, m);
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<Rational> w(static_cast<std::size_t>(m)), zero(static_cast<std::size_t>(m));
                std::uint64_t c = code;
                for (int e = 0; e < m; ++e) {
                    w[e] = Rational(static_cast<std::int64_t>(c % base));
                    c /= base;
                }
                fn(rewards ? Graph(topo, zero, w) : Graph(topo, w, zero));
            }
        }
}

SuiteStats run_exhaustive(Property property, const std::vector<Rational>& biases, int max_nodes, int max_weight,
                          TieBreakPolicy tie) {
    return run(property, biases, max_nodes, max_weight, tie, true);
}

SuiteStats run_exhaustive_serial(Property property, const std::vector<Rational>& biases, int max_nodes,
                                 int max_weight, TieBreakPolicy tie) {
    return run(property, biases, max_nodes, max_weight, tie, false);
}

std::vector<Graph> random_suite(const RandomSuite& suite) {
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(suite.count));
    for (int i = 1; i <= suite.count; ++i) {
        int n = 2 + (i - 1) % (suite.max_nodes - 1);
        RandomDagOptions opt;
        opt.weight_max = suite.max_weight;
        opt.costs = !suite.rewards;
        opt.rewards = suite.rewards;
        out.push_back(random_dag(suite.seed_base + static_cast<std::uint64_t>(i), n, opt));
    }
    return out;
}

} // namespace pbias::suites
