#include "pbias/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace pbias {

namespace {

[[noreturn]] void violated(const std::string& family, const std::string& what) {
    throw Error(ErrorCode::ParameterConstraintViolated, family + ": " + what);
}

class Params {
public:
    Params(const FixtureSpec& spec, std::map<std::string, Rational>& resolved)
        : spec_(spec), resolved_(resolved) {}

    Rational rational(const std::string& key, const Rational& fallback) {
        used_.insert(key);
        auto it = spec_.params.find(key);
        Rational v = fallback;
        if (it != spec_.params.end()) {
            try {
                v = Rational::parse(it->second);
            } catch (const std::invalid_argument&) {
                throw Error(ErrorCode::InvalidInput,
                            spec_.family + ": parameter " + key + " is not a rational: " + it->second);
            }
        }
        resolved_[key] = v;
        return v;
    }

    int integer(const std::string& key, int fallback) {
        Rational v = rational(key, Rational(fallback));
        if (!v.is_integer() || v < Rational(-1000000) || v > Rational(1000000))
            throw Error(ErrorCode::InvalidInput, spec_.family + ": parameter " + key + " must be an integer");
        return std::stoi(v.numerator());
    }

    bool given(const std::string& key) const { return spec_.params.count(key) != 0; }
    std::string raw(const std::string& key) const {
        auto it = spec_.params.find(key);
        return it == spec_.params.end() ? std::string() : it->second;
    }
    void mark(const std::string& key) { used_.insert(key); }
    void resolve(const std::string& key, const Rational& value) { resolved_[key] = value; }

    // Rejects parameters the family does not take.
    void finish() const {
        for (const auto& [key, value] : spec_.params)
            if (!used_.count(key))
                throw Error(ErrorCode::InvalidInput, spec_.family + ": unknown parameter " + key);
    }

private:
    const FixtureSpec& spec_;
    std::map<std::string, Rational>& resolved_;
    std::set<std::string> used_;
};

std::string indexed(const std::string& stem, int i) { return stem + std::to_string(i); }

std::string padded(int i, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*d", width, i);
    return buf;
}

GraphSpec base(std::vector<NodeId> nodes) {
    GraphSpec g;
    g.nodes = std::move(nodes);
    g.source = "s";
    g.target = "t";
    return g;
}

struct Built {
    GraphSpec spec;
    std::optional<TieBreakPolicy> tie;
    std::string provenance;
};

using Builder = std::function<Built(Params&, const std::string&)>;

Built one_fan(Params& p, const std::string& f) {
    Rational c = p.rational("c", Rational(3, 2));
    Rational b = p.rational("b", Rational(2));
    if (!(Rational(1) < c && c < b)) violated(f, "requires 1 < c < b");
    GraphSpec g = base({"s", "v1", "t"});
    g.edge("s", "v1", 0).edge("s", "t", 1).edge("v1", "t", c);
    return {g, std::nullopt, "two-period task fan"};
}

Built two_fan(Params& p, const std::string& f) {
    Rational c = p.rational("c", Rational(3, 2));
    Rational b = p.rational("b", Rational(2));
    if (!(Rational(1) < c && c < b && b < c * c)) violated(f, "requires 1 < c < b < c^2");
    GraphSpec g = base({"s", "v1", "v2", "t"});
    g.edge("s", "v1", 0).edge("s", "t", 1).edge("v1", "t", c).edge("v1", "v2", 0).edge("v2", "t", c * c);
    return {g, std::nullopt, "three-period task fan"};
}

Built change(Params&, const std::string&) {
    GraphSpec g = base({"s", "u", "v", "w", "t"});
    g.edge("s", "u", 3).edge("s", "v", 1).edge("u", "t", 2).edge("v", "w", 0).edge("v", "t", 5).edge("w", "t", 49);
    return {g, std::nullopt, "path choice changing with the bias"};
}

Built sophnaive(Params& p, const std::string& f) {
    Rational x = p.rational("x", Rational(1000));
    Rational b = p.rational("b", Rational(2));
    Rational eps = p.rational("eps", Rational(1, 100));
    if (!(b > Rational(1))) violated(f, "requires b > 1");
    if (x.sign() < 0) violated(f, "requires x >= 0");
    if (!(eps.sign() > 0 && eps < (b - Rational(1)) / Rational(2))) violated(f, "requires 0 < eps < (b-1)/2");
    GraphSpec g = base({"s", "u", "v", "w", "t"});
    g.edge("s", "u", x).edge("s", "w", 0).edge("u", "t", 1).edge("u", "v", 0).edge("v", "t", b - eps)
        .edge("w", "t", b * x + b - Rational(2) * eps);
    return {g, std::nullopt, "sophisticated versus naive worst case"};
}

Built followp(Params&, const std::string&) {
    GraphSpec g = base({"s", "u", "v", "w", "t"});
    g.edge("s", "u", 2).edge("u", "t", 2).edge("u", "v", 0).edge("v", "t", 3).edge("v", "w", 0).edge("w", "t", 5);
    return {g, std::nullopt, "reward chooses the followed path"};
}

Built non_monotone(Params&, const std::string&) {
    GraphSpec g = base({"s", "v", "w", "t"});
    g.edge("s", "v", 3).edge("v", "w", 0).edge("v", "t", 3).edge("w", "t", 5);
    return {g, std::nullopt, "non-monotone traversability"};
}

Built counter_impl(Params& p, const std::string& f, bool from_w0) {
    int n = p.integer("n", 3);
    Rational c = p.rational("c", Rational(8, 5));
    if (n < 1) violated(f, "requires n >= 1");
    if (!(c > Rational(1))) violated(f, "requires c > 1");
    Rational forced = (Rational(1) + c) / c;
    if (p.given("b")) {
        Rational b = p.rational("b", forced);
        if (b != forced) violated(f, "requires 1 + c = b*c");
    }
    p.rational("b", forced);
    if (forced < c) violated(f, "requires b >= c, i.e. c^2 <= 1 + c");
    std::vector<NodeId> nodes{"s"};
    for (int i = 0; i < n; ++i) nodes.push_back(indexed("v", i));
    for (int i = 0; i < n; ++i) nodes.push_back(indexed("w", i));
    nodes.push_back("t");
    GraphSpec g = base(nodes);
    g.edge("s", "v0", 0);
    Rational pw(1);
    for (int i = 0; i < n; ++i) {
        NodeId vi = indexed("v", i), wi = indexed("w", i);
        NodeId next = i + 1 < n ? indexed("v", i + 1) : NodeId("t");
        g.edge(vi, next, pw).edge(vi, wi, 0).edge(wi, next, c * pw);
        pw = pw * Rational(2);
    }
    if (from_w0) g.source = "w0";
    return {g, std::nullopt, from_w0 ? "binary counter restarted at w0" : "binary counter"};
}

Built counter(Params& p, const std::string& f) { return counter_impl(p, f, false); }
Built counter_w0(Params& p, const std::string& f) { return counter_impl(p, f, true); }

Built rtight(Params& p, const std::string& f) {
    Rational b = p.rational("b", Rational(2));
    int n = p.integer("n", 4);
    Rational eps = p.rational("eps", Rational(1, 100));
    if (!(b > Rational(1))) violated(f, "requires b > 1");
    if (n < 1) violated(f, "requires n >= 1");
    if (!(eps.sign() > 0 && eps < Rational(1))) violated(f, "requires 0 < eps < 1");
    Rational total = b * (Rational(1) - eps);
    int m;
    p.mark("m");
    if (p.raw("m") == "auto") {
        // smallest m with sub-edge cost total/m <= eps
        Rational q = total / eps;
        mpq_class qq = q.to_mpq();
        mpz_class ceil_q;
        mpz_cdiv_q(ceil_q.get_mpz_t(), qq.get_num_mpz_t(), qq.get_den_mpz_t());
        if (ceil_q > 100000) violated(f, "m=auto exceeds 100000 sub-edges");
        m = static_cast<int>(ceil_q.get_si());
        p.resolve("m", Rational(m));
    } else {
        m = p.integer("m", 100);
    }
    if (m < 1) violated(f, "requires m >= 1");
    std::vector<NodeId> chain{"s"};
    for (int i = 1; i <= n; ++i) chain.push_back(indexed("v", i));
    chain.push_back("t");
    GraphSpec g = base(chain);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        g.edge(chain[i], chain[i + 1], 1);
        add_snake(g, chain[i], chain[i + 1], total, m, chain[i] + "_z");
    }
    return {g, std::nullopt, "tightness chain with snake edges"};
}

Built min_inf_g1(Params&, const std::string&) {
    GraphSpec g = base({"s", "t"});
    g.edge("s", "t", 1);
    return {g, std::nullopt, "single edge"};
}

Built min_inf_g2(Params& p, const std::string& f) {
    Rational delta = p.rational("perturb", Rational(0));
    if (delta.sign() < 0 || !(delta < Rational(6))) violated(f, "requires 0 <= perturb < 6");
    GraphSpec g = base({"s", "u", "v", "w", "t"});
    g.edge("s", "u", 2).edge("u", "v", 4).edge("v", "w", 0).edge("v", "t", 3).edge("w", "t", Rational(6) - delta);
    std::optional<TieBreakPolicy> tie;
    if (delta.is_zero()) tie = TieBreakPolicy::PreferLaterSuccessorId;
    return {g, tie, "sophisticated cost above the minimal reward"};
}

Built rewarddist(Params&, const std::string&) {
    GraphSpec g = base({"s", "u", "v", "w", "t"});
    g.edge("s", "u", 8).edge("u", "w", 10).edge("u", "v", 5).edge("v", "w", 6).edge("w", "t", 10);
    return {g, std::nullopt, "edge deletion versus reward distribution"};
}

Built rewarddist_prime(Params&, const std::string&) {
    GraphSpec g = base({"s", "u", "w", "t"});
    g.edge("s", "u", 8).edge("u", "w", 10).edge("w", "t", 10);
    return {g, std::nullopt, "edge deletion versus reward distribution, v deleted"};
}

Built optpart(Params& p, const std::string& f) {
    Rational b = p.rational("b", Rational(2));
    Rational bp = p.rational("b_prime", Rational(3, 2));
    int n = p.integer("n", 4);
    Rational delta = p.rational("perturb", Rational(0));
    if (!(Rational(1) < bp && bp < b)) violated(f, "requires 1 < b_prime < b");
    if (n < 1) violated(f, "requires n >= 1");
    if (delta.sign() < 0) violated(f, "requires perturb >= 0");
    std::vector<NodeId> nodes{"s"};
    for (int i = 1; i <= n; ++i) nodes.push_back(indexed("v", i));
    nodes.push_back("t");
    GraphSpec g = base(nodes);
    g.edge("s", "t", 1).edge("s", "v1", 0);
    for (int i = 1; i <= n; ++i) {
        // perturb shifts the direct edges by delta*(b+1)^(i-1) so continuing wins strictly
        Rational w = Rational::pow(b, i) - delta * Rational::pow(b + Rational(1), i - 1);
        if (w.sign() < 0) violated(f, "perturb too large, direct edge cost negative");
        g.edge(indexed("v", i), "t", w);
        if (i < n) g.edge(indexed("v", i), indexed("v", i + 1), 0);
    }
    std::optional<TieBreakPolicy> tie;
    if (delta.is_zero()) tie = TieBreakPolicy::PreferLaterSuccessorId;
    return {g, tie, "optimistic partially naive fan"};
}

Built pessimist(Params& p, const std::string& f) {
    Rational b = p.rational("b", Rational(2));
    Rational bp = p.rational("b_prime", Rational(3));
    Rational eps = p.rational("eps", Rational(1, 10));
    Rational delta = p.rational("perturb", Rational(0));
    if (!(Rational(1) < b && b < bp)) violated(f, "requires 1 < b < b_prime");
    if (!(eps.sign() > 0 && eps < bp)) violated(f, "requires 0 < eps < b_prime");
    if (!(delta.sign() >= 0 && delta < eps)) violated(f, "requires 0 <= perturb < eps");
    GraphSpec g = base({"s", "u", "v", "w", "t"});
    g.edge("s", "u", 0).edge("s", "w", 0).edge("u", "t", 1).edge("u", "v", 0).edge("v", "t", bp - delta)
        .edge("w", "t", bp - eps);
    std::optional<TieBreakPolicy> tie;
    if (delta.is_zero()) tie = TieBreakPolicy::PreferLaterSuccessorId;
    return {g, tie, "pessimistic partially naive worst case"};
}

Built future(Params& p, const std::string& f) {
    Rational b = p.rational("b", Rational(1, 2));
    if (!(b.sign() > 0 && b < Rational(1))) violated(f, "requires 0 < b < 1");
    GraphSpec g = base({"s", "v", "t"});
    g.edge("s", "t", Rational(1) / b).edge("s", "v", 0).edge("v", "t", 1);
    return {g, std::nullopt, "future-biased worst case"};
}

Built internal_ratio(Params& p, const std::string& f) {
    Rational b = p.rational("b", Rational(3));
    int n = p.integer("n", 3);
    int m = p.integer("m", 100);
    if (!(b > Rational(1))) violated(f, "requires b > 1");
    if (n < 2) violated(f, "requires n >= 2");
    if (m < 1) violated(f, "requires m >= 1");
    InternalRatioTerms terms = internal_ratio_terms(b, n);
    std::vector<NodeId> nodes{"s"};
    for (int i = 1; i <= n; ++i) nodes.push_back(indexed("v", i));
    nodes.push_back("t");
    GraphSpec g = base(nodes);
    g.edge("s", "v1", terms.y[0]);
    for (int i = 1; i < n; ++i) {
        NodeId a = indexed("v", i), c = indexed("v", i + 1);
        g.edge(a, c, terms.y[static_cast<std::size_t>(i)]);
        add_snake(g, a, c, terms.p[static_cast<std::size_t>(i)], m, indexed("z", i) + "_");
    }
    g.edge(indexed("v", n), "t", terms.y[static_cast<std::size_t>(n)]);
    return {g, std::nullopt, "chain where internal rewards cost about twice deletion"};
}

Built fan(Params& p, const std::string& f) {
    Rational c = p.rational("c", Rational(7, 5));
    Rational b = p.rational("b", Rational(3, 2));
    int n = p.integer("n", 4);
    if (!(Rational(1) < c && c < b)) violated(f, "requires 1 < c < b");
    if (n < 1) violated(f, "requires n >= 1");
    std::vector<NodeId> nodes{"s"};
    for (int i = 1; i <= n; ++i) nodes.push_back(indexed("v", i));
    nodes.push_back("t");
    GraphSpec g = base(nodes);
    g.edge("s", "t", 0, 1).edge("s", "v1", 0, 0);
    for (int i = 1; i <= n; ++i) {
        g.edge(indexed("v", i), "t", 0, Rational::pow(c, i));
        if (i < n) g.edge(indexed("v", i), indexed("v", i + 1), 0, 0);
    }
    return {g, std::nullopt, "reward fan"};
}

Built planning_bad(Params& p, const std::string& f) {
    Rational b = p.rational("b", Rational(3));
    int n = p.integer("n", 4);
    if (!(b > Rational(1))) violated(f, "requires b > 1");
    Rational base_x = b * (b - Rational(1)) / (Rational(2) * b - Rational(1));
    if (!(base_x > Rational(1))) violated(f, "requires b(b-1)/(2b-1) > 1");
    if (n < 1) violated(f, "requires n >= 1");
    std::vector<NodeId> nodes{"s"};
    for (int i = 1; i <= n; ++i) nodes.push_back(indexed("v", i));
    nodes.push_back("t");
    GraphSpec g = base(nodes);
    g.edge("s", "t", 0, 1).edge("s", "v1", 0, 0);
    for (int i = 1; i <= n; ++i) {
        g.edge(indexed("v", i), "t", 0, Rational::pow(base_x, i));
        if (i < n) g.edge(indexed("v", i), indexed("v", i + 1), 0, 0);
    }
    return {g, std::nullopt, "fan where planning rewards do not help"};
}

Built zero_bad(Params& p, const std::string& f) {
    Rational b = p.rational("b", Rational(2));
    int n = p.integer("n", 4);
    Rational delta = p.rational("perturb", Rational(0));
    if (!(b > Rational(1))) violated(f, "requires b > 1");
    if (n < 1) violated(f, "requires n >= 1");
    if (delta.sign() < 0) violated(f, "requires perturb >= 0");
    std::vector<NodeId> nodes{"s"};
    for (int i = 1; i <= n; ++i) {
        nodes.push_back(indexed("u", i));
        nodes.push_back(indexed("v", i));
    }
    nodes.push_back("t");
    GraphSpec g = base(nodes);
    Rational exit = Rational(1) + delta;
    g.edge("s", "u1", 0, 0).edge("s", "t", 0, exit);
    for (int i = 1; i <= n; ++i) {
        g.edge(indexed("u", i), indexed("v", i), 0, b - Rational(1));
        g.edge(indexed("v", i), "t", 0, exit);
        if (i < n) g.edge(indexed("v", i), indexed("u", i + 1), 0, 0);
    }
    std::optional<TieBreakPolicy> tie;
    if (delta.is_zero()) tie = TieBreakPolicy::MaxImmediateEdgeWeight;
    return {g, tie, "gadget chain where one zero edge gains little"};
}

struct Family {
    FamilyInfo info;
    Builder build;
};

const std::vector<Family>& families() {
    static const std::vector<Family> all = {
        {{"one-fan", "c=3/2 b=2", "1 < c < b", "s->t cost 1, s->v1->t costs 0 and c"}, one_fan},
        {{"two-fan", "c=3/2 b=2", "1 < c < b < c^2", "three-period fan with costs 1, c, c^2"}, two_fan},
        {{"change", "", "", "sophisticated path changes with b"}, change},
        {{"sophnaive", "x=1000 b=2 eps=1/100", "b > 1, x >= 0, 0 < eps < (b-1)/2",
          "sophisticated pays about b times naive"}, sophnaive},
        {{"followp", "", "", "reward at t selects the followed path"}, followp},
        {{"non-monotone", "", "", "traversable at 9 and 11 but not 10 (b=2)"}, non_monotone},
        {{"counter", "n=3 c=8/5 [b=(1+c)/c]", "c > 1, 1 + c = b*c, b >= c, n >= 1",
          "binary counter with 2^n distinct reward-selected paths"}, counter},
        {{"counter-w0", "n=3 c=8/5 [b=(1+c)/c]", "as counter",
          "binary counter with source w0"}, counter_w0},
        {{"rtight", "b=2 n=4 eps=1/100 m=100|auto", "b > 1, n >= 1, 0 < eps < 1, m >= 1",
          "unit edges with snake bypasses of total b(1-eps)"}, rtight},
        {{"min-inf-reward-g1", "", "", "single unit edge"}, min_inf_g1},
        {{"min-inf-reward-g2", "perturb=0", "0 <= perturb < 6",
          "sophisticated cost 12 above minimal reward 11 (b=2)"}, min_inf_g2},
        {{"rewarddist", "", "", "G: deletion beats internal rewards (b=4)"}, rewarddist},
        {{"rewarddist-prime", "", "", "G with v deleted"}, rewarddist_prime},
        {{"optpart", "b=2 b_prime=3/2 n=4 perturb=0", "1 < b_prime < b, n >= 1, perturb >= 0",
          "optimistic partially naive pays b^n"}, optpart},
        {{"pessimist", "b=2 b_prime=3 eps=1/10 perturb=0", "1 < b < b_prime, 0 < eps < b_prime, 0 <= perturb < eps",
          "pessimistic partially naive pays b_prime - eps"}, pessimist},
        {{"future", "b=1/2", "0 < b < 1", "future-biased pays 1/b"}, future},
        {{"internal-ratio", "b=3 n=3 m=100", "b > 1, n >= 2, m >= 1",
          "internal rewards need close to twice R_d"}, internal_ratio},
        {{"fan", "c=7/5 b=3/2 n=4", "1 < c < b, n >= 1",
          "reward fan s->v1->...->vn with vi->t reward c^i"}, fan},
        {{"planning-bad", "b=3 n=4", "b(b-1)/(2b-1) > 1, n >= 1",
          "fan with rewards (b(b-1)/(2b-1))^i"}, planning_bad},
        {{"zero-bad", "b=2 n=4 perturb=0", "b > 1, n >= 1, perturb >= 0",
          "gadget chain with reward b-1 per gadget"}, zero_bad},
    };
    return all;
}

} // namespace

const std::vector<FamilyInfo>& fixture_families() {
    static const std::vector<FamilyInfo> infos = [] {
        std::vector<FamilyInfo> out;
        for (const auto& f : families()) out.push_back(f.info);
        return out;
    }();
    return infos;
}

void add_snake(GraphSpec& spec, const NodeId& from, const NodeId& to, const Rational& total, int m,
               const std::string& prefix) {
    if (m < 1) throw Error(ErrorCode::ParameterConstraintViolated, "snake needs m >= 1");
    Rational piece = total / Rational(m);
    int width = static_cast<int>(std::to_string(m).size());
    NodeId prev = from;
    for (int k = 1; k < m; ++k) {
        NodeId mid = prefix + padded(k, width);
        spec.nodes.push_back(mid);
        spec.edge(prev, mid, piece);
        prev = mid;
    }
    spec.edge(prev, to, piece);
}

InternalRatioTerms internal_ratio_terms(const Rational& b, int n) {
    InternalRatioTerms t;
    Rational ratio = b / (b - Rational(1));
    t.y.resize(static_cast<std::size_t>(n) + 1);
    t.p.assign(static_cast<std::size_t>(n) + 1, Rational());
    t.d.assign(static_cast<std::size_t>(n) + 1, Rational());
    for (int i = 0; i <= n; ++i) t.y[static_cast<std::size_t>(i)] = Rational::pow(ratio, i);
    for (int i = 1; i <= n; ++i) {
        auto k = static_cast<std::size_t>(i);
        t.p[k] = i == 1 ? (b + Rational(1)) * t.y[1] / Rational(2) : t.y[k] + t.p[k - 1] / Rational(2);
        t.d[k] = b * t.y[k] - t.p[k];
    }
    return t;
}

EdgeRewards internal_ratio_placement(const Rational& b, int n) {
    InternalRatioTerms t = internal_ratio_terms(b, n);
    EdgeRewards r;
    r[{indexed("v", n), "t"}] = b * t.y[static_cast<std::size_t>(n)];
    r[{indexed("v", n - 1), indexed("v", n)}] = t.d[static_cast<std::size_t>(n - 1)];
    return r;
}

Fixture generate(const FixtureSpec& spec) {
    const auto& all = families();
    auto it = std::find_if(all.begin(), all.end(), [&](const Family& f) { return f.info.name == spec.family; });
    if (it == all.end()) throw Error(ErrorCode::UnknownFamily, "unknown fixture family: " + spec.family);
    std::map<std::string, Rational> resolved;
    Params params(spec, resolved);
    Built built = it->build(params, spec.family);
    params.finish();
    Graph g = validate(built.spec);
    return Fixture{std::move(g), spec, std::move(resolved), built.tie, built.provenance};
}

Fixture generate(const std::string& family, const std::map<std::string, std::string>& params) {
    return generate(FixtureSpec{family, params});
}

Graph random_dag(std::uint64_t seed, int n, const RandomDagOptions& options) {
    if (n < 2) throw Error(ErrorCode::PreconditionViolated, "random_dag needs n >= 2");
    if (options.weight_min < 0 || options.weight_max < options.weight_min)
        throw Error(ErrorCode::PreconditionViolated, "random_dag needs 0 <= weight_min <= weight_max");
    std::mt19937_64 rng(seed);
    int width = static_cast<int>(std::to_string(n).size());
    std::vector<NodeId> ids(static_cast<std::size_t>(n));
    ids.front() = "s";
    ids.back() = "t";
    for (int i = 1; i + 1 < n; ++i) ids[static_cast<std::size_t>(i)] = "n" + padded(i, width);

    // Layers: 0 holds s, the last holds t, interior nodes are assigned in order.
    int interior = n - 2;
    int layers = interior == 0 ? 0 : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(interior));
    std::vector<int> layer(static_cast<std::size_t>(n), 0);
    for (int i = 1; i + 1 < n; ++i)
        layer[static_cast<std::size_t>(i)] = 1 + static_cast<int>((static_cast<long long>(i - 1) * layers) / interior);
    layer.back() = layers + 1;

    mpq_class density = options.density.to_mpq();
    auto coin = [&]() {
        if (options.density.sign() <= 0) return false;
        if (options.density >= Rational(1)) return true;
        std::uint64_t d = density.get_den().get_ui(), k = density.get_num().get_ui();
        return rng() % d < k;
    };
    std::uniform_int_distribution<std::int64_t> weight(options.weight_min, options.weight_max);

    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (layer[static_cast<std::size_t>(i)] < layer[static_cast<std::size_t>(j)])
                adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coin() ? 1 : 0;
    // Every non-source node gets a predecessor and every non-target node a successor.
    for (int j = 1; j < n; ++j) {
        bool has = false;
        for (int i = 0; i < j; ++i) has = has || adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!has) {
            std::vector<int> earlier;
            for (int i = 0; i < j; ++i)
                if (layer[static_cast<std::size_t>(i)] < layer[static_cast<std::size_t>(j)]) earlier.push_back(i);
            int pick = earlier[static_cast<std::size_t>(rng() % earlier.size())];
            adj[static_cast<std::size_t>(pick)][static_cast<std::size_t>(j)] = 1;
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        bool has = false;
        for (int j = i + 1; j < n; ++j) has = has || adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!has) {
            std::vector<int> later;
            for (int j = i + 1; j < n; ++j)
                if (layer[static_cast<std::size_t>(i)] < layer[static_cast<std::size_t>(j)]) later.push_back(j);
            int pick = later[static_cast<std::size_t>(rng() % later.size())];
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(pick)] = 1;
        }
    }

    GraphSpec spec;
    spec.nodes = ids;
    spec.source = "s";
    spec.target = "t";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                Rational c = options.costs ? Rational(weight(rng)) : Rational();
                Rational r = options.rewards ? Rational(weight(rng)) : Rational();
                spec.edge(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)], c, r);
            }
    return validate(spec);
}

} // namespace pbias
