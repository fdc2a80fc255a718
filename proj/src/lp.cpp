#include "pbias/lp.hpp"

#include <stdexcept>

namespace pbias {

namespace {

struct Tableau {
    int rows = 0, cols = 0; // cols excludes the rhs column
    std::vector<std::vector<Rational>> a; // rows x (cols + 1)
    std::vector<Rational> z;             // reduced costs, size cols + 1 (last = -objective value)
    std::vector<int> basis;

    void pivot(int r, int c) {
        Rational inv = Rational(1) / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (int j = 0; j <= cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        if (!z[c].is_zero()) {
            Rational f = z[c];
            for (int j = 0; j <= cols; ++j)
                if (!a[r][j].is_zero()) z[j] -= f * a[r][j];
        }
        basis[r] = c;
    }

    void price(const std::vector<Rational>& cost) {
        z.assign(static_cast<std::size_t>(cols) + 1, Rational());
        for (int j = 0; j < cols; ++j) z[j] = cost[j];
        for (int i = 0; i < rows; ++i) {
            const Rational& cb = cost[basis[i]];
            if (cb.is_zero()) continue;
            for (int j = 0; j <= cols; ++j)
                if (!a[i][j].is_zero()) z[j] -= cb * a[i][j];
        }
    }

    // Returns false when unbounded. allowed[j] == 0 excludes a column from entering.
    bool run(const std::vector<char>& allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (allowed[j] && z[j].sign() < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows; ++i) {
                if (a[i][enter].sign() <= 0) continue;
                Rational ratio = a[i][cols] / a[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult solve_lp(const LinearProgram& lp) {
    const int n = lp.variables;
    const int m = static_cast<int>(lp.rows.size());
    std::vector<LpRow> rows = lp.rows;
    for (auto& r : rows) {
        if (static_cast<int>(r.coef.size()) != n) throw std::invalid_argument("lp row width mismatch");
        if (r.rhs.sign() < 0) {
            for (auto& v : r.coef) v = -v;
            r.rhs = -r.rhs;
            if (r.rel == Relation::LessEqual) r.rel = Relation::GreaterEqual;
            else if (r.rel == Relation::GreaterEqual) r.rel = Relation::LessEqual;
        }
    }
    int slack = 0, artificial = 0;
    for (const auto& r : rows) {
        if (r.rel != Relation::Equal) ++slack;
        if (r.rel != Relation::LessEqual) ++artificial;
    }
    Tableau t;
    t.rows = m;
    t.cols = n + slack + artificial;
    t.a.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(t.cols) + 1));
    t.basis.assign(static_cast<std::size_t>(m), -1);
    int next_slack = n, next_art = n + slack;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.a[i][j] = rows[i].coef[j];
        t.a[i][t.cols] = rows[i].rhs;
        if (rows[i].rel == Relation::LessEqual) {
            t.a[i][next_slack] = Rational(1);
            t.basis[i] = next_slack++;
        } else {
            if (rows[i].rel == Relation::GreaterEqual) t.a[i][next_slack++] = Rational(-1);
            t.a[i][next_art] = Rational(1);
            t.basis[i] = next_art++;
        }
    }

    LpResult result;
    std::vector<char> allowed(static_cast<std::size_t>(t.cols), 1);
    if (artificial > 0) {
        std::vector<Rational> phase1(static_cast<std::size_t>(t.cols));
        for (int j = n + slack; j < t.cols; ++j) phase1[j] = Rational(1);
        t.price(phase1);
        t.run(allowed);
        if (t.z[t.cols].sign() != 0) {
            result.status = LpResult::Status::Infeasible;
            return result;
        }
        // Drive remaining artificials out of the basis; drop redundant rows.
        for (int i = 0; i < t.rows; ++i) {
            if (t.basis[i] < n + slack) continue;
            int c = -1;
            for (int j = 0; j < n + slack; ++j)
                if (!t.a[i][j].is_zero()) {
                    c = j;
                    break;
                }
            if (c >= 0) {
                t.pivot(i, c);
            } else {
                t.a.erase(t.a.begin() + i);
                t.basis.erase(t.basis.begin() + i);
                --t.rows;
                --i;
            }
        }
        for (int j = n + slack; j < t.cols; ++j) allowed[j] = 0;
    }
    std::vector<Rational> cost(static_cast<std::size_t>(t.cols));
    for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
    t.price(cost);
    if (!t.run(allowed)) {
        result.status = LpResult::Status::Unbounded;
        return result;
    }
    result.status = LpResult::Status::Optimal;
    result.x.assign(static_cast<std::size_t>(n), Rational());
    for (int i = 0; i < t.rows; ++i)
        if (t.basis[i] < n) result.x[t.basis[i]] = t.a[i][t.cols];
    for (int j = 0; j < n; ++j) result.value += lp.objective[j] * result.x[j];
    return result;
}

} // namespace pbias
