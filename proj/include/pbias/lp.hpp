#pragma once

#include <vector>

#include "pbias/rational.hpp"

namespace pbias {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LpRow {
    std::vector<Rational> coef;
    Relation rel = Relation::LessEqual;
    Rational rhs;
};

// minimize objective . x  subject to rows, x >= 0. Exact arithmetic.
struct LinearProgram {
    int variables = 0;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
};

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

// Two-phase dense simplex with Bland's rule (terminates on degenerate problems).
LpResult solve_lp(const LinearProgram& lp);

} // namespace pbias
