#pragma once

#include "chflag/rational.hpp"

#include <vector>

namespace chflag {

struct LPRow {
    RationalVector coeffs;
    Rational rhs;
};

// equalities: coeffs . x == rhs; inequalities: coeffs . x >= rhs.
struct LPProblem {
    std::size_t num_vars = 0;
    std::vector<LPRow> equalities;
    std::vector<LPRow> inequalities;
    bool nonneg = true;

    void check_dimensions() const;
    bool satisfied_by(const RationalVector& x) const;
};

enum class LPStatus { Feasible, Infeasible };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    RationalVector point;

    bool feasible() const { return status == LPStatus::Feasible; }
};

// Phase-one simplex in exact arithmetic with Bland's rule. A feasible
// answer is a basic solution that has been re-checked against every
// constraint.
LPResult lp_feasible(const LPProblem& problem);

}  // namespace chflag
