#ifndef MAGICWIN_LP_HPP
#define MAGICWIN_LP_HPP

#include <vector>

#include "magicwin/rational.hpp"

namespace magicwin {

enum class Relation { LessEq, GreaterEq, Equal };

struct LpRow {
    RatVec coeffs;
    Relation rel;
    Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value = 0;
    RatVec witness;   // an optimal point when status == Optimal
};

// Exact two-phase simplex with Bland's rule. Variables are free unless
// nonneg[j] is set (nonneg may be empty).
LpResult solve_lp(const RatVec& objective, const std::vector<LpRow>& rows, bool maximize,
                  const std::vector<bool>& nonneg = {});

}  // namespace magicwin

#endif
