// Exact rational simplex. Two entry points:
//   solve_feasibility : phase-one on A.p = b, p >= 0; on failure returns a
//                       Farkas certificate y with y^T A >= 0 and y^T b < 0.
//   lp_maximize       : max c.x subject to A_ub.x <= b_ub and 0 <= x <= 1.
// Bland's pivoting rule throughout: deterministic and cycle-free, which
// matters more than speed at the sizes handled here.
#ifndef CLIQUEPACK_SIMPLEX_HPP
#define CLIQUEPACK_SIMPLEX_HPP

#include <vector>

#include "cliquepack/rational.hpp"

namespace cliquepack {

using Matrix = std::vector<std::vector<Rational>>;  // row-major, rectangular

struct FeasibilityOutcome {
    bool feasible = false;
    std::vector<Rational> solution;     // set iff feasible; A.solution = b, solution >= 0
    std::vector<Rational> certificate;  // set iff infeasible; y^T A >= 0, y^T b < 0
};

FeasibilityOutcome solve_feasibility(const Matrix& A, const std::vector<Rational>& b);

// Exact re-check of a FeasibilityOutcome against its system, independent of
// how the outcome was produced.
bool verify_outcome(const Matrix& A, const std::vector<Rational>& b,
                    const FeasibilityOutcome& outcome);

struct LpResult {
    Rational optimum;
    std::vector<Rational> solution;
};

// Requires b_ub >= 0 componentwise (x = 0 is then feasible). When
// unit_upper_bounds is false the caller must guarantee the LP is bounded;
// the packing LPs are, since every variable appears in a pair constraint.
LpResult lp_maximize(const std::vector<Rational>& c, const Matrix& A_ub,
                     const std::vector<Rational>& b_ub, bool unit_upper_bounds = true);

}  // namespace cliquepack

#endif
