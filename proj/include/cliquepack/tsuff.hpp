// The parametric 3-equation system attached to a clique size k and a degree
// set S: one column per index i outside S, polynomial coefficients in the
// parameter x, right-hand side (1,1,1). Feasibility of the system for every
// x in (0,1) is the sufficient avoidability condition this toolkit decides,
// by exact rational sweeps or by an exact semialgebraic region computation.
#ifndef CLIQUEPACK_TSUFF_HPP
#define CLIQUEPACK_TSUFF_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliquepack/families.hpp"
#include "cliquepack/polynomial.hpp"
#include "cliquepack/simplex.hpp"
#include "cliquepack/sturm.hpp"

namespace cliquepack {

struct ParametricSystem {
    int k = 0;
    DegreeSet S;
    std::vector<int> indices;                      // {0..k-1} \ S, ascending
    std::array<std::vector<Polynomial>, 3> rows;   // rows[r][column]
    size_t columns() const { return indices.size(); }
};

// Row r, column index i:
//   r = 0:  x^(i-2)/(i-2)! * (1-x)^(k-1-i)/(k-1-i)!
//   r = 1:  x^i    /i!     * (1-x)^(k-3-i)/(k-3-i)!
//   r = 2:  x^(i-1)/(i-1)! * (1-x)^(k-2-i)/(k-2-i)!
// with the convention that a negative factorial argument kills the term.
// Requires 3 <= k <= 25 and S a proper subset of {0..k-1}.
ParametricSystem build_system(int k, const DegreeSet& S);

// Exact feasibility of the system at a fixed rational x in (0,1).
FeasibilityOutcome check_at(const ParametricSystem& sys, const Rational& x);

struct GridPoint {
    Rational x;
    FeasibilityOutcome outcome;
};

// Interval endpoint: a rational, or a real algebraic number given by its
// defining polynomial and an isolating interval.
struct RegionEndpoint {
    bool is_rational = true;
    Rational value;                     // exact, when rational
    Polynomial poly;                    // defining polynomial otherwise
    Rational enclosure_lo, enclosure_hi;
    std::string approx;                 // decimal display, non-rational case
    std::string str() const;
};

struct RegionInterval {
    RegionEndpoint lo, hi;
    bool lo_closed = false, hi_closed = false;
    bool feasible = false;
    // Certificate at a rational sample inside the interval, when one exists
    // (singleton algebraic intervals carry no rational sample).
    std::optional<Rational> sample;
    std::optional<FeasibilityOutcome> sample_outcome;
    std::string str() const;  // e.g. "(0, 1/2]"
};

struct RegionReport {
    enum class Mode { grid, exact };
    Mode mode = Mode::grid;
    int k = 0;
    DegreeSet S;
    bool holds_for_all = false;          // over all sampled points / all of (0,1)
    std::optional<Rational> failure_witness;
    std::vector<GridPoint> points;       // grid mode
    std::vector<RegionInterval> intervals;  // exact mode
    std::vector<std::string> notes;      // e.g. skipped singular supports
};

// Solve at x = j/D for j = 1..D-1. With stop_at_first_failure the sweep ends
// at the smallest failing j (the verdict is identical either way).
RegionReport grid_sweep(const ParametricSystem& sys, long denominator, int threads = 1,
                        bool stop_at_first_failure = false);

// Exact feasibility region within (0,1) via basic-support enumeration and
// root isolation; decides every boundary point exactly.
RegionReport exact_region(const ParametricSystem& sys);

enum class SweepMode { grid, exact };

// All inclusion-maximal S for which the system is feasible for every x (per
// the chosen mode), ordered by size then lexicographically.
std::vector<DegreeSet> maximal_sets(int k, SweepMode mode, long grid_denominator = 1000,
                                    int threads = 1);

// The two polynomial identities behind the Eulerian case S = {2,4,...,k-3}:
// f1 = f3 and f2 - f1 = (1-2x)^(k-3)/(k-3)!. Odd k >= 5.
struct EulerianIdentityReport {
    int k = 0;
    Polynomial f1, f2, f3;
    bool f1_equals_f3 = false;
    bool f2_minus_f1_matches = false;
    bool all_hold() const { return f1_equals_f3 && f2_minus_f1_matches; }
};
EulerianIdentityReport eulerian_identities(int k);

// The three linear-dependence relations among the six coefficient rows
// (e1)..(e6) at a fixed rational x in (0,1), checked componentwise over the
// full index set i = 0..k-1.
struct DependenceReport {
    int k = 0;
    Rational x;
    bool e3_relation = false;  // e3 = (k-1)/(1-x) e1 - x/(1-x) e2
    bool e5_relation = false;  // e5 = (k-1)(k-2)/(1-x)^2 e1 - 2x(k-2)/(1-x)^2 e2 + x^2/(1-x)^2 e4
    bool e6_relation = false;  // e6 = (k-2)/(1-x) e2 - x/(1-x) e4
    bool all_hold() const { return e3_relation && e5_relation && e6_relation; }
};
DependenceReport dependence_identities(int k, const Rational& x);

}  // namespace cliquepack

#endif
