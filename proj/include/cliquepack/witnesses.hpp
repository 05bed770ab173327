// Unavoidability witness colorings and their closed-form counting checks:
// the star construction (forces a red K_{1,k-1}), the bipartition coloring
// (red K_{2,3} / K_{3,4}), the four-part construction (red K_4 minus an
// edge), the complete-bipartite blue coloring behind the C_4 decomposition
// obstruction, and the fractional-packing deficit reports.
#ifndef CLIQUEPACK_WITNESSES_HPP
#define CLIQUEPACK_WITNESSES_HPP

#include <vector>

#include "cliquepack/packing.hpp"

namespace cliquepack {

enum class WitnessKind { star, bipartition, four_part, c4_decomposition };

struct WitnessSpec {
    WitnessKind kind = WitnessKind::star;
    int n = 0;
    // star: {|A|} (blue = clique on B).
    // bipartition: {|A|} (blue = cliques on A and on B, red across).
    // four_part: {|A1|,|A2|,|A3|,|A4|} (blue = four cliques plus E(A1,A2)).
    // c4_decomposition: empty (parts of sizes ceil(n/2), floor(n/2); blue across).
    std::vector<int> part_sizes;
};

Coloring build_witness(const WitnessSpec& spec);

struct C4BudgetReport {
    int n = 0;
    long blue_edges = 0;  // floor(n^2/4)
    long blocks = 0;      // n(n-1)/12
    long budget = 0;      // 3 * blocks
    bool infeasible = false;
};

// The counting obstruction to decomposing the complete-bipartite blue
// coloring of K_n into K_4 blocks with no blue C_4: each admissible block
// carries at most 3 blue edges. Requires n = 1 or 4 (mod 12).
C4BudgetReport c4_budget_check(int n);

struct StarBudgetReport {
    int k = 0;
    Rational alpha;
    long n = 0;
    Rational lhs;         // C(floor(alpha n), 2) * k^2/4
    Rational mid;         // (alpha^2/2) n^2 (k^2/4)
    Rational rhs;         // alpha(1-alpha) n^2
    bool chain_holds = false;  // lhs < mid < rhs
    Rational margin;      // rhs - lhs
    long n0 = 0;          // margin positive for every n >= n0 (exact, idealized |A| = alpha n)
};

// Finite evaluation of the star-construction inequality chain; requires
// 0 < alpha < 8/(k^2+8).
StarBudgetReport star_budget_check(int k, const Rational& alpha, long n);

struct DeficitReport {
    Rational nu_star_allowed;
    Rational perfect_bound;  // C(n,2)/C(k,2)
    Rational deficit;        // perfect_bound - nu_star_allowed, always >= 0
    NuStarResult details;
};

// Fractional packing deficit when the forbidden classes are removed from
// C(k) on the given coloring.
DeficitReport lp_deficit_report(const Coloring& coloring, const GraphFamily& forbidden, int k);

}  // namespace cliquepack

#endif
