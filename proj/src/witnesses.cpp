#include "cliquepack/witnesses.hpp"

#include <numeric>
#include <stdexcept>

namespace cliquepack {

namespace {

std::vector<int> part_boundaries(int n, const std::vector<int>& sizes) {
    for (int s : sizes)
        if (s < 0) throw std::invalid_argument("witness: negative part size");
    if (std::accumulate(sizes.begin(), sizes.end(), 0) != n)
        throw std::invalid_argument("witness: part sizes must sum to n");
    std::vector<int> bounds{0};
    for (int s : sizes) bounds.push_back(bounds.back() + s);
    return bounds;
}

void add_clique(Graph& g, int from, int to) {
    for (int u = from; u < to; ++u)
        for (int v = u + 1; v < to; ++v) g.add_edge(u, v);
}

void add_biclique(Graph& g, int a_from, int a_to, int b_from, int b_to) {
    for (int u = a_from; u < a_to; ++u)
        for (int v = b_from; v < b_to; ++v) g.add_edge(u, v);
}

}  // namespace

Coloring build_witness(const WitnessSpec& spec) {
    const int n = spec.n;
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("witness: n out of range");
    Graph blue(n);
    switch (spec.kind) {
        case WitnessKind::star: {
            if (spec.part_sizes.size() != 1)
                throw std::invalid_argument("star witness needs |A|");
            int a = spec.part_sizes[0];
            part_boundaries(n, {a, n - a});
            add_clique(blue, a, n);  // blue = E(B); E(A) and E(A,B) stay red
            break;
        }
        case WitnessKind::bipartition: {
            if (spec.part_sizes.size() != 1)
                throw std::invalid_argument("bipartition witness needs |A|");
            int a = spec.part_sizes[0];
            part_boundaries(n, {a, n - a});
            add_clique(blue, 0, a);
            add_clique(blue, a, n);  // E(A,B) stays red
            break;
        }
        case WitnessKind::four_part: {
            if (spec.part_sizes.size() != 4)
                throw std::invalid_argument("four-part witness needs four sizes");
            auto bounds = part_boundaries(n, spec.part_sizes);
            for (int i = 0; i < 4; ++i) add_clique(blue, bounds[i], bounds[i + 1]);
            add_biclique(blue, bounds[0], bounds[1], bounds[1], bounds[2]);
            break;
        }
        case WitnessKind::c4_decomposition: {
            if (!spec.part_sizes.empty())
                throw std::invalid_argument("c4 witness takes no part sizes");
            int a = (n + 1) / 2;
            add_biclique(blue, 0, a, a, n);  // blue = E(A,B)
            break;
        }
    }
    return blue;
}

C4BudgetReport c4_budget_check(int n) {
    if (n % 12 != 1 && n % 12 != 4)
        throw std::invalid_argument("c4_budget_check: n must be 1 or 4 mod 12");
    C4BudgetReport rep;
    rep.n = n;
    rep.blue_edges = static_cast<long>(n) * n / 4;
    rep.blocks = static_cast<long>(n) * (n - 1) / 12;
    rep.budget = 3 * rep.blocks;
    rep.infeasible = rep.budget < rep.blue_edges;
    return rep;
}

StarBudgetReport star_budget_check(int k, const Rational& alpha, long n) {
    if (k < 2) throw std::invalid_argument("star_budget_check: k must be >= 2");
    Rational limit = Rational(8) / (k * k + 8);  // (k^2/8 + 1)^{-1}
    if (!(alpha > 0 && alpha < limit))
        throw std::invalid_argument("star_budget_check: alpha must lie in (0, 8/(k^2+8))");
    if (n < 1) throw std::invalid_argument("star_budget_check: n must be positive");

    StarBudgetReport rep;
    rep.k = k;
    rep.alpha = alpha;
    rep.n = n;
    // |A| = floor(alpha n)
    Integer a = (alpha * n).get_num() / (alpha * n).get_den();
    Rational ar(a);
    rep.lhs = ar * (ar - 1) / 2 * Rational(k * k) / 4;
    rep.mid = alpha * alpha / 2 * Rational(n) * Rational(n) * Rational(k * k) / 4;
    rep.rhs = alpha * (1 - alpha) * Rational(n) * Rational(n);
    rep.chain_holds = rep.lhs < rep.mid && rep.mid < rep.rhs;
    rep.margin = rep.rhs - rep.lhs;
    // Idealized margin with |A| = alpha n exactly:
    //   alpha n [ n ((1-alpha) - alpha k^2/8) + k^2/8 ] > 0.
    Rational c1 = (1 - alpha) - alpha * Rational(k * k) / 8;
    Rational c0 = Rational(k * k) / 8;
    if (c1 > 0) {
        rep.n0 = 1;  // -c0/c1 < 0, so every n >= 1 qualifies
    } else if (c1 == 0) {
        rep.n0 = 1;  // margin = alpha n c0 > 0 always
    } else {
        // margin > 0 iff n < -c0/c1; no n0 makes it hold for all larger n.
        rep.n0 = -1;
    }
    return rep;
}

DeficitReport lp_deficit_report(const Coloring& coloring, const GraphFamily& forbidden, int k) {
    DeficitReport rep;
    const int n = coloring.order();
    GraphFamily allowed = complement_family(forbidden);
    rep.details = nu_star(coloring, k, allowed);
    rep.nu_star_allowed = rep.details.value;
    rep.perfect_bound = Rational(binomial(n, 2)) / Rational(binomial(k, 2));
    rep.deficit = rep.perfect_bound - rep.nu_star_allowed;
    return rep;
}

}  // namespace cliquepack
