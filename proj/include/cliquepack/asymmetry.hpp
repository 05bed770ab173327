// Asymmetry analysis: the parameter k(H) (smallest k such that every induced
// subgraph on >= k vertices is asymmetric and same-size ones are pairwise
// non-isomorphic; infinity when H itself is symmetric), induced-copy counts,
// vertex duplication, and the random-graph asymmetry experiment.
#ifndef CLIQUEPACK_ASYMMETRY_HPP
#define CLIQUEPACK_ASYMMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cliquepack/graph.hpp"
#include "cliquepack/rational.hpp"

namespace cliquepack {

struct KOfH {
    // Missing value means infinity (H is symmetric).
    std::optional<int> value;
    enum class Witness { none, symmetric_subset, isomorphic_pair };
    Witness witness_kind = Witness::none;
    int blocking_size = 0;                   // subset size of the blocking witness
    std::vector<std::uint16_t> witness_sets; // one mask (symmetric) or two (isomorphic pair)
    bool finite() const { return value.has_value(); }
};

// Exact k(H) by exhaustive subset scan; H must have at most 9 vertices.
KOfH k_of_h(const Graph& H);

// ceil((h+1)/2): the two-vertices-agree lower bound on k(H).
int goodman_floor(int h);

// Number of vertex subsets of G inducing a graph isomorphic to H.
long count_induced_copies(const Graph& H, const Graph& G);

// Iterated duplication of the first n-h vertices of H: each duplicate gets
// exactly the current neighbors of its original (and is not adjacent to it).
// Requires h <= n <= min(2h, 16).
Graph duplicate_vertices(const Graph& H, int n);

// Every induced subgraph K of H on at least k(H) vertices satisfies
// k(K) <= k(H). Vacuously true when k(H) is infinite. H must have at most
// 8 vertices.
bool monotonicity_check(const Graph& H);

struct ExperimentReport {
    int h = 0;
    Rational p, beta;
    long trials = 0;
    std::uint64_t seed = 0;
    long successes = 0;
    Rational frequency;               // successes / trials
    int threshold = 0;                // ceil(beta * h): smallest subset size checked
};

// Sample G(h,p) `trials` times (trial t uses generator seed seed+t) and count
// how often every induced subgraph on >= ceil(beta*h) vertices is asymmetric
// with all same-size such subgraphs pairwise non-isomorphic, i.e. how often
// k(H) <= beta*h. Requires h <= 30, 0 < p <= 1, and ceil(beta*h) in 1..h.
ExperimentReport random_asymmetry_experiment(int h, const Rational& p, const Rational& beta,
                                             long trials, std::uint64_t seed, int threads = 1);

}  // namespace cliquepack

#endif
