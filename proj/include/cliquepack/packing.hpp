// Packings of a colored K_n by k-vertex blocks: the fractional packing LP,
// exhaustive exact-cover decomposition search with a forbidden-class family,
// projective-plane decompositions, and packing verification. A coloring is
// identified with its blue graph (red = complement).
#ifndef CLIQUEPACK_PACKING_HPP
#define CLIQUEPACK_PACKING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cliquepack/families.hpp"
#include "cliquepack/graph.hpp"
#include "cliquepack/rational.hpp"

namespace cliquepack {

using Coloring = Graph;  // the blue graph of a red-blue colored K_n

struct WeightedBlock {
    std::uint16_t verts = 0;  // vertex mask within [n]
    Rational weight;
    std::vector<int> vertex_list() const;
};

struct Packing {
    int n = 0;  // ambient order
    int k = 0;  // block size
    std::vector<WeightedBlock> blocks;
    Rational total_weight() const;
    bool is_integral() const;  // every weight is 0 or 1
};

struct NuStarResult {
    Rational value;
    Packing packing;
};

// The fractional packing number over blocks whose induced blue graph lies in
// family, with the per-pair weight-at-most-one constraints. Exact optimum.
NuStarResult nu_star(const Coloring& coloring, int k, const GraphFamily& family);

enum class SearchStatus { found, infeasible, unknown };

struct DecompositionResult {
    SearchStatus status = SearchStatus::unknown;
    Packing packing;            // populated iff status == found
    std::uint64_t nodes = 0;    // search nodes visited
    std::string note;
};

// Complete backtracking for an edge-disjoint decomposition of K_n into
// admissible k-blocks covering every pair exactly once. Branches on the
// lexicographically first uncovered pair; blocks tried in sorted order.
// Subtrees that cannot cover the remaining blue (or red) edges within the
// per-block maxima are cut off; the search is otherwise exhaustive, so
// `infeasible` is a proof. A nonzero node_limit turns exhaustion past the
// limit into `unknown`.
DecompositionResult exact_decomposition(const Coloring& coloring, int k,
                                        const GraphFamily& allowed,
                                        std::uint64_t node_limit = 0);

// The K_{p^2+p+1} decomposition into p^2+p+1 blocks of size p+1 given by the
// projective plane of order p over the field with p elements. p in {2, 3}.
Packing projective_plane_decomposition(int p);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

// Exact checks: pairwise weight sums at most one (exactly one under
// require_full_cover), weights within [0,1], and membership of every
// positively weighted block's blue class in family when one is given.
VerifyReport verify_packing(const Coloring& coloring, const Packing& packing,
                            const GraphFamily* family = nullptr,
                            bool require_full_cover = false);

struct PropertyCheckEntry {
    std::string blue_graph6;
    SearchStatus status = SearchStatus::unknown;
};

struct PropertyCheckReport {
    int q = 0, k = 0;
    long found = 0, infeasible = 0, unknown = 0;
    bool all_pass = false;
    std::vector<PropertyCheckEntry> entries;
};

// Does every provided coloring of K_q decompose into admissible k-blocks?
PropertyCheckReport decomposition_property_check(int q, int k, const GraphFamily& allowed,
                                                 const std::vector<Coloring>& colorings,
                                                 std::uint64_t node_limit = 0, int threads = 1);

// Exhaustive variant over one representative per isomorphism class of
// colorings of K_q (decomposability is isomorphism-invariant). q at most 8,
// the cap of the class enumeration.
PropertyCheckReport decomposition_property_check_exhaustive(int q, int k,
                                                            const GraphFamily& allowed,
                                                            std::uint64_t node_limit = 0,
                                                            int threads = 1);

}  // namespace cliquepack

#endif
