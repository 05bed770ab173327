// Small labeled simple graphs on at most 16 vertices, one 16-bit adjacency
// mask per vertex. A Graph doubles as a red-blue coloring of K_n: its edges
// are the blue edges, the complement holds the red ones. Everything is a
// value type; all operations are pure.
#ifndef CLIQUEPACK_GRAPH_HPP
#define CLIQUEPACK_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cliquepack/rational.hpp"

namespace cliquepack {

inline constexpr int kMaxVertices = 16;

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_bipartite(int a, int b);

    int order() const { return n_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    std::uint16_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcount(adj_[v]); }
    int edge_count() const;

    Graph complement() const;
    // Subgraph induced on the set bits of vertex_mask, vertices relabeled in
    // increasing original order. The mask must be nonempty.
    Graph induced(std::uint16_t vertex_mask) const;
    // Image under perm: vertex v of *this becomes perm[v].
    Graph relabeled(const std::array<std::uint8_t, kMaxVertices>& perm) const;

    std::set<int> degree_set() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

  private:
    int n_ = 0;
    std::array<std::uint16_t, kMaxVertices> adj_{};
};

// Isomorphism-invariant key: the minimum packed upper-triangle bit-string of
// any relabeling consistent with the iterated degree refinement of the graph.
// Two graphs are isomorphic iff their forms are equal.
struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 2> bits{};  // graph6 bit order, MSB-first
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph graph_of_form(const CanonicalForm& form);

using Permutation = std::array<std::uint8_t, kMaxVertices>;

// Every automorphism of g, identity included, in lexicographic order of the
// image sequence. Exhaustive with color-refinement pruning; meant for n
// up to ~10.
std::vector<Permutation> automorphisms(const Graph& g);
bool is_asymmetric(const Graph& g);

// graph6, bit-exact per the standard ASCII encoding. Decoding rejects
// malformed strings (parse_error) and orders above 16 (capacity_error).
Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// One representative per isomorphism class on k vertices, sorted by
// canonical form. k must be between 1 and 8.
std::vector<Graph> enumerate_graphs(int k);

}  // namespace cliquepack

#endif
