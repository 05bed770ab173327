// Graph families used throughout: degree-set families F(S,k), their
// complements within C(k), induced-subgraph families C(H,k), and the
// Eulerian-coloring predicates. A family is an isomorphism-level set, stored
// as canonical forms with one representative per class.
#ifndef CLIQUEPACK_FAMILIES_HPP
#define CLIQUEPACK_FAMILIES_HPP

#include <set>
#include <string>
#include <vector>

#include "cliquepack/graph.hpp"

namespace cliquepack {

struct DegreeSet {
    int k = 0;                 // ambient clique size
    std::set<int> members;     // subset of {0, ..., k-1}

    DegreeSet() = default;
    DegreeSet(int k, std::set<int> members);
    std::string str() const;  // "{2,4}"
};

class GraphFamily {
  public:
    GraphFamily() = default;
    GraphFamily(int k, std::string label) : k_(k), label_(std::move(label)) {}

    int order() const { return k_; }
    const std::string& label() const { return label_; }
    size_t size() const { return forms_.size(); }
    bool empty() const { return forms_.empty(); }

    void insert(const Graph& g);
    bool contains(const CanonicalForm& f) const { return forms_.count(f) > 0; }
    bool contains(const Graph& g) const { return contains(canonical_form(g)); }

    const std::set<CanonicalForm>& forms() const { return forms_; }
    std::vector<Graph> representatives() const;
    // Sorted list of graph6 strings of the canonical representatives.
    std::vector<std::string> to_graph6_list() const;

  private:
    int k_ = 0;
    std::string label_;
    std::set<CanonicalForm> forms_;
};

// All isomorphism classes on k vertices: C(k).
GraphFamily all_graphs_family(int k);

// F(S,k): classes whose degree set is contained in S. k = S.k, at most 8.
GraphFamily degree_family(const DegreeSet& S);

// Classes on fam.order() vertices not isomorphic to any member of fam.
GraphFamily complement_family(const GraphFamily& fam);

// C(H,k): classes of the k-vertex induced subgraphs of H.
GraphFamily induced_family(const Graph& H, int k);

// The family of complements of the members of fam.
GraphFamily complement_members(const GraphFamily& fam);

enum class EulerianConnectivity {
    degrees_only,   // both color classes have all degrees even
    non_isolated,   // additionally each class is connected on its non-isolated vertices
    spanning,       // additionally each class is connected on all n vertices
};

// A coloring of odd-order K_n, given as its blue graph g, is Eulerian when
// both g and its complement are Eulerian. The spanning variant is the
// default: it is the reading under which every Eulerian coloring of K_k has
// its blue degree set inside {2, 4, ..., k-3}. Even n is an error.
bool is_eulerian_coloring(const Graph& g,
                          EulerianConnectivity mode = EulerianConnectivity::spanning);

}  // namespace cliquepack

#endif
