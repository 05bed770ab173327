#include "cliquepack/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cliquepack {

DegreeSet::DegreeSet(int k_, std::set<int> members_) : k(k_), members(std::move(members_)) {
    if (k < 1) throw std::invalid_argument("degree set: k must be positive");
    for (int d : members)
        if (d < 0 || d >= k) throw std::invalid_argument("degree set member outside 0..k-1");
}

std::string DegreeSet::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int d : members) {
        if (!first) os << ',';
        os << d;
        first = false;
    }
    os << '}';
    return os.str();
}

void GraphFamily::insert(const Graph& g) {
    if (g.order() != k_) throw std::invalid_argument("family member has wrong order");
    forms_.insert(canonical_form(g));
}

std::vector<Graph> GraphFamily::representatives() const {
    std::vector<Graph> out;
    out.reserve(forms_.size());
    for (const auto& f : forms_) out.push_back(graph_of_form(f));
    return out;
}

std::vector<std::string> GraphFamily::to_graph6_list() const {
    std::vector<std::string> out;
    for (const auto& f : forms_) out.push_back(to_graph6(graph_of_form(f)));
    std::sort(out.begin(), out.end());
    return out;
}

GraphFamily all_graphs_family(int k) {
    GraphFamily fam(k, "C(" + std::to_string(k) + ")");
    for (const Graph& g : enumerate_graphs(k)) fam.insert(g);
    return fam;
}

GraphFamily degree_family(const DegreeSet& S) {
    GraphFamily fam(S.k, "F(" + S.str() + "," + std::to_string(S.k) + ")");
    for (const Graph& g : enumerate_graphs(S.k)) {
        std::set<int> ds = g.degree_set();
        if (std::includes(S.members.begin(), S.members.end(), ds.begin(), ds.end()))
            fam.insert(g);
    }
    return fam;
}

GraphFamily complement_family(const GraphFamily& fam) {
    GraphFamily out(fam.order(), "complement-of " + fam.label());
    for (const Graph& g : enumerate_graphs(fam.order()))
        if (!fam.contains(g)) out.insert(g);
    return out;
}

GraphFamily induced_family(const Graph& H, int k) {
    const int h = H.order();
    if (k < 1 || k > h) throw std::invalid_argument("induced_family: k out of range");
    if (k > 8) throw std::invalid_argument("induced_family: k must be at most 8");
    GraphFamily fam(k, "C(H," + std::to_string(k) + ")");
    for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        fam.insert(H.induced(static_cast<std::uint16_t>(mask)));
    }
    return fam;
}

GraphFamily complement_members(const GraphFamily& fam) {
    GraphFamily out(fam.order(), "memberwise-complement-of " + fam.label());
    for (const Graph& g : fam.representatives()) out.insert(g.complement());
    return out;
}

namespace {

bool eulerian_one_color(const Graph& g, EulerianConnectivity mode) {
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 != 0) return false;
    if (mode == EulerianConnectivity::degrees_only) return true;

    std::uint16_t relevant = 0;
    if (mode == EulerianConnectivity::spanning) {
        relevant = std::uint16_t((1u << n) - 1);
    } else {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 0) relevant |= std::uint16_t(1u << v);
        if (relevant == 0) return true;  // no edges at all
    }
    int start = __builtin_ctz(relevant);
    std::uint16_t seen = std::uint16_t(1u << start);
    std::uint16_t frontier = seen;
    while (frontier) {
        int v = __builtin_ctz(frontier);
        frontier &= std::uint16_t(frontier - 1);
        std::uint16_t fresh = std::uint16_t(g.neighbors(v) & relevant & ~seen);
        seen |= fresh;
        frontier |= fresh;
    }
    return seen == relevant;
}

}  // namespace

bool is_eulerian_coloring(const Graph& g, EulerianConnectivity mode) {
    if (g.order() % 2 == 0) throw std::invalid_argument("Eulerian colorings need odd order");
    return eulerian_one_color(g, mode) && eulerian_one_color(g.complement(), mode);
}

}  // namespace cliquepack
