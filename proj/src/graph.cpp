#include "cliquepack/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cliquepack {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw capacity_error("graph order must be in 1..16");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loops not allowed");
    adj_[u] |= std::uint16_t(1u << v);
    adj_[v] |= std::uint16_t(1u << u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

Graph Graph::complement() const {
    Graph g(n_);
    const std::uint16_t all = std::uint16_t((1u << n_) - 1);
    for (int v = 0; v < n_; ++v) g.adj_[v] = std::uint16_t((~adj_[v] & all) & ~(1u << v));
    return g;
}

Graph Graph::induced(std::uint16_t vertex_mask) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v)
        if ((vertex_mask >> v) & 1u) verts.push_back(v);
    if (verts.empty()) throw std::invalid_argument("induced subgraph on empty vertex set");
    Graph g(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::relabeled(const Permutation& perm) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) g.add_edge(perm[u], perm[v]);
    return g;
}

std::set<int> Graph::degree_set() const {
    std::set<int> s;
    for (int v = 0; v < n_; ++v) s.insert(degree(v));
    return s;
}

namespace {

// Iterated neighborhood refinement. Returns a color per vertex; colors are
// 0-based, ordered by the (isomorphism-invariant) sorted signature chain, so
// isomorphic graphs get identical color multisets and class order.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    // Normalize to dense ids via sorted distinct values.
    auto normalize = [&](std::vector<std::vector<int>>& sigs) {
        std::vector<std::vector<int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::map<std::vector<int>, int> id;
        for (size_t i = 0; i < sorted.size(); ++i) id[sorted[i]] = static_cast<int>(i);
        std::vector<int> out(n);
        for (int v = 0; v < n; ++v) out[v] = id[sigs[v]];
        return out;
    };
    {
        std::vector<std::vector<int>> sigs(n);
        for (int v = 0; v < n; ++v) sigs[v] = {color[v]};
        color = normalize(sigs);
    }
    for (;;) {
        std::vector<std::vector<int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            std::uint16_t m = g.neighbors(v);
            while (m) {
                int w = __builtin_ctz(m);
                m &= std::uint16_t(m - 1);
                nb.push_back(color[w]);
            }
            std::sort(nb.begin(), nb.end());
            sigs[v] = {color[v]};
            sigs[v].insert(sigs[v].end(), nb.begin(), nb.end());
        }
        std::vector<int> next = normalize(sigs);
        if (next == color) return color;
        color = std::move(next);
    }
}

std::array<std::uint64_t, 2> pack_bits(const Graph& g, const std::vector<int>& order) {
    std::array<std::uint64_t, 2> bits{};
    int idx = 0;
    const int n = g.order();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (g.has_edge(order[i], order[j])) bits[idx / 64] |= 1ULL << (63 - idx % 64);
    return bits;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    std::vector<int> color = refine_colors(g);
    // Group vertices by color; the candidate orderings place class 0 first,
    // then class 1, etc., with every permutation inside each class.
    int nclasses = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> classes(nclasses);
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);

    CanonicalForm best;
    best.n = static_cast<std::uint8_t>(n);
    bool have = false;
    std::vector<int> order;
    order.reserve(n);
    // Iterate the product of per-class permutations.
    auto rec = [&](auto&& self, int ci) -> void {
        if (ci == nclasses) {
            auto bits = pack_bits(g, order);
            if (!have || bits < best.bits) {
                best.bits = bits;
                have = true;
            }
            return;
        }
        std::vector<int>& cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        do {
            order.insert(order.end(), cls.begin(), cls.end());
            self(self, ci + 1);
            order.resize(order.size() - cls.size());
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    rec(rec, 0);
    return best;
}

Graph graph_of_form(const CanonicalForm& form) {
    Graph g(form.n);
    int idx = 0;
    for (int j = 1; j < form.n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((form.bits[idx / 64] >> (63 - idx % 64)) & 1ULL) g.add_edge(i, j);
    return g;
}

namespace {

// Backtracking over color-respecting vertex images. When stop_at_nontrivial
// is set, the search returns as soon as any non-identity automorphism exists.
bool automorphism_search(const Graph& g, const std::vector<int>& color, Permutation& image,
                         std::uint16_t used, int v, std::vector<Permutation>* out,
                         bool stop_at_nontrivial) {
    const int n = g.order();
    if (v == n) {
        bool identity = true;
        for (int u = 0; u < n; ++u)
            if (image[u] != u) {
                identity = false;
                break;
            }
        if (out) out->push_back(image);
        return stop_at_nontrivial && !identity;
    }
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (color[w] != color[v]) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) != g.has_edge(image[u], w)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        image[v] = static_cast<std::uint8_t>(w);
        if (automorphism_search(g, color, image, std::uint16_t(used | (1u << w)), v + 1, out,
                                stop_at_nontrivial))
            return true;
    }
    return false;
}

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g) {
    std::vector<int> color = refine_colors(g);
    std::vector<Permutation> out;
    Permutation image{};
    automorphism_search(g, color, image, 0, 0, &out, false);
    std::sort(out.begin(), out.end(), [&](const Permutation& a, const Permutation& b) {
        for (int v = 0; v < g.order(); ++v)
            if (a[v] != b[v]) return a[v] < b[v];
        return false;
    });
    return out;
}

bool is_asymmetric(const Graph& g) {
    std::vector<int> color = refine_colors(g);
    Permutation image{};
    return !automorphism_search(g, color, image, 0, 0, nullptr, true);
}

Graph from_graph6(const std::string& text) {
    if (text.empty()) throw parse_error("empty graph6 string");
    size_t pos = 0;
    long n;
    auto val = [&](char c) -> int {
        if (c < 63 || c > 126) throw parse_error("graph6 byte out of range");
        return c - 63;
    };
    if (text[0] != 126) {
        n = val(text[0]);
        pos = 1;
    } else if (text.size() >= 4 && text[1] != 126) {
        n = (long(val(text[1])) << 12) | (long(val(text[2])) << 6) | val(text[3]);
        pos = 4;
    } else if (text.size() >= 8) {
        n = 0;
        for (int i = 2; i < 8; ++i) n = (n << 6) | val(text[i]);
        pos = 8;
    } else {
        throw parse_error("truncated graph6 header");
    }
    if (n > kMaxVertices) throw capacity_error("graph6 order exceeds 16");
    if (n < 1) throw parse_error("graph6 order must be positive");
    const long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() != pos + nbytes) throw parse_error("graph6 length mismatch");
    Graph g(static_cast<int>(n));
    long idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx) {
            int byte = val(text[pos + idx / 6]);
            if ((byte >> (5 - idx % 6)) & 1) g.add_edge(i, j);
        }
    // Padding bits must be zero.
    for (long b = idx; b < static_cast<long>(nbytes) * 6; ++b)
        if ((val(text[pos + b / 6]) >> (5 - b % 6)) & 1) throw parse_error("nonzero graph6 padding");
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    int byte = 0, fill = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            byte = (byte << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(byte + 63));
                byte = fill = 0;
            }
        }
    if (fill > 0) out.push_back(static_cast<char>((byte << (6 - fill)) + 63));
    return out;
}

std::vector<Graph> enumerate_graphs(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("enumerate_graphs: k must be in 1..8");
    // Extend each (k-1)-class by one vertex with every possible neighborhood,
    // dedup by canonical form.
    std::set<CanonicalForm> reps;
    if (k == 1) {
        reps.insert(canonical_form(Graph(1)));
    } else {
        for (const Graph& base : enumerate_graphs(k - 1)) {
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                Graph g(k);
                for (int u = 0; u < k - 1; ++u) {
                    for (int v = u + 1; v < k - 1; ++v)
                        if (base.has_edge(u, v)) g.add_edge(u, v);
                    if ((mask >> u) & 1u) g.add_edge(u, k - 1);
                }
                reps.insert(canonical_form(g));
            }
        }
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (const auto& f : reps) out.push_back(graph_of_form(f));
    return out;
}

}  // namespace cliquepack
