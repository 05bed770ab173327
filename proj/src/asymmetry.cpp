#include "cliquepack/asymmetry.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "cliquepack/parallel.hpp"

namespace cliquepack {

KOfH k_of_h(const Graph& H) {
    const int h = H.order();
    if (h > 9) throw std::invalid_argument("k_of_h: exhaustive scan limited to 9 vertices");
    KOfH result;
    if (!is_asymmetric(H)) {
        result.witness_kind = KOfH::Witness::symmetric_subset;
        result.blocking_size = h;
        result.witness_sets = {std::uint16_t((1u << h) - 1)};
        return result;  // value = infinity
    }
    // H itself is clean; scan sizes downward until one fails.
    for (int s = h - 1; s >= 1; --s) {
        std::map<CanonicalForm, std::uint16_t> seen;
        for (std::uint16_t mask = 1; mask < (1u << h); ++mask) {
            if (__builtin_popcount(mask) != s) continue;
            Graph sub = H.induced(mask);
            if (!is_asymmetric(sub)) {
                result.value = s + 1;
                result.witness_kind = KOfH::Witness::symmetric_subset;
                result.blocking_size = s;
                result.witness_sets = {mask};
                return result;
            }
            auto [it, fresh] = seen.emplace(canonical_form(sub), mask);
            if (!fresh) {
                result.value = s + 1;
                result.witness_kind = KOfH::Witness::isomorphic_pair;
                result.blocking_size = s;
                result.witness_sets = {it->second, mask};
                return result;
            }
        }
    }
    result.value = 1;
    return result;
}

int goodman_floor(int h) {
    if (h < 2) throw std::invalid_argument("goodman_floor: h must be >= 2");
    return (h + 2) / 2;  // ceil((h+1)/2)
}

long count_induced_copies(const Graph& H, const Graph& G) {
    const int h = H.order(), n = G.order();
    if (h > n) return 0;
    const CanonicalForm target = canonical_form(H);
    const int target_edges = H.edge_count();
    long count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != h) continue;
        Graph sub = G.induced(static_cast<std::uint16_t>(mask));
        if (sub.edge_count() != target_edges) continue;
        if (canonical_form(sub) == target) ++count;
    }
    return count;
}

Graph duplicate_vertices(const Graph& H, int n) {
    const int h = H.order();
    if (n < h || n > kMaxVertices) throw std::invalid_argument("duplicate_vertices: n out of range");
    if (n > 2 * h) throw std::invalid_argument("duplicate_vertices: at most h vertices can be duplicated");
    if (n == h) return H;
    Graph g(n);
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < h; ++v)
            if (H.has_edge(u, v)) g.add_edge(u, v);
    for (int t = 0; t < n - h; ++t) {
        const int original = t, copy = h + t;
        for (int v = 0; v < copy; ++v)
            if (v != original && g.has_edge(original, v)) g.add_edge(copy, v);
    }
    return g;
}

bool monotonicity_check(const Graph& H) {
    const int h = H.order();
    if (h > 8) throw std::invalid_argument("monotonicity_check: at most 8 vertices");
    KOfH kh = k_of_h(H);
    if (!kh.finite()) return true;
    const int bound = *kh.value;

    // Canonical form and asymmetry flag per vertex subset; an induced
    // subgraph of an induced subgraph of H is again an induced subgraph of H,
    // so every k(K) below reads from this one table.
    const std::uint32_t full = (1u << h) - 1;
    std::vector<CanonicalForm> form(full + 1);
    std::vector<char> asym(full + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Graph sub = H.induced(static_cast<std::uint16_t>(mask));
        form[mask] = canonical_form(sub);
        asym[mask] = is_asymmetric(sub) ? 1 : 0;
    }

    for (std::uint32_t kmask = 1; kmask <= full; ++kmask) {
        if (__builtin_popcount(kmask) < bound) continue;
        // k(H[kmask]) <= bound iff every subset of kmask of size >= bound is
        // asymmetric and same-size subsets are pairwise non-isomorphic.
        for (int s = bound; s <= __builtin_popcount(kmask); ++s) {
            std::map<CanonicalForm, std::uint32_t> seen;
            for (std::uint32_t sub = kmask;; sub = (sub - 1) & kmask) {
                if (__builtin_popcount(sub) == s) {
                    if (!asym[sub]) return false;
                    if (!seen.emplace(form[sub], sub).second) return false;
                }
                if (sub == 0) break;
            }
        }
    }
    return true;
}

namespace {

// Adjacency-row graphs on up to 30 vertices, used only by the random
// experiment (the public Graph type caps at 16).
struct BigGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    explicit BigGraph(int n_) : n(n_), adj(n_, 0) {}
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    BigGraph induced(std::uint32_t mask) const {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) verts.push_back(v);
        BigGraph g(static_cast<int>(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i),
                                                             static_cast<int>(j));
        return g;
    }
};

std::vector<int> big_refine(const BigGraph& g) {
    std::vector<int> color(g.n);
    for (int v = 0; v < g.n; ++v) color[v] = __builtin_popcount(g.adj[v]);
    auto normalize = [&](std::vector<std::vector<int>>& sigs) {
        std::vector<std::vector<int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::map<std::vector<int>, int> id;
        for (size_t i = 0; i < sorted.size(); ++i) id[sorted[i]] = static_cast<int>(i);
        std::vector<int> out(g.n);
        for (int v = 0; v < g.n; ++v) out[v] = id[sigs[v]];
        return out;
    };
    {
        std::vector<std::vector<int>> sigs(g.n);
        for (int v = 0; v < g.n; ++v) sigs[v] = {color[v]};
        color = normalize(sigs);
    }
    for (;;) {
        std::vector<std::vector<int>> sigs(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> nb;
            std::uint32_t m = g.adj[v];
            while (m) {
                nb.push_back(color[__builtin_ctz(m)]);
                m &= m - 1;
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

// Backtracking over color-respecting maps from g to h (g.n == h.n). With
// identity_domain set it searches g -> g and reports whether a non-identity
// map exists.
bool big_map_search(const BigGraph& g, const BigGraph& h, const std::vector<int>& gcolor,
                    const std::vector<int>& hcolor, std::vector<int>& image, std::uint32_t used,
                    int v, bool skip_identity_leaf) {
    if (v == g.n) {
        if (!skip_identity_leaf) return true;
        for (int u = 0; u < g.n; ++u)
            if (image[u] != u) return true;
        return false;
    }
    for (int w = 0; w < h.n; ++w) {
        if ((used >> w) & 1u) continue;
        if (hcolor[w] != gcolor[v]) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) != h.has_edge(image[u], w)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        image[v] = w;
        if (big_map_search(g, h, gcolor, hcolor, image, used | (1u << w), v + 1,
                           skip_identity_leaf))
            return true;
    }
    return false;
}

bool big_is_asymmetric(const BigGraph& g) {
    std::vector<int> color = big_refine(g);
    std::vector<int> image(g.n);
    return !big_map_search(g, g, color, color, image, 0, 0, true);
}

// Sorted color-class-size signature; isomorphic graphs agree on it.
std::vector<int> big_invariant(const BigGraph& g, const std::vector<int>& color) {
    std::vector<int> histo(*std::max_element(color.begin(), color.end()) + 1, 0);
    for (int c : color) ++histo[c];
    return histo;
}

bool big_isomorphic(const BigGraph& g, const BigGraph& h, const std::vector<int>& gcolor,
                    const std::vector<int>& hcolor) {
    if (g.n != h.n) return false;
    std::vector<int> image(g.n);
    return big_map_search(g, h, gcolor, hcolor, image, 0, 0, false);
}

}  // namespace

ExperimentReport random_asymmetry_experiment(int h, const Rational& p, const Rational& beta,
                                             long trials, std::uint64_t seed, int threads) {
    if (h < 1 || h > 30) throw std::invalid_argument("experiment: h must be in 1..30");
    if (!(p > 0 && p <= 1)) throw std::invalid_argument("experiment: p must be in (0,1]");
    if (trials < 1) throw std::invalid_argument("experiment: trials must be positive");
    // threshold = ceil(beta*h)
    Rational bh = beta * h;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), bh.get_num().get_mpz_t(), bh.get_den().get_mpz_t());
    if (q < 1 || q > h) throw std::invalid_argument("experiment: ceil(beta*h) outside 1..h");
    const int threshold = static_cast<int>(q.get_si());

    Integer total_subsets = 0;
    for (int s = threshold; s <= h; ++s) total_subsets += binomial(h, s);
    if (total_subsets > 100000)
        throw std::invalid_argument("experiment: too many subsets at this beta; raise beta");

    // Edge draw: uniform 64-bit r is an edge iff r/2^64 < p, decided exactly.
    const Integer num_shift = p.get_num() << 64;
    auto bernoulli = [&](std::mt19937_64& rng) {
        Integer r(0);
        std::uint64_t raw = rng();
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
        return r * p.get_den() < num_shift;
    };

    std::vector<char> success(trials, 0);
    parallel_for(static_cast<size_t>(trials), threads, [&](size_t t) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
        BigGraph g(h);
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j)
                if (bernoulli(rng)) g.add_edge(i, j);

        bool ok = true;
        for (int s = threshold; s <= h && ok; ++s) {
            std::vector<BigGraph> subs;
            std::vector<std::vector<int>> colors;
            std::vector<std::vector<int>> invariants;
            std::uint32_t mask = (1u << s) - 1;
            const std::uint32_t limit = 1u << h;
            while (mask < limit) {
                BigGraph sub = s == h ? g : g.induced(mask);
                std::vector<int> color = big_refine(sub);
                if (!big_is_asymmetric(sub)) {
                    ok = false;
                    break;
                }
                std::vector<int> inv = big_invariant(sub, color);
                for (size_t i = 0; i < subs.size() && ok; ++i)
                    if (invariants[i] == inv &&
                        big_isomorphic(subs[i], sub, colors[i], color))
                        ok = false;
                if (!ok) break;
                subs.push_back(std::move(sub));
                colors.push_back(std::move(color));
                invariants.push_back(std::move(inv));
                // Gosper's hack: next mask with the same popcount.
                std::uint32_t c = mask & -mask, r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        success[t] = ok ? 1 : 0;
    });

    ExperimentReport rep;
    rep.h = h;
    rep.p = p;
    rep.beta = beta;
    rep.trials = trials;
    rep.seed = seed;
    rep.threshold = threshold;
    for (long t = 0; t < trials; ++t) rep.successes += success[t];
    rep.frequency = Rational(rep.successes, trials);
    rep.frequency.canonicalize();
    return rep;
}

}  // namespace cliquepack
