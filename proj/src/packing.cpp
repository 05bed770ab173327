#include "cliquepack/packing.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <stdexcept>

#include "cliquepack/parallel.hpp"
#include "cliquepack/simplex.hpp"

namespace cliquepack {

namespace {

constexpr int kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;
using PairSet = std::bitset<kMaxPairs>;

int pair_index(int u, int v) {  // u < v, graph6 column-major order
    return v * (v - 1) / 2 + u;
}

PairSet pairs_of_mask(std::uint16_t mask) {
    PairSet s;
    for (int v = 0; v < kMaxVertices; ++v) {
        if (!((mask >> v) & 1u)) continue;
        for (int u = 0; u < v; ++u)
            if ((mask >> u) & 1u) s.set(pair_index(u, v));
    }
    return s;
}

// All k-subsets of [n] whose induced blue graph belongs to family, as masks
// in increasing numeric order.
std::vector<std::uint16_t> admissible_blocks(const Coloring& coloring, int k,
                                             const GraphFamily& family) {
    const int n = coloring.order();
    std::vector<std::uint16_t> out;
    if (family.empty() || k > n) return out;
    for (std::uint32_t mask = (1u << k) - 1; mask < (1u << n);) {
        if (family.contains(coloring.induced(static_cast<std::uint16_t>(mask))))
            out.push_back(static_cast<std::uint16_t>(mask));
        std::uint32_t c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

int blue_edges_in_block(const Coloring& coloring, std::uint16_t mask) {
    int count = 0;
    for (int v = 0; v < coloring.order(); ++v)
        if ((mask >> v) & 1u) count += __builtin_popcount(coloring.neighbors(v) & mask);
    return count / 2;
}

}  // namespace

std::vector<int> WeightedBlock::vertex_list() const {
    std::vector<int> out;
    for (int v = 0; v < kMaxVertices; ++v)
        if ((verts >> v) & 1u) out.push_back(v);
    return out;
}

Rational Packing::total_weight() const {
    Rational t = 0;
    for (const auto& b : blocks) t += b.weight;
    return t;
}

bool Packing::is_integral() const {
    for (const auto& b : blocks)
        if (b.weight != 0 && b.weight != 1) return false;
    return true;
}

NuStarResult nu_star(const Coloring& coloring, int k, const GraphFamily& family) {
    const int n = coloring.order();
    if (k < 2 || k > n) throw std::invalid_argument("nu_star: k out of range");
    if (family.order() != k && !family.empty())
        throw std::invalid_argument("nu_star: family order mismatch");

    NuStarResult result;
    result.packing.n = n;
    result.packing.k = k;
    result.value = 0;
    std::vector<std::uint16_t> blocks = admissible_blocks(coloring, k, family);
    if (blocks.empty()) return result;

    // One row per vertex pair; the unit upper bounds on the variables are
    // already implied by these rows since k >= 2.
    const int npairs = n * (n - 1) / 2;
    Matrix A(npairs, std::vector<Rational>(blocks.size(), Rational(0)));
    for (size_t j = 0; j < blocks.size(); ++j) {
        std::uint16_t mask = blocks[j];
        for (int v = 0; v < n; ++v) {
            if (!((mask >> v) & 1u)) continue;
            for (int u = 0; u < v; ++u)
                if ((mask >> u) & 1u) A[pair_index(u, v)][j] = 1;
        }
    }
    std::vector<Rational> b(npairs, Rational(1));
    std::vector<Rational> c(blocks.size(), Rational(1));
    LpResult lp = lp_maximize(c, A, b, /*unit_upper_bounds=*/false);

    result.value = lp.optimum;
    for (size_t j = 0; j < blocks.size(); ++j)
        if (lp.solution[j] != 0) result.packing.blocks.push_back({blocks[j], lp.solution[j]});
    return result;
}

namespace {

struct SearchContext {
    int n = 0, k = 0;
    int npairs = 0;
    std::vector<std::uint16_t> blocks;
    std::vector<PairSet> block_pairs;
    std::vector<int> block_blue;               // blue edges per block
    std::vector<std::vector<int>> by_pair;     // block indices covering each pair
    PairSet blue_pairs;
    int max_blue = 0, max_red = 0;
    std::uint64_t node_limit = 0;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<int> chosen;

    bool search(const PairSet& covered, int covered_count, int blue_left, int red_left) {
        if (node_limit && nodes >= node_limit) {
            aborted = true;
            return false;
        }
        ++nodes;
        if (covered_count == npairs) return true;
        const int per_block = k * (k - 1) / 2;
        const int remaining = (npairs - covered_count) / per_block;
        if (blue_left > max_blue * remaining) return false;
        if (red_left > max_red * remaining) return false;

        int pivot = 0;
        while (covered.test(pivot)) ++pivot;
        for (int bi : by_pair[pivot]) {
            if ((block_pairs[bi] & covered).any()) continue;
            chosen.push_back(bi);
            PairSet next = covered | block_pairs[bi];
            bool done = search(next, covered_count + per_block, blue_left - block_blue[bi],
                               red_left - (per_block - block_blue[bi]));
            if (done) return true;
            if (aborted) return false;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

DecompositionResult exact_decomposition(const Coloring& coloring, int k,
                                        const GraphFamily& allowed, std::uint64_t node_limit) {
    const int n = coloring.order();
    if (k < 2 || k > n) throw std::invalid_argument("exact_decomposition: k out of range");
    DecompositionResult result;
    const long npairs = long(n) * (n - 1) / 2;
    const long per_block = long(k) * (k - 1) / 2;
    if (npairs % per_block != 0) {
        result.status = SearchStatus::infeasible;
        result.note = "edge count not divisible by block size";
        return result;
    }

    SearchContext ctx;
    ctx.n = n;
    ctx.k = k;
    ctx.npairs = static_cast<int>(npairs);
    ctx.node_limit = node_limit;
    ctx.blocks = admissible_blocks(coloring, k, allowed);
    ctx.block_pairs.reserve(ctx.blocks.size());
    ctx.by_pair.assign(ctx.npairs, {});
    int blue_total = 0;
    for (int v = 0; v < n; ++v) blue_total += coloring.degree(v);
    blue_total /= 2;
    for (size_t j = 0; j < ctx.blocks.size(); ++j) {
        ctx.block_pairs.push_back(pairs_of_mask(ctx.blocks[j]));
        int blue = blue_edges_in_block(coloring, ctx.blocks[j]);
        ctx.block_blue.push_back(blue);
        ctx.max_blue = std::max(ctx.max_blue, blue);
        ctx.max_red = std::max(ctx.max_red, static_cast<int>(per_block) - blue);
        for (int p = 0; p < ctx.npairs; ++p)
            if (ctx.block_pairs[j].test(p)) ctx.by_pair[p].push_back(static_cast<int>(j));
    }

    PairSet covered;
    bool found = ctx.search(covered, 0, blue_total, static_cast<int>(npairs) - blue_total);
    result.nodes = ctx.nodes;
    if (found) {
        result.status = SearchStatus::found;
        result.packing.n = n;
        result.packing.k = k;
        for (int bi : ctx.chosen) result.packing.blocks.push_back({ctx.blocks[bi], Rational(1)});
    } else if (ctx.aborted) {
        result.status = SearchStatus::unknown;
        result.note = "node limit reached";
    } else {
        result.status = SearchStatus::infeasible;
    }
    return result;
}

Packing projective_plane_decomposition(int p) {
    if (p != 2 && p != 3) throw std::invalid_argument("projective plane: p must be 2 or 3");
    // Points of PG(2,p): nonzero triples over F_p with first nonzero entry 1.
    std::vector<std::array<int, 3>> points;
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            for (int z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                int first = x != 0 ? x : (y != 0 ? y : z);
                if (first != 1) continue;
                points.push_back({x, y, z});
            }
    const int q = p * p + p + 1;
    if (static_cast<int>(points.size()) != q)
        throw std::logic_error("projective plane point count mismatch");

    Packing packing;
    packing.n = q;
    packing.k = p + 1;
    for (const auto& line : points) {  // lines are the same normalized triples
        std::uint16_t mask = 0;
        for (int i = 0; i < q; ++i) {
            int dot = line[0] * points[i][0] + line[1] * points[i][1] + line[2] * points[i][2];
            if (dot % p == 0) mask |= std::uint16_t(1u << i);
        }
        packing.blocks.push_back({mask, Rational(1)});
    }
    return packing;
}

VerifyReport verify_packing(const Coloring& coloring, const Packing& packing,
                            const GraphFamily* family, bool require_full_cover) {
    VerifyReport report;
    const int n = coloring.order();
    auto complain = [&](const std::string& msg) {
        report.ok = false;
        report.diagnostics.push_back(msg);
    };
    if (packing.n != n) complain("packing ambient order differs from coloring order");

    std::vector<Rational> pair_weight(n * (n - 1) / 2, Rational(0));
    for (const auto& block : packing.blocks) {
        if (__builtin_popcount(block.verts) != packing.k)
            complain("block has wrong size");
        if (block.weight < 0 || block.weight > 1)
            complain("block weight outside [0,1]");
        if ((block.verts >> n) != 0)
            complain("block uses vertices outside [n]");
        if (block.weight > 0 && family && !family->contains(coloring.induced(block.verts)))
            complain("positively weighted block outside the family");
        for (int v = 0; v < n; ++v) {
            if (!((block.verts >> v) & 1u)) continue;
            for (int u = 0; u < v; ++u)
                if ((block.verts >> u) & 1u) pair_weight[pair_index(u, v)] += block.weight;
        }
    }
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            const Rational& w = pair_weight[pair_index(u, v)];
            if (w > 1)
                complain("pair {" + std::to_string(u) + "," + std::to_string(v) +
                         "} covered with total weight " + to_string(w));
            else if (require_full_cover && w != 1)
                complain("pair {" + std::to_string(u) + "," + std::to_string(v) +
                         "} not fully covered (weight " + to_string(w) + ")");
        }
    return report;
}

namespace {

PropertyCheckReport run_property_check(int q, int k, const GraphFamily& allowed,
                                       const std::vector<Coloring>& colorings,
                                       std::uint64_t node_limit, int threads) {
    PropertyCheckReport report;
    report.q = q;
    report.k = k;
    report.entries.resize(colorings.size());
    parallel_for(colorings.size(), threads, [&](size_t i) {
        DecompositionResult r = exact_decomposition(colorings[i], k, allowed, node_limit);
        report.entries[i] = {to_graph6(colorings[i]), r.status};
    });
    for (const auto& e : report.entries) {
        if (e.status == SearchStatus::found) ++report.found;
        else if (e.status == SearchStatus::infeasible) ++report.infeasible;
        else ++report.unknown;
    }
    report.all_pass = report.found == static_cast<long>(report.entries.size());
    return report;
}

}  // namespace

PropertyCheckReport decomposition_property_check(int q, int k, const GraphFamily& allowed,
                                                 const std::vector<Coloring>& colorings,
                                                 std::uint64_t node_limit, int threads) {
    for (const auto& c : colorings)
        if (c.order() != q)
            throw std::invalid_argument("decomposition_property_check: coloring order mismatch");
    return run_property_check(q, k, allowed, colorings, node_limit, threads);
}

PropertyCheckReport decomposition_property_check_exhaustive(int q, int k,
                                                            const GraphFamily& allowed,
                                                            std::uint64_t node_limit,
                                                            int threads) {
    if (q > 8) throw std::invalid_argument("exhaustive property check: q at most 8");
    std::vector<Coloring> colorings = enumerate_graphs(q);
    return run_property_check(q, k, allowed, colorings, node_limit, threads);
}

}  // namespace cliquepack
