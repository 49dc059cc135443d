#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/invariants.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/search.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

/// Record of one blow-up L(base, eps, n_cap): a copy of the base graph placed
/// inside every hyperedge of the backing hypergraph.
struct BlowupTrace {
    Graph base;
    Hypergraph backing;
    std::vector<Embedding> embeddings;  // one per hyperedge, image = hyperedge
    Graph result;
};

/// Places base vertex i on the i-th smallest vertex of each hyperedge and takes
/// the union of the embedded edge sets. Backing girth > n_cap >= 2 guarantees
/// two hyperedges share at most one vertex, so no edge is claimed twice.
inline BlowupTrace build_l(const Graph& g, const Rational& eps, int n_cap,
                           const std::optional<Hypergraph>& backing = std::nullopt, std::uint64_t seed = 0,
                           std::uint64_t work_budget = default_search_budget) {
    if (g.vertex_count() < 2) throw precondition_error("build_l: base graph needs at least two vertices");
    if (n_cap < 2) throw precondition_error("build_l: n_cap must be >= 2");
    const int k = g.vertex_count();

    Hypergraph h = [&] {
        if (backing) {
            if (!is_valid_backing(*backing, k, n_cap, eps))
                throw invalid_backing_error(
                    "build_l: backing must be |V(base)|-uniform with girth > n_cap and independence below eps*n");
            return *backing;
        }
        return hypergraph_search(k, n_cap, eps, seed, work_budget);
    }();

    const int n = h.vertex_count();
    std::vector<Embedding> embeddings;
    embeddings.reserve(h.edge_count());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> claimed_by;  // parallel to edges before dedup

    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& image = h.hyperedge(e);
        embeddings.push_back(Embedding{k, image});
        for (const auto& [u, v] : g.edges()) {
            int x = image[u], y = image[v];
            if (x > y) std::swap(x, y);
            edges.emplace_back(x, y);
            claimed_by.push_back(e);
        }
    }
    {
        // Girth >= 3 makes the claims disjoint; a double claim is a logic bug.
        std::vector<std::size_t> idx(edges.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (edges[idx[i - 1]] == edges[idx[i]])
                check(claimed_by[idx[i - 1]] == claimed_by[idx[i]], "build_l: edge claimed by two hyperedges");
    }

    return BlowupTrace{g, h, std::move(embeddings), Graph(n, edges)};
}

struct Lemma3Result {
    bool ok = true;
    std::vector<int> cycle;      // violating cycle, empty when ok
    std::vector<int> hyperedge;  // hyperedge containing an edge but not all of the cycle
};

/// Checks that every cycle of length <= n_cap in the blow-up lives inside a
/// single hyperedge: any hyperedge containing one cycle edge contains the
/// whole cycle.
inline Lemma3Result verify_lemma3(const BlowupTrace& bt, int n_cap) {
    if (const auto girth = hypergraph_girth(bt.backing); girth && *girth <= n_cap)
        throw precondition_error("verify_lemma3: backing girth must exceed n_cap");
    if (n_cap < 3) return {};

    for (const auto& cycle : cycles_up_to(bt.result, n_cap)) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            for (int e : bt.backing.incident(u)) {
                const auto& he = bt.backing.hyperedge(e);
                if (!std::binary_search(he.begin(), he.end(), v)) continue;
                const bool contains_all = std::all_of(cycle.begin(), cycle.end(), [&](int w) {
                    return std::binary_search(he.begin(), he.end(), w);
                });
                if (!contains_all) return {false, cycle, he};
            }
        }
    }
    return {};
}

struct Lemma5Result {
    bool ok = true;
    std::vector<int> subset;  // witness subset with no base copy, empty when ok
};

/// Exhaustively checks that every vertex subset of size ceil(eps*n) induces a
/// copy of the base graph. Intended for desk-scale results only.
inline Lemma5Result verify_lemma5(const BlowupTrace& bt, const Rational& eps) {
    const int n = bt.result.vertex_count();
    const long long s0_ll = eps.ceil_times(n);
    if (s0_ll > n) return {};
    const int s0 = static_cast<int>(std::max<long long>(s0_ll, 0));

    std::vector<int> subset(s0);
    auto rec = [&](auto&& self, int from, int depth) -> std::optional<std::vector<int>> {
        if (depth == s0) {
            const Graph induced = induced_subgraph(bt.result, subset);
            if (!find_subgraph_copy(induced, bt.base)) return subset;
            return std::nullopt;
        }
        for (int v = from; v <= n - (s0 - depth); ++v) {
            subset[depth] = v;
            if (auto bad = self(self, v + 1, depth + 1)) return bad;
        }
        return std::nullopt;
    };
    if (auto bad = rec(rec, 0, 0)) return {false, *bad};
    return {};
}

}  // namespace ramsey
