#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/invariants.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

/// Monochromatic-subgraph profile: every monochromatic subgraph on at most
/// n_cap vertices in colour i must be bounds[i-1]-vertex-colourable.
struct PProfile {
    int n_cap = 2;
    std::vector<int> bounds;
};

inline constexpr std::uint64_t default_arrows_budget = 1'000'000'000ULL;

struct ArrowsResult {
    bool arrows = false;
    std::optional<EdgeColouring> certificate;  // present exactly when !arrows
    std::uint64_t nodes = 0;
};

namespace detail {

/// Per-colour adjacency bit-matrix, mutated as the search colours edges.
struct ColourAdj {
    int n = 0, words = 0;
    std::vector<std::uint64_t> bits;

    explicit ColourAdj(int n_) : n(n_), words((n_ + 63) / 64), bits(static_cast<std::size_t>(n_) * words, 0) {}
    bool at(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1ULL;
    }
    void set(int u, int v) {
        bits[static_cast<std::size_t>(u) * words + (v >> 6)] |= 1ULL << (v & 63);
        bits[static_cast<std::size_t>(v) * words + (u >> 6)] |= 1ULL << (u & 63);
    }
    void clear(int u, int v) {
        bits[static_cast<std::size_t>(u) * words + (v >> 6)] &= ~(1ULL << (v & 63));
        bits[static_cast<std::size_t>(v) * words + (u >> 6)] &= ~(1ULL << (u & 63));
    }
};

}  // namespace detail

/// Decides f -> (h)_q: does every q-colouring of f's edges contain a
/// monochromatic copy of h? On false the certificate is a complete colouring
/// with no monochromatic copy, re-verified before returning.
///
/// Depth-first over edges in index order, extending partial colourings; a
/// branch dies as soon as the just-coloured edge completes a monochromatic
/// copy. Colours are introduced in increasing order (colour relabelling
/// preserves both the property and its negation, so this loses nothing).
inline ArrowsResult arrows(const Graph& f, const Graph& h, int q,
                           std::uint64_t budget_nodes = default_arrows_budget) {
    if (q < 2) throw precondition_error("arrows: q must be >= 2");

    // A monochromatic copy of an edgeless pattern is just enough vertices.
    if (h.edge_count() == 0) {
        if (f.vertex_count() >= h.vertex_count()) return {true, std::nullopt, 0};
        EdgeColouring cert{f, q, std::vector<int>(static_cast<std::size_t>(f.edge_count()), 1)};
        return {false, std::move(cert), 0};
    }

    const auto& edges = f.edges();
    const int ne = f.edge_count();
    const int n = f.vertex_count();
    std::vector<int> colours(ne, 0);
    std::vector<detail::ColourAdj> adj(q, detail::ColourAdj(n));
    std::uint64_t nodes = 0;

    auto completes_mono = [&](int ci, int u, int v) {
        auto cc = [&adj, ci](int a, int b) { return adj[ci].at(a, b); };
        for (const auto& [a, b] : h.edges()) {
            if (detail::match(cc, n, h, {{a, u}, {b, v}})) return true;
            if (detail::match(cc, n, h, {{a, v}, {b, u}})) return true;
        }
        return false;
    };

    auto rec = [&](auto&& self, int idx, int max_used) -> bool {
        if (idx == ne) return true;
        const auto [u, v] = edges[idx];
        const int cap = std::min(q, max_used + 1);
        for (int c = 1; c <= cap; ++c) {
            if (++nodes > budget_nodes) throw budget_exceeded_error("arrows: node budget exhausted");
            adj[c - 1].set(u, v);
            colours[idx] = c;
            if (!completes_mono(c - 1, u, v) && self(self, idx + 1, std::max(max_used, c))) return true;
            adj[c - 1].clear(u, v);
            colours[idx] = 0;
        }
        return false;
    };

    if (rec(rec, 0, 0)) {
        EdgeColouring cert{f, q, std::move(colours)};
        check(!find_monochromatic_copy(cert, h).has_value(),
              "arrows: certificate failed the final monochromatic-copy check");
        return {false, std::move(cert), nodes};
    }
    return {true, std::nullopt, nodes};
}

struct PProfileResult {
    bool ok = true;
    int colour = 0;            // violating colour when !ok
    std::vector<int> subset;   // violating vertex set when !ok
};

namespace detail {

/// Enumerates the connected vertex sets of g of size <= cap, each exactly
/// once (grown from its minimum vertex). visit returns false to abort.
template <class Visit>
bool for_each_connected_subset(const Graph& g, int cap, Visit&& visit) {
    const int n = g.vertex_count();
    if (cap < 1) return true;
    std::vector<int> s;
    auto rec = [&](auto&& self, int start, std::vector<int> ext, std::vector<char> banned) -> bool {
        if (!visit(static_cast<const std::vector<int>&>(s))) return false;
        if (static_cast<int>(s.size()) == cap) return true;
        while (!ext.empty()) {
            const int u = ext.front();
            ext.erase(ext.begin());
            std::vector<int> next_ext = ext;
            for (int w = start + 1; w < n; ++w) {
                if (w == u || banned[w] || !g.adjacent(u, w)) continue;
                if (std::find(s.begin(), s.end(), w) != s.end()) continue;
                if (std::find(next_ext.begin(), next_ext.end(), w) != next_ext.end()) continue;
                next_ext.push_back(w);
            }
            std::sort(next_ext.begin(), next_ext.end());
            s.push_back(u);
            if (!self(self, start, std::move(next_ext), banned)) return false;
            s.pop_back();
            banned[u] = 1;
        }
        return true;
    };
    for (int v = 0; v < n; ++v) {
        s = {v};
        std::vector<int> ext;
        for (int w = v + 1; w < n; ++w)
            if (g.adjacent(v, w)) ext.push_back(w);
        std::vector<char> banned(n, 0);
        if (!rec(rec, v, std::move(ext), std::move(banned))) return false;
    }
    return true;
}

/// Lexicographically least vertex set S (as a sorted sequence), |S| <= cap,
/// whose induced subgraph is not k-colourable. Preorder DFS over sorted
/// subsets visits them in exactly lexicographic order.
inline std::vector<int> least_violating_subset(const Graph& g, int cap, int k) {
    const int n = g.vertex_count();
    std::vector<int> s, found;
    auto rec = [&](auto&& self, int from) -> bool {
        for (int v = from; v < n; ++v) {
            s.push_back(v);
            if (!is_k_colourable(induced_subgraph(g, s), k)) {
                found = s;
                return true;
            }
            if (static_cast<int>(s.size()) < cap && self(self, v + 1)) return true;
            s.pop_back();
        }
        return false;
    };
    rec(rec, 0);
    check(!found.empty(), "least_violating_subset: violation vanished on the witness pass");
    return found;
}

}  // namespace detail

/// True iff for every colour i, every monochromatic colour-i subgraph on at
/// most p.n_cap vertices is p.bounds[i-1]-colourable. Detection enumerates
/// connected sets only (chromatic number is attained on a component); the
/// reported witness is the lexicographically least violating (colour, set).
inline PProfileResult verify_p_profile(const EdgeColouring& c, const PProfile& p) {
    if (static_cast<int>(p.bounds.size()) != c.q)
        throw precondition_error("verify_p_profile: bounds length must equal q");
    if (c.q < 2 || p.n_cap < 2) throw precondition_error("verify_p_profile: need q >= 2 and n_cap >= 2");
    for (int b : p.bounds)
        if (b < 1) throw precondition_error("verify_p_profile: bounds must be positive");
    if (!is_complete_colouring(c)) throw precondition_error("verify_p_profile: incomplete colouring");

    for (int i = 1; i <= c.q; ++i) {
        const Graph gi = colour_class(c, i);
        const int k = p.bounds[i - 1];
        bool violated = false;
        detail::for_each_connected_subset(gi, p.n_cap, [&](const std::vector<int>& s) {
            if (static_cast<int>(s.size()) >= 2 && !is_k_colourable(induced_subgraph(gi, s), k)) {
                violated = true;
                return false;
            }
            return true;
        });
        if (violated) return {false, i, detail::least_violating_subset(gi, p.n_cap, k)};
    }
    return {true, 0, {}};
}

/// Every graph F with at most n_max vertices (labelled, enumerated by vertex
/// count then graph6 bit order) satisfying F -> (g)_q and not F -> (h)_q.
/// Each hit is re-verified and streamed to on_found before being collected.
/// The enumeration is a one-sided probe: finding nothing proves nothing.
inline std::vector<Graph> find_separator(const Graph& g, const Graph& h, int q, int n_max,
                                         std::uint64_t budget_nodes = default_arrows_budget,
                                         const std::function<void(const Graph&)>& on_found = {}) {
    if (n_max < 1 || n_max > 11) throw precondition_error("find_separator: n_max must be in 1..11");
    std::vector<Graph> out;
    std::uint64_t remaining = budget_nodes;
    for (int n = 1; n <= n_max; ++n) {
        const int nbits = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (1ULL << nbits); ++code) {
            if (remaining == 0) throw budget_exceeded_error("find_separator: budget exhausted");
            --remaining;
            std::vector<std::pair<int, int>> edges;
            int p = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++p)
                    if ((code >> (nbits - 1 - p)) & 1ULL) edges.emplace_back(u, v);
            Graph f(n, std::move(edges));
            if (!find_subgraph_copy(f, g)) continue;
            ArrowsResult rg = arrows(f, g, q, remaining);
            remaining -= std::min(remaining, rg.nodes);
            if (!rg.arrows) continue;
            ArrowsResult rh = arrows(f, h, q, remaining);
            remaining -= std::min(remaining, rh.nodes);
            if (rh.arrows) continue;
            if (on_found) on_found(f);
            out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace ramsey
