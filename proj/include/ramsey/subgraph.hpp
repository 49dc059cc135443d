#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {
namespace detail {

/// Static matching order: seeded vertices first, then repeatedly the unplaced
/// pattern vertex with the most already-ordered neighbours (ties: higher
/// degree, then lower index). Works for disconnected patterns.
inline std::vector<int> matching_order(const Graph& pattern, const std::vector<int>& seed_vertices) {
    const int k = pattern.vertex_count();
    std::vector<char> placed(k, 0);
    std::vector<int> order;
    order.reserve(k);
    for (int s : seed_vertices) {
        placed[s] = 1;
        order.push_back(s);
    }
    while (static_cast<int>(order.size()) < k) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int u = 0; u < k; ++u) {
            if (placed[u]) continue;
            int links = 0;
            for (int v : order)
                if (pattern.adjacent(u, v)) ++links;
            const int deg = pattern.degree(u);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = u;
                best_links = links;
                best_deg = deg;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

/// Backtracking extension over a generic host adjacency predicate.
/// image: pattern vertex -> host vertex or -1, with seeds pre-placed.
template <class AdjFn>
bool extend_match(AdjFn&& adj, int host_n, const Graph& pattern, const std::vector<int>& order,
                  std::vector<int>& image, std::vector<char>& used, std::size_t pos) {
    if (pos == order.size()) return true;
    const int u = order[pos];
    // Earlier-placed pattern neighbours constrain the candidate set.
    std::vector<int> anchors;
    for (std::size_t i = 0; i < pos; ++i)
        if (pattern.adjacent(u, order[i])) anchors.push_back(order[i]);
    for (int v = 0; v < host_n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int a : anchors)
            if (!adj(image[a], v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        image[u] = v;
        used[v] = 1;
        if (extend_match(adj, host_n, pattern, order, image, used, pos + 1)) return true;
        used[v] = 0;
        image[u] = -1;
    }
    return false;
}

/// Full seeded match against a generic adjacency; returns the image or none.
/// Deterministic: candidates are tried in ascending host-vertex order.
template <class AdjFn>
std::optional<std::vector<int>> match(AdjFn&& adj, int host_n, const Graph& pattern,
                                      const std::vector<std::pair<int, int>>& seeds) {
    const int k = pattern.vertex_count();
    if (k > host_n) return std::nullopt;
    std::vector<int> image(k, -1);
    std::vector<char> used(host_n, 0);
    std::vector<int> seed_vertices;
    for (const auto& [pu, hv] : seeds) {
        if (pu < 0 || pu >= k || hv < 0 || hv >= host_n) throw precondition_error("match: seed out of range");
        if (image[pu] != -1 || used[hv]) return std::nullopt;
        image[pu] = hv;
        used[hv] = 1;
        seed_vertices.push_back(pu);
    }
    // Seed placement must itself respect pattern edges.
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j)
            if (pattern.adjacent(seeds[i].first, seeds[j].first) && !adj(seeds[i].second, seeds[j].second))
                return std::nullopt;
    const std::vector<int> order = matching_order(pattern, seed_vertices);
    if (extend_match(adj, host_n, pattern, order, image, used, seeds.size())) return image;
    return std::nullopt;
}

}  // namespace detail

/// Injective map sending every pattern edge to a host edge (subgraph
/// containment, not induced). Deterministic for fixed inputs.
inline std::optional<Embedding> find_subgraph_copy(const Graph& host, const Graph& pattern) {
    auto adj = [&host](int u, int v) { return host.adjacent(u, v); };
    auto image = detail::match(adj, host.vertex_count(), pattern, {});
    if (!image) return std::nullopt;
    return Embedding{pattern.vertex_count(), std::move(*image)};
}

/// As find_subgraph_copy, with pattern vertices pre-pinned to host vertices.
inline std::optional<Embedding> find_subgraph_copy_seeded(const Graph& host, const Graph& pattern,
                                                          const std::vector<std::pair<int, int>>& seeds) {
    auto adj = [&host](int u, int v) { return host.adjacent(u, v); };
    auto image = detail::match(adj, host.vertex_count(), pattern, seeds);
    if (!image) return std::nullopt;
    return Embedding{pattern.vertex_count(), std::move(*image)};
}

/// All cycles of length 3..n_max, each once up to rotation and reflection.
/// Canonical form: the cycle starts at its smallest vertex and runs toward the
/// smaller of that vertex's two cycle neighbours.
inline std::vector<std::vector<int>> cycles_up_to(const Graph& g, int n_max) {
    if (n_max < 3) throw precondition_error("cycles_up_to: n_max must be >= 3");
    std::vector<std::vector<int>> out;
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    // Paths start at the cycle's minimum vertex and only visit larger ones;
    // a cycle is emitted in one direction only (second vertex < last vertex).
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int w = start + 1; w < n; ++w) {
            if (on_path[w] || !g.adjacent(v, w)) continue;
            path.push_back(w);
            on_path[w] = 1;
            if (static_cast<int>(path.size()) >= 3 && g.adjacent(w, start) && path[1] < w) out.push_back(path);
            if (static_cast<int>(path.size()) < n_max) self(self, start, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(dfs, s, s);
    }
    return out;
}

}  // namespace ramsey
