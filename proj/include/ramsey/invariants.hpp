#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/hypergraph.hpp"

namespace ramsey {

/// Vertex -> colour map with colours drawn from {1,...,t}.
struct VertexColouring {
    int t = 0;
    std::vector<int> colours;
};

inline bool is_proper(const Graph& g, const VertexColouring& vc) {
    if (static_cast<int>(vc.colours.size()) != g.vertex_count()) return false;
    for (int c : vc.colours)
        if (c < 1 || c > vc.t) return false;
    for (const auto& [u, v] : g.edges())
        if (vc.colours[u] == vc.colours[v]) return false;
    return true;
}

/// Circuit in a hypergraph: distinct vertices v_1..v_s and distinct
/// hyperedges e_1..e_s with v_i,v_{i+1} in e_i (indices mod s). Length = s.
struct Circuit {
    std::vector<int> vertices;
    std::vector<std::vector<int>> hyperedges;

    int length() const { return static_cast<int>(hyperedges.size()); }
};

namespace detail {

/// Vertices by decreasing degree, ties by index: the assignment order for
/// every colouring search (deterministic, constrains early).
inline std::vector<int> colouring_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

inline bool colour_fits(const Graph& g, const std::vector<int>& col, int v, int c) {
    for (int w = 0; w < g.vertex_count(); ++w)
        if (col[w] == c && g.adjacent(v, w)) return false;
    return true;
}

/// Proper colouring search with at most `limit` colours; new colours are
/// introduced in increasing order (canonical under colour permutation).
inline bool colour_dfs(const Graph& g, const std::vector<int>& order, int limit, std::size_t pos,
                       int max_used, std::vector<int>& col) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    const int cap = std::min(limit, max_used + 1);
    for (int c = 1; c <= cap; ++c) {
        if (!colour_fits(g, col, v, c)) continue;
        col[v] = c;
        if (colour_dfs(g, order, limit, pos + 1, std::max(max_used, c), col)) return true;
        col[v] = 0;
    }
    return false;
}

}  // namespace detail

/// Proper colouring in at most k colours, or none. The witness reports t = k.
inline std::optional<VertexColouring> is_k_colourable(const Graph& g, int k) {
    if (k < 0) throw precondition_error("is_k_colourable: negative colour count");
    const int n = g.vertex_count();
    if (n == 0) return VertexColouring{k, {}};
    if (k == 0) return std::nullopt;
    std::vector<int> col(n, 0);
    const auto order = detail::colouring_order(g);
    if (detail::colour_dfs(g, order, k, 0, 0, col)) return VertexColouring{k, std::move(col)};
    return std::nullopt;
}

inline int clique_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const int words = g.words();
    int best = 0;

    auto test = [](const std::vector<std::uint64_t>& bits, int v) {
        return ((bits[v >> 6] >> (v & 63)) & 1ULL) != 0;
    };
    auto count_from = [words](const std::vector<std::uint64_t>& bits, int v) {
        int total = 0;
        for (int w = v >> 6; w < words; ++w) {
            std::uint64_t x = bits[w];
            if (w == (v >> 6)) x &= ~0ULL << (v & 63);
            total += std::popcount(x);
        }
        return total;
    };

    std::vector<std::uint64_t> all(words, 0);
    for (int v = 0; v < n; ++v) all[v >> 6] |= 1ULL << (v & 63);

    // Cliques are grown in ascending vertex order: extending by v keeps only
    // candidates above v that are adjacent to v.
    auto rec = [&](auto&& self, const std::vector<std::uint64_t>& cs, int size) -> void {
        if (size > best) best = size;
        for (int v = 0; v < n; ++v) {
            if (!test(cs, v)) continue;
            if (size + count_from(cs, v) <= best) return;
            std::vector<std::uint64_t> next(words);
            const std::uint64_t* rv = g.row(v);
            for (int w = 0; w < words; ++w) next[w] = cs[w] & rv[w];
            for (int w = 0; w < (v >> 6); ++w) next[w] = 0;
            const std::uint64_t lowmask = (v & 63) == 63 ? ~0ULL : ((1ULL << ((v & 63) + 1)) - 1);
            next[v >> 6] &= ~lowmask;
            self(self, next, size + 1);
        }
    };
    rec(rec, all, 0);
    return best;
}

struct ChromaticResult {
    int chi = 0;
    VertexColouring colouring;
};

/// Exact chromatic number with an optimal witness colouring.
inline ChromaticResult chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {0, VertexColouring{0, {}}};

    // Greedy (largest degree first) gives the upper bound and a fallback witness.
    const auto order = detail::colouring_order(g);
    std::vector<int> greedy(n, 0);
    int ub = 0;
    for (int v : order) {
        int c = 1;
        while (!detail::colour_fits(g, greedy, v, c)) ++c;
        greedy[v] = c;
        ub = std::max(ub, c);
    }

    const int lb = std::max(1, clique_number(g));
    for (int t = lb; t < ub; ++t)
        if (auto w = is_k_colourable(g, t)) return {t, std::move(*w)};
    return {ub, VertexColouring{ub, std::move(greedy)}};
}

/// Length of the shortest odd cycle; none for bipartite graphs.
/// BFS on the bipartite double cover: dist to (start, odd parity) is the
/// shortest odd closed walk through start, and the minimum over all start
/// vertices of those walk lengths is attained by a genuine odd cycle.
inline std::optional<int> odd_girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(2 * n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[2 * s] = 0;
        q.push(2 * s);
        while (!q.empty()) {
            const int cur = q.front();
            q.pop();
            const int v = cur >> 1, parity = cur & 1;
            for (int w = 0; w < n; ++w) {
                if (!g.adjacent(v, w)) continue;
                const int nxt = 2 * w + (parity ^ 1);
                if (dist[nxt] < 0) {
                    dist[nxt] = dist[cur] + 1;
                    q.push(nxt);
                }
            }
        }
        if (dist[2 * s + 1] >= 0 && (best < 0 || dist[2 * s + 1] < best)) best = dist[2 * s + 1];
    }
    if (best < 0) return std::nullopt;
    return best;
}

struct AResult {
    int a = 0;
    VertexColouring colouring;
};

/// Minimum possible size of colour class 1 over proper chi(g)-colourings.
/// Colour 1 is distinguished, so symmetry breaking applies to colours >= 2
/// only; branches avoiding colour 1 are explored first.
inline AResult a_parameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw precondition_error("a_parameter: graph must have at least one vertex");
    const ChromaticResult cr = chromatic_number(g);
    const int chi = cr.chi;

    int best = static_cast<int>(std::count(cr.colouring.colours.begin(), cr.colouring.colours.end(), 1));
    std::vector<int> best_col = cr.colouring.colours;

    const auto order = detail::colouring_order(g);
    std::vector<int> col(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, int count1, int max_ge2) -> void {
        if (count1 >= best) return;
        if (pos == order.size()) {
            best = count1;
            best_col = col;
            return;
        }
        const int v = order[pos];
        const int cap = std::min(chi, max_ge2 + 1);
        for (int c = 2; c <= cap; ++c) {
            if (!detail::colour_fits(g, col, v, c)) continue;
            col[v] = c;
            self(self, pos + 1, count1, std::max(max_ge2, c));
            col[v] = 0;
        }
        if (detail::colour_fits(g, col, v, 1)) {
            col[v] = 1;
            self(self, pos + 1, count1 + 1, max_ge2);
            col[v] = 0;
        }
    };
    rec(rec, 0, 0, 1);

    check(best >= 1, "a_parameter: empty colour-1 class would contradict chromatic minimality");
    return {best, VertexColouring{chi, std::move(best_col)}};
}

// ---- hypergraph circuits and independence ---------------------------------

/// Shortest circuit via BFS over the vertex/hyperedge incidence graph:
/// circuits of length s correspond exactly to incidence cycles of length 2s.
inline std::optional<Circuit> shortest_circuit(const Hypergraph& h) {
    const int n = h.vertex_count();
    const int m = h.edge_count();
    const int total = n + m;
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < m; ++e)
        for (int v : h.hyperedge(e)) inc[v].push_back(e);
    auto neighbours = [&](int node) -> std::vector<int> {
        std::vector<int> out;
        if (node < n) {
            for (int e : inc[node]) out.push_back(n + e);
        } else {
            out = h.hyperedge(node - n);
        }
        return out;
    };

    int best_len = -1;
    std::vector<int> best_cycle;
    std::vector<int> dist(total), parent(total);

    for (int root = 0; root < total; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : neighbours(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                    continue;
                }
                if (parent[u] == w) continue;
                const int candidate = dist[u] + dist[w] + 1;
                if (best_len >= 0 && candidate >= best_len) continue;
                // Reconstruct the simple cycle: both paths up to their LCA.
                std::vector<char> mark(total, 0);
                for (int x = u; x != -1; x = parent[x]) mark[x] = 1;
                int lca = w;
                while (!mark[lca]) lca = parent[lca];
                std::vector<int> up_u, up_w;
                for (int x = u; x != lca; x = parent[x]) up_u.push_back(x);
                up_u.push_back(lca);
                for (int x = w; x != lca; x = parent[x]) up_w.push_back(x);
                std::vector<int> cycle = up_u;
                for (auto it = up_w.rbegin(); it != up_w.rend(); ++it) cycle.push_back(*it);
                const int len = static_cast<int>(cycle.size());
                if (best_len < 0 || len < best_len) {
                    best_len = len;
                    best_cycle = std::move(cycle);
                }
            }
        }
    }

    if (best_len < 0) return std::nullopt;
    check(best_len % 2 == 0, "shortest_circuit: incidence cycle must alternate");
    // Rotate so the cycle starts on a vertex node, then split alternating.
    std::size_t off = 0;
    while (best_cycle[off] >= n) ++off;
    Circuit c;
    const std::size_t len = best_cycle.size();
    for (std::size_t i = 0; i < len; i += 2) {
        const int vn = best_cycle[(off + i) % len];
        const int en = best_cycle[(off + i + 1) % len];
        check(vn < n && en >= n, "shortest_circuit: incidence cycle must alternate");
        c.vertices.push_back(vn);
        c.hyperedges.push_back(h.hyperedge(en - n));
    }
    return c;
}

/// Circuit length of the shortest circuit; none if the hypergraph has no
/// circuit ("infinite girth").
inline std::optional<int> hypergraph_girth(const Hypergraph& h) {
    const auto c = shortest_circuit(h);
    if (!c) return std::nullopt;
    return c->length();
}

namespace detail {

inline bool independent_dfs(const Hypergraph& h, const std::vector<std::vector<int>>& inc, int target,
                            int pos, int chosen, std::vector<int>& cnt) {
    if (chosen == target) return true;
    const int n = h.vertex_count();
    if (chosen + (n - pos) < target) return false;
    if (pos == n) return false;
    // include pos unless that completes a hyperedge
    bool blocked = false;
    for (int e : inc[pos])
        if (cnt[e] == h.uniformity() - 1) {
            blocked = true;
            break;
        }
    if (!blocked) {
        for (int e : inc[pos]) ++cnt[e];
        if (independent_dfs(h, inc, target, pos + 1, chosen + 1, cnt)) return true;
        for (int e : inc[pos]) --cnt[e];
    }
    return independent_dfs(h, inc, target, pos + 1, chosen, cnt);
}

}  // namespace detail

/// Decision form with early abort: is there a t-vertex set containing no
/// hyperedge entirely?
inline bool has_independent_set_of_size(const Hypergraph& h, int t) {
    if (t <= 0) return true;
    if (t > h.vertex_count()) return false;
    std::vector<std::vector<int>> inc(h.vertex_count());
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.hyperedge(e)) inc[v].push_back(e);
    std::vector<int> cnt(h.edge_count(), 0);
    return detail::independent_dfs(h, inc, t, 0, 0, cnt);
}

/// Largest vertex set containing no hyperedge.
inline int hypergraph_independence_number(const Hypergraph& h) {
    int lo = 0, hi = h.vertex_count();
    // has_independent_set_of_size is monotone decreasing in t
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        if (has_independent_set_of_size(h, mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace ramsey
