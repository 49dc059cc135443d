#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Stores both the sorted edge list and a bit-matrix of adjacency rows, so
/// pair queries are O(1) and neighbourhood intersections are word-parallel.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0) throw precondition_error("graph: negative vertex count");
    }

    Graph(int n, std::vector<std::pair<int, int>> edge_list) : Graph(n) {
        for (auto& [u, v] : edge_list) {
            if (u == v) throw precondition_error("graph: loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw precondition_error("graph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges_ = std::move(edge_list);
        for (const auto& [u, v] : edges_) {
            set_bit(u, v);
            set_bit(v, u);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Sorted lexicographically, each pair with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1ULL;
    }

    int degree(int u) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(row(u)[w]);
        return d;
    }

    std::vector<int> neighbours(int u) const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (adjacent(u, v)) out.push_back(v);
        return out;
    }

    /// Index into edges() or -1.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        const std::pair<int, int> key{u, v};
        const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    int words() const { return words_; }
    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::pair<int, int>> edges_;
};

/// Injective placement of pattern vertices in a host: domain vertex i sits at
/// image[i].
struct Embedding {
    int domain_size = 0;
    std::vector<int> image;
};

inline bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& emb) {
    if (emb.domain_size != pattern.vertex_count()) return false;
    if (static_cast<int>(emb.image.size()) != emb.domain_size) return false;
    std::vector<int> sorted = emb.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : emb.image)
        if (v < 0 || v >= host.vertex_count()) return false;
    for (const auto& [a, b] : pattern.edges())
        if (!host.adjacent(emb.image[a], emb.image[b])) return false;
    return true;
}

// ---- builders ------------------------------------------------------------

inline Graph complete_graph(int r) {
    if (r < 0) throw precondition_error("complete_graph: negative order");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(r) * (r - 1) / 2);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) edges.emplace_back(u, v);
    return Graph(r, std::move(edges));
}

/// Complete r-partite graph, m vertices per class; class j occupies the
/// consecutive block [j*m, (j+1)*m).
inline Graph complete_multipartite(int r, int m) {
    if (r < 1 || m < 1) throw precondition_error("complete_multipartite: r and m must be >= 1");
    std::vector<std::pair<int, int>> edges;
    const int n = r * m;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / m != v / m) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// g followed by h, with h's vertices shifted by |V(g)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    return Graph(ng + h.vertex_count(), std::move(edges));
}

/// a_size independent vertices first, a copy of g shifted to [a_size, a_size+|g|),
/// and every cross edge between the two blocks.
inline Graph complete_join(int a_size, const Graph& g) {
    if (a_size < 0) throw precondition_error("complete_join: negative independent-set size");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u + a_size, v + a_size);
    for (int a = 0; a < a_size; ++a)
        for (int b = 0; b < g.vertex_count(); ++b) edges.emplace_back(a, a_size + b);
    return Graph(a_size + g.vertex_count(), std::move(edges));
}

/// G[S] relabelled to 0..|S|-1 preserving the order of S.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw precondition_error("induced_subgraph: repeated vertex");
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count())
            throw precondition_error("induced_subgraph: vertex out of range");
    std::vector<std::pair<int, int>> edges;
    const int k = static_cast<int>(verts.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(verts[i], verts[j])) edges.emplace_back(i, j);
    return Graph(k, std::move(edges));
}

}  // namespace ramsey
