#pragma once

// A fixed catalogue of small graphs (at most 8 vertices): named families plus
// seeded random graphs. Used to cross-check invariant solvers against the
// brute-force oracles.

#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rng.hpp"

namespace catalog {

using ramsey::Graph;

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

inline Graph wheel_graph(int rim) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < rim; ++v) {
        edges.emplace_back(v, (v + 1) % rim);
        edges.emplace_back(v, rim);
    }
    return Graph(rim + 1, edges);
}

inline Graph cube_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            const int v = u ^ (1 << b);
            if (u < v) edges.emplace_back(u, v);
        }
    return Graph(8, edges);
}

inline Graph random_graph(int n, int percent, std::uint64_t seed) {
    ramsey::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(percent)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline std::vector<std::pair<std::string, Graph>> graphs() {
    std::vector<std::pair<std::string, Graph>> out;
    const auto add = [&](std::string name, Graph g) { out.emplace_back(std::move(name), std::move(g)); };

    for (int n = 1; n <= 8; ++n) add("K_" + std::to_string(n), ramsey::complete_graph(n));
    for (int n = 1; n <= 8; ++n) add("empty_" + std::to_string(n), Graph(n));
    for (int n = 3; n <= 8; ++n) add("C_" + std::to_string(n), cycle_graph(n));
    for (int n = 2; n <= 8; ++n) add("P_" + std::to_string(n), path_graph(n));
    for (int r = 2; r <= 7; ++r) add("star_" + std::to_string(r), star_graph(r));
    for (int a = 1; a <= 4; ++a)
        for (int b = a; a + b <= 8; ++b)
            add("K_" + std::to_string(a) + "," + std::to_string(b), complete_bipartite(a, b));
    for (int r = 2; r <= 4; ++r)
        for (int m = 2; r * m <= 8; ++m)
            add("K_" + std::to_string(r) + "(" + std::to_string(m) + ")", ramsey::complete_multipartite(r, m));
    for (int rim = 3; rim <= 7; ++rim) add("W_" + std::to_string(rim), wheel_graph(rim));
    add("Q_3", cube_graph());
    for (int m = 1; m <= 4; ++m) {
        Graph g(0);
        for (int i = 0; i < m; ++i) g = ramsey::disjoint_union(g, ramsey::complete_graph(2));
        add(std::to_string(m) + "K_2", g);
    }
    add("K_3+K_2", ramsey::disjoint_union(ramsey::complete_graph(3), ramsey::complete_graph(2)));
    add("K_3+K_3", ramsey::disjoint_union(ramsey::complete_graph(3), ramsey::complete_graph(3)));
    add("C_5+K_3", ramsey::disjoint_union(cycle_graph(5), ramsey::complete_graph(3)));
    add("K_4+K_4", ramsey::disjoint_union(ramsey::complete_graph(4), ramsey::complete_graph(4)));
    add("P_4+P_4", ramsey::disjoint_union(path_graph(4), path_graph(4)));
    add("C_4+C_4", ramsey::disjoint_union(cycle_graph(4), cycle_graph(4)));
    add("K_5-e", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}));
    add("bull", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}));
    add("house", Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
    add("prism", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
    add("moebius_kantor_fragment",
        Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4}, {1, 5}}));

    for (int n = 5; n <= 8; ++n)
        for (int percent : {20, 35, 50, 65, 80})
            for (int s = 1; s <= 8; ++s) {
                const auto seed = ramsey::mix_seed(9000, static_cast<std::uint64_t>(n * 10000 + percent * 10 + s));
                add("G(" + std::to_string(n) + "," + std::to_string(percent) + "%,s" + std::to_string(s) + ")",
                    random_graph(n, percent, seed));
            }
    return out;
}

}  // namespace catalog
