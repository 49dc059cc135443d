#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

/// Total assignment of colours {1,...,q} to the edges of a graph; slot i
/// colours graph.edges()[i].
struct EdgeColouring {
    Graph graph;
    int q = 2;
    std::vector<int> colours;
};

inline bool is_complete_colouring(const EdgeColouring& c) {
    if (c.q < 2) return false;
    if (static_cast<int>(c.colours.size()) != c.graph.edge_count()) return false;
    for (int x : c.colours)
        if (x < 1 || x > c.q) return false;
    return true;
}

inline int colour_of(const EdgeColouring& c, int u, int v) {
    const int idx = c.graph.edge_index(u, v);
    if (idx < 0) throw precondition_error("colour_of: not an edge");
    return c.colours[idx];
}

/// Spanning subgraph holding exactly the colour-i edges.
inline Graph colour_class(const EdgeColouring& c, int i) {
    if (i < 1 || i > c.q) throw precondition_error("colour_class: colour out of range");
    if (!is_complete_colouring(c)) throw precondition_error("colour_class: incomplete colouring");
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < c.graph.edge_count(); ++e)
        if (c.colours[e] == i) edges.push_back(c.graph.edges()[e]);
    return Graph(c.graph.vertex_count(), std::move(edges));
}

struct MonoCopy {
    int colour = 0;
    Embedding embedding;
};

/// First colour class (ascending) containing a copy of h, with the embedding.
inline std::optional<MonoCopy> find_monochromatic_copy(const EdgeColouring& c, const Graph& h) {
    for (int i = 1; i <= c.q; ++i)
        if (auto emb = find_subgraph_copy(colour_class(c, i), h)) return MonoCopy{i, std::move(*emb)};
    return std::nullopt;
}

}  // namespace ramsey
