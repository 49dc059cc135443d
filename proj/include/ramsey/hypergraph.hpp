#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

/// k-uniform hypergraph on vertices 0..n-1. Hyperedges are stored sorted
/// internally and lexicographically as a list, with duplicates removed.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n, int k, std::vector<std::vector<int>> hyperedges) : n_(n), k_(k) {
        if (n < 0) throw precondition_error("hypergraph: negative vertex count");
        if (k < 2) throw precondition_error("hypergraph: uniformity must be >= 2");
        for (auto& e : hyperedges) {
            if (static_cast<int>(e.size()) != k)
                throw precondition_error("hypergraph: hyperedge of wrong size");
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw precondition_error("hypergraph: repeated vertex in hyperedge");
            if (e.front() < 0 || e.back() >= n)
                throw precondition_error("hypergraph: vertex out of range");
        }
        std::sort(hyperedges.begin(), hyperedges.end());
        hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());
        edges_ = std::move(hyperedges);
    }

    int vertex_count() const { return n_; }
    int uniformity() const { return k_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& hyperedges() const { return edges_; }
    const std::vector<int>& hyperedge(int i) const { return edges_[i]; }

    /// Hyperedges containing vertex v, as indices into hyperedges().
    std::vector<int> incident(int v) const {
        std::vector<int> out;
        for (int i = 0; i < edge_count(); ++i)
            if (std::binary_search(edges_[i].begin(), edges_[i].end(), v)) out.push_back(i);
        return out;
    }

    bool operator==(const Hypergraph& o) const {
        return n_ == o.n_ && k_ == o.k_ && edges_ == o.edges_;
    }
    bool operator!=(const Hypergraph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    int k_ = 2;
    std::vector<std::vector<int>> edges_;
};

}  // namespace ramsey
