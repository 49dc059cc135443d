#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/blowup.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/invariants.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

/// Resource limits for tower construction. search_work bounds each blow-up's
/// hypergraph search separately; max_vertices bounds every built graph.
struct BuildLimits {
    std::uint64_t search_work = default_search_budget;
    int max_vertices = 4096;
};

/// One level of the recursive construction. Level 0 is an edgeless graph on m
/// vertices; level i+1 joins a_set (q*m fresh independent vertices, ids
/// [0,q*m)) completely onto the blow-up of the previous level (ids shifted by
/// q*m). prev links to the previous level so colouring and extraction can
/// recurse on a single trace.
struct ConstructionTrace {
    int level = 0;
    int m = 0;
    int q = 2;
    int n_cap = 2;
    Rational eps_used;
    std::vector<int> a_set;
    std::vector<int> b_set;
    std::optional<BlowupTrace> inner;
    std::shared_ptr<const ConstructionTrace> prev;
    Graph graph;
};

/// q^{-q*m} as an exact rational; the denominator must fit in 64 bits.
inline Rational default_tower_eps(int m, int q) {
    if (m < 1 || q < 2) throw precondition_error("default_tower_eps: need m >= 1 and q >= 2");
    __int128 p = 1;
    const long long e = static_cast<long long>(q) * m;
    for (long long i = 0; i < e; ++i) {
        p *= q;
        if (p > std::numeric_limits<std::int64_t>::max())
            throw size_budget_exceeded_error("default_tower_eps: denominator exceeds exact range", -1);
    }
    return Rational(1, static_cast<std::int64_t>(p));
}

/// Builds F_0..F_levels: F_0 edgeless on m vertices, F_{i+1} the complete join
/// of q*m independent vertices onto the blow-up of F_i. The default epsilon is
/// q^{-q*m}; eps_override trades the full guarantee for feasible sizes.
inline std::vector<ConstructionTrace> build_f_tower(int m, int n_cap, int q, int levels,
                                                    const std::optional<Rational>& eps_override = std::nullopt,
                                                    std::uint64_t seed = 0, const BuildLimits& limits = {}) {
    if (m < 2) throw precondition_error("build_f_tower: m must be >= 2");
    if (n_cap < 2) throw precondition_error("build_f_tower: n_cap must be >= 2");
    if (q < 2) throw precondition_error("build_f_tower: q must be >= 2");
    if (levels < 0) throw precondition_error("build_f_tower: levels must be >= 0");
    const Rational eps = eps_override ? *eps_override : default_tower_eps(m, q);
    if (!eps.positive() || Rational(1) < eps)
        throw precondition_error("build_f_tower: eps must satisfy 0 < eps <= 1");
    if (m > limits.max_vertices) throw size_budget_exceeded_error("build_f_tower: m exceeds max_vertices", -1);

    std::vector<ConstructionTrace> out;
    ConstructionTrace f0;
    f0.m = m;
    f0.q = q;
    f0.n_cap = n_cap;
    f0.eps_used = eps;
    f0.graph = Graph(m);
    out.push_back(std::move(f0));

    for (int i = 1; i <= levels; ++i) {
        auto prev = std::make_shared<const ConstructionTrace>(out.back());
        BlowupTrace bt = build_l(prev->graph, eps, n_cap, std::nullopt, mix_seed(seed, static_cast<std::uint64_t>(i)),
                                 limits.search_work);
        const int a = q * m;
        const int nb = bt.result.vertex_count();
        if (a + nb > limits.max_vertices)
            throw size_budget_exceeded_error("build_f_tower: level graph exceeds max_vertices", i - 1);

        ConstructionTrace t;
        t.level = i;
        t.m = m;
        t.q = q;
        t.n_cap = n_cap;
        t.eps_used = eps;
        t.a_set.resize(a);
        std::iota(t.a_set.begin(), t.a_set.end(), 0);
        t.b_set.resize(nb);
        std::iota(t.b_set.begin(), t.b_set.end(), a);
        t.graph = complete_join(a, bt.result);
        t.inner = std::move(bt);
        t.prev = std::move(prev);
        out.push_back(std::move(t));
    }
    return out;
}

namespace detail {

/// Copies a colouring of the blow-up base onto the blow-up result through
/// every hyperedge embedding. Well-defined because no result edge belongs to
/// two embedded copies.
inline EdgeColouring replicate_through(const BlowupTrace& bt, const EdgeColouring& base_col) {
    check(base_col.graph == bt.base, "replicate_through: colouring does not cover the blow-up base");
    std::vector<int> colours(bt.result.edge_count(), 0);
    for (const auto& emb : bt.embeddings) {
        for (int e = 0; e < bt.base.edge_count(); ++e) {
            const auto& [u, v] = bt.base.edges()[e];
            const int idx = bt.result.edge_index(emb.image[u], emb.image[v]);
            check(idx >= 0, "replicate_through: embedded edge missing from blow-up");
            colours[idx] = base_col.colours[e];
        }
    }
    for (int c : colours) check(c >= 1, "replicate_through: blow-up edge left uncoloured");
    return EdgeColouring{bt.result, base_col.q, std::move(colours)};
}

}  // namespace detail

/// Recursive good colouring: join edges take the smallest colour whose bound
/// is at least 2, the interior takes a good colouring for that bound
/// decremented, replicated through every embedded copy. Result passes
/// verify_p_profile with profile (n_cap, bounds).
inline EdgeColouring good_colouring(const ConstructionTrace& t, const std::vector<int>& bounds) {
    if (static_cast<int>(bounds.size()) != t.q)
        throw precondition_error("good_colouring: bounds length must equal q");
    long long sum = 0;
    for (int b : bounds) {
        if (b < 1) throw precondition_error("good_colouring: every bound must be >= 1");
        sum += b;
    }
    if (sum != t.level + t.q) throw precondition_error("good_colouring: bounds must sum to level + q");

    if (t.level == 0) return EdgeColouring{t.graph, t.q, {}};
    check(t.inner.has_value() && t.prev != nullptr, "good_colouring: trace missing inner blow-up or parent");

    int join_colour = 0;
    for (int idx = 0; idx < t.q; ++idx)
        if (bounds[idx] >= 2) {
            join_colour = idx + 1;
            break;
        }
    check(join_colour >= 1, "good_colouring: no decrementable bound at positive level");

    std::vector<int> inner_bounds = bounds;
    inner_bounds[join_colour - 1] -= 1;
    const EdgeColouring blow = detail::replicate_through(*t.inner, good_colouring(*t.prev, inner_bounds));

    const int a = static_cast<int>(t.a_set.size());
    std::vector<int> colours(t.graph.edge_count(), 0);
    for (int e = 0; e < t.graph.edge_count(); ++e) {
        const auto& [u, v] = t.graph.edges()[e];
        colours[e] = u < a ? join_colour : colour_of(blow, u - a, v - a);
    }
    return EdgeColouring{t.graph, t.q, std::move(colours)};
}

/// Monochromatic complete bipartite core found by two pigeonhole steps.
struct FocusResult {
    std::vector<int> a_prime;
    std::vector<int> b_prime;
    int colour = 0;
};

/// Groups b-vertices by their colour pattern toward a_set and keeps the
/// largest group (tie: least pattern), then the largest colour class within
/// that pattern (tie: least colour). Guarantees |a'| >= |a|/q rounded up and
/// |b'| >= |b|/q^{|a|} rounded up.
inline FocusResult focus(const std::vector<int>& a_set, const std::vector<int>& b_set, const EdgeColouring& c) {
    if (a_set.empty() || b_set.empty()) throw precondition_error("focus: a_set and b_set must be non-empty");
    if (!is_complete_colouring(c)) throw precondition_error("focus: incomplete colouring");

    std::vector<int> as = a_set, bs = b_set;
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());

    std::map<std::vector<int>, std::vector<int>> groups;
    for (int b : bs) {
        std::vector<int> pattern(as.size());
        for (std::size_t i = 0; i < as.size(); ++i) {
            if (c.graph.edge_index(as[i], b) < 0) throw precondition_error("focus: a-b pair is not an edge");
            pattern[i] = colour_of(c, as[i], b);
        }
        groups[pattern].push_back(b);
    }

    const std::pair<const std::vector<int>, std::vector<int>>* best = nullptr;
    for (const auto& entry : groups)
        if (!best || entry.second.size() > best->second.size()) best = &entry;

    std::vector<int> count(c.q + 1, 0);
    for (int col : best->first) ++count[col];
    int colour = 1;
    for (int col = 2; col <= c.q; ++col)
        if (count[col] > count[colour]) colour = col;

    std::vector<int> a_prime;
    for (std::size_t i = 0; i < as.size(); ++i)
        if (best->first[i] == colour) a_prime.push_back(as[i]);
    return FocusResult{std::move(a_prime), best->second, colour};
}

/// Per colour j, m_values[j-1] pairwise-disjoint m-vertex classes whose cross
/// edges all exist and carry colour j: a monochromatic complete multipartite
/// witness. At the base level the single class may be shared across colours.
struct RamseyWitness {
    std::vector<int> m_values;
    std::vector<std::vector<std::vector<int>>> classes;
};

inline bool witness_is_valid(const EdgeColouring& c, const RamseyWitness& w, int m) {
    if (w.m_values.size() != w.classes.size()) return false;
    if (static_cast<int>(w.m_values.size()) != c.q) return false;
    for (int j = 0; j < c.q; ++j) {
        if (w.m_values[j] < 1) return false;
        if (w.m_values[j] != static_cast<int>(w.classes[j].size())) return false;
        std::vector<int> seen;
        for (const auto& cls : w.classes[j]) {
            if (static_cast<int>(cls.size()) != m) return false;
            for (int v : cls) {
                if (v < 0 || v >= c.graph.vertex_count()) return false;
                seen.push_back(v);
            }
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
        for (std::size_t x = 0; x < w.classes[j].size(); ++x)
            for (std::size_t y = x + 1; y < w.classes[j].size(); ++y)
                for (int u : w.classes[j][x])
                    for (int v : w.classes[j][y]) {
                        if (c.graph.edge_index(u, v) < 0) return false;
                        if (colour_of(c, u, v) != j + 1) return false;
                    }
    }
    return true;
}

/// Walks the trace: focus the join, truncate a' to its m smallest vertices,
/// descend into an embedded copy inside b', and append a' to the focus colour.
/// Total class count always lands at level + q.
inline RamseyWitness extract_witness(const ConstructionTrace& t, const EdgeColouring& c) {
    if (!is_complete_colouring(c) || c.q != t.q || c.graph != t.graph)
        throw precondition_error("extract_witness: colouring must cover the trace graph with its q colours");

    RamseyWitness w;
    if (t.level == 0) {
        std::vector<int> all(t.m);
        std::iota(all.begin(), all.end(), 0);
        w.m_values.assign(t.q, 1);
        w.classes.assign(t.q, {all});
    } else {
        check(t.inner.has_value() && t.prev != nullptr, "extract_witness: trace missing inner blow-up or parent");
        const FocusResult fr = focus(t.a_set, t.b_set, c);

        std::vector<int> a_prime = fr.a_prime;
        check(static_cast<int>(a_prime.size()) >= t.m, "extract_witness: focussed side smaller than m");
        a_prime.resize(t.m);

        const int a = static_cast<int>(t.a_set.size());
        std::vector<int> b_local;
        b_local.reserve(fr.b_prime.size());
        for (int b : fr.b_prime) b_local.push_back(b - a);
        std::sort(b_local.begin(), b_local.end());

        const Hypergraph& back = t.inner->backing;
        int chosen = -1;
        for (int e = 0; e < back.edge_count(); ++e) {
            const auto& he = back.hyperedge(e);
            if (std::includes(b_local.begin(), b_local.end(), he.begin(), he.end())) {
                chosen = e;
                break;
            }
        }
        if (chosen < 0)
            throw extraction_failure_error(
                "extract_witness: focussed set contains no hyperedge; the construction's epsilon was too weak");

        const auto& img = t.inner->embeddings[chosen].image;
        const Graph& inner_graph = t.prev->graph;
        std::vector<int> inner_colours(inner_graph.edge_count(), 0);
        for (int e = 0; e < inner_graph.edge_count(); ++e) {
            const auto& [u, v] = inner_graph.edges()[e];
            inner_colours[e] = colour_of(c, a + img[u], a + img[v]);
        }
        w = extract_witness(*t.prev, EdgeColouring{inner_graph, t.q, std::move(inner_colours)});

        for (auto& per_colour : w.classes)
            for (auto& cls : per_colour)
                for (int& v : cls) v = a + img[v];

        w.m_values[fr.colour - 1] += 1;
        w.classes[fr.colour - 1].push_back(std::move(a_prime));
    }

    long long total = 0;
    for (int mv : w.m_values) total += mv;
    check(total == t.level + t.q, "extract_witness: class count must equal level + q");
    check(witness_is_valid(c, w, t.m), "extract_witness: assembled witness failed structural checks");
    return w;
}

/// The distinguishing construction: a tower to level q*(chi-2), one more
/// blow-up at the a-parameter epsilon, and q*a(base) fresh independent
/// vertices joined on top.
struct Theorem8Trace {
    Graph base;
    int q = 2;
    int n_cap = 2;
    int m = 0;
    int chi = 0;
    int a_of_g = 0;
    Rational eps_tower;
    Rational eps_final;
    std::vector<ConstructionTrace> tower;
    BlowupTrace l_trace;
    std::vector<int> a_set;
    Graph graph;
};

inline Theorem8Trace build_theorem8(const Graph& g, int h_size, int q,
                                    const std::optional<Rational>& eps_override = std::nullopt,
                                    std::uint64_t seed = 0, const BuildLimits& limits = {}) {
    if (h_size < 2) throw precondition_error("build_theorem8: h_size must be >= 2");
    if (q < 2) throw precondition_error("build_theorem8: q must be >= 2");
    const ChromaticResult cr = chromatic_number(g);
    if (cr.chi < 2) throw precondition_error("build_theorem8: base graph needs an edge");

    const int m = g.vertex_count();
    const AResult ar = a_parameter(g);
    const Rational eps_tower = eps_override ? *eps_override : default_tower_eps(m, q);
    const Rational eps_final = eps_override ? *eps_override : default_tower_eps(ar.a, q);

    Theorem8Trace t8;
    t8.base = g;
    t8.q = q;
    t8.n_cap = h_size;
    t8.m = m;
    t8.chi = cr.chi;
    t8.a_of_g = ar.a;
    t8.eps_tower = eps_tower;
    t8.eps_final = eps_final;
    t8.tower = build_f_tower(m, h_size, q, q * (cr.chi - 2), eps_tower, mix_seed(seed, 1), limits);
    t8.l_trace = build_l(t8.tower.back().graph, eps_final, h_size, std::nullopt, mix_seed(seed, 2), limits.search_work);

    const int a = q * ar.a;
    if (a + t8.l_trace.result.vertex_count() > limits.max_vertices)
        throw size_budget_exceeded_error("build_theorem8: final graph exceeds max_vertices",
                                         static_cast<int>(t8.tower.size()) - 1);
    t8.a_set.resize(a);
    std::iota(t8.a_set.begin(), t8.a_set.end(), 0);
    t8.graph = complete_join(a, t8.l_trace.result);
    return t8;
}

/// The colouring that defeats every blow-up of graphs with a larger
/// a-parameter: interior edges take a replicated (chi-1,...,chi-1) good
/// colouring; join edges take the colour of their A-side block S_i.
inline EdgeColouring theorem8_colouring(const Theorem8Trace& t8, int a_of_g, int q) {
    if (q != t8.q) throw precondition_error("theorem8_colouring: q must match the trace");
    if (a_of_g < 1 || static_cast<int>(t8.a_set.size()) != q * a_of_g)
        throw precondition_error("theorem8_colouring: |A| must equal q * a_of_g");

    const std::vector<int> bounds(q, t8.chi - 1);
    const EdgeColouring blow = detail::replicate_through(t8.l_trace, good_colouring(t8.tower.back(), bounds));

    const int a = static_cast<int>(t8.a_set.size());
    std::vector<int> colours(t8.graph.edge_count(), 0);
    for (int e = 0; e < t8.graph.edge_count(); ++e) {
        const auto& [u, v] = t8.graph.edges()[e];
        colours[e] = u < a ? u / a_of_g + 1 : colour_of(blow, u - a, v - a);
    }
    return EdgeColouring{t8.graph, q, std::move(colours)};
}

}  // namespace ramsey
