#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/invariants.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

inline constexpr std::uint64_t default_search_budget = 50'000'000ULL;

/// Girth/independence contract every backing hypergraph must satisfy.
inline bool is_valid_backing(const Hypergraph& h, int k, int n_cap, const Rational& eps) {
    if (h.uniformity() != k) return false;
    if (const auto g = hypergraph_girth(h); g && *g <= n_cap) return false;
    return !has_independent_set_of_size(h, static_cast<int>(eps.ceil_times(h.vertex_count())));
}

namespace detail {

inline long double log_choose(long double n, long double k) {
    if (k < 0 || k > n) return -1e30L;
    return std::lgammal(n + 1) - std::lgammal(k + 1) - std::lgammal(n - k + 1);
}

/// Deletes one random hyperedge from every circuit of length <= n_cap, shortest
/// first, so the survivor has girth > n_cap. Charges one unit per deletion.
inline std::vector<std::vector<int>> break_short_circuits(int n, int k, std::vector<std::vector<int>> edges,
                                                          int n_cap, Rng& rng, std::uint64_t& remaining) {
    for (;;) {
        Hypergraph h(n, k, edges);
        edges = h.hyperedges();  // normalized, deduplicated
        const auto circ = shortest_circuit(h);
        if (!circ || circ->length() > n_cap) return edges;
        if (remaining == 0) throw budget_exceeded_error("hypergraph_search: budget exhausted while breaking circuits");
        --remaining;
        const auto& victim = circ->hyperedges[rng.below(circ->hyperedges.size())];
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == victim) {
                edges.erase(edges.begin() + static_cast<long>(i));
                break;
            }
    }
}

}  // namespace detail

/// Randomized realization of the probabilistic existence argument: sample a
/// dense random k-uniform hypergraph, delete one hyperedge from each short
/// circuit, and keep the result iff no independent set reaches eps*n. The
/// sample size is charged against the work budget before any sampling, so an
/// astronomically large target fails fast instead of looping.
///
/// Deterministic for fixed (seed, budget); the returned hypergraph always
/// passes is_valid_backing.
inline Hypergraph hypergraph_search(int k, int n_cap, const Rational& eps, std::uint64_t seed,
                                    std::uint64_t work_budget = default_search_budget) {
    if (k < 2) throw precondition_error("hypergraph_search: uniformity must be >= 2");
    if (n_cap < 2) throw precondition_error("hypergraph_search: n_cap must be >= 2");
    if (!eps.positive() || Rational(1) < eps)
        throw precondition_error("hypergraph_search: eps must satisfy 0 < eps <= 1");

    // alpha >= k-1 always holds, so eps*n > k-1 is necessary: start just above.
    const __int128 floor_kde = static_cast<__int128>(k - 1) * eps.den() / eps.num();
    if (floor_kde > 1'000'000'000)
        throw budget_exceeded_error("hypergraph_search: required vertex count exceeds any feasible budget");
    long long n = std::max<long long>(k + 1, static_cast<long long>(floor_kde) + 1);

    std::uint64_t remaining = work_budget;
    const int attempts_per_size = 6;
    std::uint64_t attempt_tag = 0;

    for (;;) {
        const long long t = eps.ceil_times(n);
        const long double combos = std::exp(detail::log_choose(static_cast<long double>(n), k));
        const long double p_in =
            std::exp(detail::log_choose(static_cast<long double>(t), k) - detail::log_choose(static_cast<long double>(n), k));
        // Union bound: C(n,t) <= (en/t)^t target sets, each missed with
        // probability at most exp(-m * p_in); aim the failure odds at 1/100.
        long double m_ld = 1e30L;
        if (t >= k && p_in > 0)
            m_ld = (static_cast<long double>(t) * std::log(2.718281828459045L * n / t) + std::log(100.0L)) / p_in;

        for (int attempt = 0; attempt < attempts_per_size; ++attempt) {
            Rng rng(mix_seed(seed, attempt_tag++));
            std::vector<std::vector<int>> edges;
            if (m_ld >= combos) {
                // Complete k-uniform hypergraph: charge its full edge count.
                if (combos >= static_cast<long double>(remaining) || combos > 20'000'000.0L)
                    throw budget_exceeded_error("hypergraph_search: sample size exceeds work budget");
                remaining -= static_cast<std::uint64_t>(combos);
                std::vector<int> pick(k);
                auto gen = [&](auto&& self, int from, int depth) -> void {
                    if (depth == k) {
                        edges.push_back(pick);
                        return;
                    }
                    for (int v = from; v < n; ++v) {
                        pick[depth] = v;
                        self(self, v + 1, depth + 1);
                    }
                };
                gen(gen, 0, 0);
            } else {
                if (m_ld >= static_cast<long double>(remaining) || m_ld > 20'000'000.0L)
                    throw budget_exceeded_error("hypergraph_search: sample size exceeds work budget");
                const std::uint64_t m = static_cast<std::uint64_t>(m_ld) + 1;
                remaining -= m;
                edges.reserve(m);
                for (std::uint64_t i = 0; i < m; ++i) edges.push_back(rng.sample_sorted(static_cast<int>(n), k));
            }

            edges = detail::break_short_circuits(static_cast<int>(n), k, std::move(edges), n_cap, rng, remaining);
            Hypergraph h(static_cast<int>(n), k, std::move(edges));
            if (is_valid_backing(h, k, n_cap, eps)) return h;
        }

        n += 1;
        if (n > 1'000'000'000)
            throw budget_exceeded_error("hypergraph_search: vertex schedule exceeded feasible sizes");
    }
}

}  // namespace ramsey
