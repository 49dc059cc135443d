#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ramsey/blowup.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/tower.hpp"

namespace ramsey {

namespace detail {

/// Reraise nlohmann type/access errors as this library's parse_error.
template <class F>
auto json_guard(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("json: ") + e.what());
    }
}

}  // namespace detail

inline nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("json: ") + e.what(), e.byte > 0 ? e.byte - 1 : parse_error::npos);
    }
}

// ---- scalars ---------------------------------------------------------------

inline nlohmann::json rational_to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const nlohmann::json& j) {
    return detail::json_guard([&] { return Rational::parse(j.get<std::string>()); });
}

// ---- graphs ----------------------------------------------------------------

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    return detail::json_guard([&] {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw parse_error("json: graph edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(n, std::move(edges));
    });
}

inline nlohmann::json hypergraph_to_json(const Hypergraph& h) {
    return {{"n", h.vertex_count()}, {"k", h.uniformity()}, {"hyperedges", h.hyperedges()}};
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    return detail::json_guard([&] {
        return Hypergraph(j.at("n").get<int>(), j.at("k").get<int>(),
                          j.at("hyperedges").get<std::vector<std::vector<int>>>());
    });
}

// ---- colourings ------------------------------------------------------------

inline std::string edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return std::to_string(u) + "-" + std::to_string(v);
}

inline nlohmann::json colouring_to_json(const EdgeColouring& c) {
    if (!is_complete_colouring(c)) throw precondition_error("colouring_to_json: incomplete colouring");
    nlohmann::json colours = nlohmann::json::object();
    for (int e = 0; e < c.graph.edge_count(); ++e) {
        const auto& [u, v] = c.graph.edges()[e];
        colours[edge_key(u, v)] = c.colours[e];
    }
    return {{"q", c.q}, {"colours", std::move(colours)}};
}

/// Keys must cover the graph's edge set exactly.
inline EdgeColouring colouring_from_json(const Graph& g, const nlohmann::json& j) {
    return detail::json_guard([&] {
        EdgeColouring c{g, j.at("q").get<int>(), std::vector<int>(g.edges().size(), 0)};
        if (c.q < 2) throw parse_error("json: colouring needs q >= 2");
        std::size_t assigned = 0;
        for (const auto& [key, value] : j.at("colours").items()) {
            const auto dash = key.find('-');
            if (dash == std::string::npos) throw parse_error("json: colouring key must look like \"u-v\"");
            int u = 0, v = 0;
            try {
                u = std::stoi(key.substr(0, dash));
                v = std::stoi(key.substr(dash + 1));
            } catch (const std::exception&) {
                throw parse_error("json: bad vertex number in colouring key '" + key + "'");
            }
            const int idx = g.edge_index(u, v);
            if (idx < 0) throw parse_error("json: colouring key '" + key + "' is not an edge");
            const int col = value.get<int>();
            if (col < 1 || col > c.q) throw parse_error("json: colour out of range at key '" + key + "'");
            if (c.colours[idx] != 0) throw parse_error("json: duplicate colouring key '" + key + "'");
            c.colours[idx] = col;
            ++assigned;
        }
        if (assigned != c.colours.size()) throw parse_error("json: colouring does not cover every edge");
        return c;
    });
}

// ---- construction traces ---------------------------------------------------

inline nlohmann::json embedding_to_json(const Embedding& e) { return e.image; }

inline nlohmann::json blowup_to_json(const BlowupTrace& bt) {
    nlohmann::json embeddings = nlohmann::json::array();
    for (const auto& e : bt.embeddings) embeddings.push_back(embedding_to_json(e));
    return {{"base", graph_to_json(bt.base)},
            {"backing", hypergraph_to_json(bt.backing)},
            {"embeddings", std::move(embeddings)},
            {"result", graph_to_json(bt.result)}};
}

inline BlowupTrace blowup_from_json(const nlohmann::json& j) {
    return detail::json_guard([&] {
        BlowupTrace bt{graph_from_json(j.at("base")), hypergraph_from_json(j.at("backing")), {},
                       graph_from_json(j.at("result"))};
        for (const auto& img : j.at("embeddings"))
            bt.embeddings.push_back(Embedding{bt.base.vertex_count(), img.get<std::vector<int>>()});
        if (static_cast<int>(bt.embeddings.size()) != bt.backing.edge_count())
            throw parse_error("json: blow-up needs one embedding per hyperedge");
        return bt;
    });
}

/// Single level, without the parent link; the enclosing tower array carries
/// the ancestry by position.
inline nlohmann::json trace_to_json(const ConstructionTrace& t) {
    return {{"level", t.level},
            {"m", t.m},
            {"q", t.q},
            {"n_cap", t.n_cap},
            {"eps", rational_to_json(t.eps_used)},
            {"a_set", t.a_set},
            {"b_set", t.b_set},
            {"inner", t.inner ? blowup_to_json(*t.inner) : nlohmann::json()},
            {"graph", graph_to_json(t.graph)}};
}

inline nlohmann::json tower_to_json(const std::vector<ConstructionTrace>& tower) {
    if (tower.empty()) throw precondition_error("tower_to_json: empty tower");
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& t : tower) levels.push_back(trace_to_json(t));
    return {{"m", tower.front().m},
            {"q", tower.front().q},
            {"n_cap", tower.front().n_cap},
            {"eps", rational_to_json(tower.front().eps_used)},
            {"levels", std::move(levels)}};
}

inline std::vector<ConstructionTrace> tower_from_json(const nlohmann::json& j) {
    return detail::json_guard([&] {
        std::vector<ConstructionTrace> out;
        for (const auto& jt : j.at("levels")) {
            ConstructionTrace t;
            t.level = jt.at("level").get<int>();
            t.m = jt.at("m").get<int>();
            t.q = jt.at("q").get<int>();
            t.n_cap = jt.at("n_cap").get<int>();
            t.eps_used = rational_from_json(jt.at("eps"));
            t.a_set = jt.at("a_set").get<std::vector<int>>();
            t.b_set = jt.at("b_set").get<std::vector<int>>();
            if (!jt.at("inner").is_null()) t.inner = blowup_from_json(jt.at("inner"));
            t.graph = graph_from_json(jt.at("graph"));
            if (t.level != static_cast<int>(out.size()))
                throw parse_error("json: tower levels must be consecutive from 0");
            if (t.level > 0) {
                if (!t.inner) throw parse_error("json: positive tower level lacks its blow-up");
                t.prev = std::make_shared<const ConstructionTrace>(out.back());
            } else if (t.inner) {
                throw parse_error("json: level 0 cannot carry a blow-up");
            }
            out.push_back(std::move(t));
        }
        if (out.empty()) throw parse_error("json: tower has no levels");
        return out;
    });
}

inline nlohmann::json theorem8_to_json(const Theorem8Trace& t8) {
    return {{"base", graph_to_json(t8.base)},
            {"q", t8.q},
            {"n_cap", t8.n_cap},
            {"m", t8.m},
            {"chi", t8.chi},
            {"a_of_g", t8.a_of_g},
            {"eps_tower", rational_to_json(t8.eps_tower)},
            {"eps_final", rational_to_json(t8.eps_final)},
            {"tower", tower_to_json(t8.tower)},
            {"l", blowup_to_json(t8.l_trace)},
            {"a_set", t8.a_set},
            {"graph", graph_to_json(t8.graph)}};
}

inline Theorem8Trace theorem8_from_json(const nlohmann::json& j) {
    return detail::json_guard([&] {
        Theorem8Trace t8;
        t8.base = graph_from_json(j.at("base"));
        t8.q = j.at("q").get<int>();
        t8.n_cap = j.at("n_cap").get<int>();
        t8.m = j.at("m").get<int>();
        t8.chi = j.at("chi").get<int>();
        t8.a_of_g = j.at("a_of_g").get<int>();
        t8.eps_tower = rational_from_json(j.at("eps_tower"));
        t8.eps_final = rational_from_json(j.at("eps_final"));
        t8.tower = tower_from_json(j.at("tower"));
        t8.l_trace = blowup_from_json(j.at("l"));
        t8.a_set = j.at("a_set").get<std::vector<int>>();
        t8.graph = graph_from_json(j.at("graph"));
        return t8;
    });
}

// ---- witnesses -------------------------------------------------------------

inline nlohmann::json witness_to_json(const RamseyWitness& w) {
    return {{"m_values", w.m_values}, {"classes", w.classes}};
}

inline RamseyWitness witness_from_json(const nlohmann::json& j) {
    return detail::json_guard([&] {
        return RamseyWitness{j.at("m_values").get<std::vector<int>>(),
                             j.at("classes").get<std::vector<std::vector<std::vector<int>>>>()};
    });
}

inline nlohmann::json focus_to_json(const FocusResult& fr) {
    return {{"a_prime", fr.a_prime}, {"b_prime", fr.b_prime}, {"colour", fr.colour}};
}

}  // namespace ramsey
