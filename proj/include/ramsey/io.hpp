#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// graph6 encoding: N(n) followed by the upper-triangle bit vector in
/// column-major order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed
/// big-endian into 6-bit groups, each group emitted as a byte +63.
inline std::string encode_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw precondition_error("encode_graph6: graph too large");
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/// Strict graph6 parser. Accepts an optional ">>graph6<<" prefix, demands the
/// exact byte length, byte range 63..126, and zero padding bits. Error
/// positions are byte offsets into the input string.
inline Graph decode_graph6(const std::string& s) {
    std::size_t pos = 0;
    const std::string header = ">>graph6<<";
    if (s.compare(0, header.size(), header) == 0) pos = header.size();
    if (pos >= s.size()) throw parse_error("graph6: empty input", pos);

    auto byte_at = [&](std::size_t i) -> int {
        const int b = static_cast<unsigned char>(s[i]);
        if (b < 63 || b > 126) throw parse_error("graph6: byte out of range 63..126", i);
        return b;
    };

    long long n;
    if (byte_at(pos) != 126) {
        n = byte_at(pos) - 63;
        pos += 1;
    } else {
        if (pos + 3 >= s.size()) throw parse_error("graph6: truncated vertex count", pos);
        if (byte_at(pos + 1) == 126) throw parse_error("graph6: vertex counts above 258047 not supported", pos);
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (byte_at(pos + i) - 63);
        if (n < 63) throw parse_error("graph6: non-canonical long vertex count", pos);
        pos += 4;
    }

    const long long nbits = n * (n - 1) / 2;
    const std::size_t groups = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != groups)
        throw parse_error("graph6: expected " + std::to_string(groups) + " adjacency bytes, got " +
                              std::to_string(s.size() - pos),
                          pos);

    std::vector<std::pair<int, int>> edges;
    long long p = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++p) {
            const int b = byte_at(pos + static_cast<std::size_t>(p / 6));
            if ((b - 63) >> (5 - (p % 6)) & 1) edges.emplace_back(u, v);
        }
    // padding bits beyond the triangle must be zero
    if (nbits % 6 != 0 && groups > 0) {
        const int last = byte_at(pos + groups - 1) - 63;
        const int pad = static_cast<int>(6 - nbits % 6);
        if (last & ((1 << pad) - 1)) throw parse_error("graph6: nonzero padding bits", pos + groups - 1);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

/// DOT export, vertex ids as labels; deterministic order.
inline std::string to_dot(const Graph& g) {
    std::string out = "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace ramsey
