#pragma once

#include <cctype>
#include <sstream>
#include <string_view>

#include "p5free/graph.hpp"

namespace p5free {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// graph6: printable encoding used by the usual graph tools. The vertex
/// count comes first (one byte for n <= 62, '~' plus three bytes up to
/// 258047), then the upper triangle in column order, 6 bits per byte,
/// each byte offset by 63.
inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw std::invalid_argument("encode_graph6: graph too large for the short forms");
    }

    int bits = 0, value = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + value));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (value << (6 - bits))));
    return out;
}

inline Graph decode_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size())
            throw ParseError("graph6: truncated at byte " + std::to_string(pos));
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: invalid byte " + std::to_string(int{c}) + " at offset " +
                             std::to_string(pos));
        ++pos;
        return c - 63;
    };

    long long n = next();
    if (n == 63) {
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | next();
        if (n > 258047) throw ParseError("graph6: vertex count out of supported range");
    }

    Graph g(static_cast<int>(n));
    int bits = 0, value = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                value = next();
                bits = 6;
            }
            if ((value >> (bits - 1)) & 1) g.add_edge(i, static_cast<int>(j));
            --bits;
        }
    }
    if (bits > 0 && (value & ((1 << bits) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(pos - 1));
    if (pos != s.size())
        throw ParseError("graph6: trailing bytes at offset " + std::to_string(pos));
    return g;
}

/// Plain text: a "n m" header line, then one "u v" line per edge, 0-based.
inline std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph decode_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    auto fail = [&line_no](const std::string& what) -> void {
        throw ParseError("edge list, line " + std::to_string(line_no) + ": " + what);
    };
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        ++line_no;
        return false;
    };

    if (!next_line()) throw ParseError("edge list: empty input");
    long long n, m;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra)) fail("expected \"n m\" header");
        if (n < 0 || m < 0) fail("negative count in header");
    }
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        if (!next_line()) fail("expected " + std::to_string(m) + " edges, input ended");
        std::istringstream row(line);
        long long u, v;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) fail("expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex out of range");
        if (u == v) fail("self-loop");
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) fail("duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line()) fail("trailing content after the last edge");
    return g;
}

enum class GraphFileFormat { Graph6, EdgeList };

inline Graph decode_graph(std::string_view text, GraphFileFormat fmt) {
    if (fmt == GraphFileFormat::EdgeList) return decode_edge_list(text);
    // graph6 payload is the first non-blank line
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) throw ParseError("graph6: empty input");
    std::size_t end = text.find_first_of("\r\n", start);
    return decode_graph6(text.substr(start, end == std::string_view::npos ? end : end - start));
}

}  // namespace p5free
