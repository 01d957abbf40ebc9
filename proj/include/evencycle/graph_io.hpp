#pragma once

// Text formats: a plain edge list ("n m" header then one "u v" per line, '#'
// starts a comment) and graph6 as published with nauty.

#include "evencycle/graph.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace evencycle {

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph read_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<long long> numbers;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                numbers.push_back(v);
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad token '" + tok + "'");
            }
        }
    }
    if (numbers.size() < 2) throw Error(ErrorCode::ParseError, "missing 'n m' header");
    const auto n = static_cast<std::size_t>(numbers[0]);
    const auto m = static_cast<std::size_t>(numbers[1]);
    if (numbers.size() != 2 + 2 * m)
        throw Error(ErrorCode::ParseError, "header promises " + std::to_string(m) + " edges, found " +
                                               std::to_string((numbers.size() - 2) / 2) +
                                               (numbers.size() % 2 ? " and a dangling index" : ""));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto u = numbers[2 + 2 * i], v = numbers[3 + 2 * i];
        if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw Error(ErrorCode::ParseError, "edge index out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph(n, edges);
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

/// graph6 encoding without the optional ">>graph6<<" header, newline
/// terminated.
inline std::string write_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    auto put6 = [&](std::uint64_t x, int groups) {
        for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((x >> (6 * i)) & 63) + 63));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        put6(n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        put6(n, 6);
    }
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    out.push_back('\n');
    return out;
}

inline Graph read_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    std::size_t pos = 0;
    auto next = [&]() -> std::uint64_t {
        if (pos >= text.size()) throw Error(ErrorCode::ParseError, "graph6 string truncated");
        const auto c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw Error(ErrorCode::ParseError, "graph6 byte out of range");
        return c - 63;
    };
    std::uint64_t n = next();
    int groups = 0;
    if (n == 63) {
        groups = 3;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            groups = 6;
        }
        n = 0;
        for (int i = 0; i < groups; ++i) n = (n << 6) | next();
    }
    const std::uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Error(ErrorCode::ParseError, "graph6 length mismatch: expected " + std::to_string(bytes) +
                                               " data bytes, got " + std::to_string(text.size() - pos));
    std::vector<Edge> edges;
    std::uint64_t cur = 0;
    int left = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            if (left == 0) {
                cur = next();
                left = 6;
            }
            --left;
            if ((cur >> left) & 1) edges.emplace_back(i, j);
        }
    if (left > 0 && (cur & ((1u << left) - 1)) != 0)
        throw Error(ErrorCode::ParseError, "graph6 padding bits must be zero");
    return Graph(static_cast<std::size_t>(n), edges);
}

inline std::string write_labels(const Graph& g) {
    std::ostringstream out;
    for (std::size_t v = 0; v < g.labels().size(); ++v) out << v << ' ' << g.labels()[v] << '\n';
    return out.str();
}

enum class GraphFormat { EdgeList, Graph6 };

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << content;
}

/// Format from the extension (.g6 is graph6, anything else an edge list),
/// falling back to content sniffing for unknown extensions.
inline GraphFormat detect_format(const std::string& path, std::string_view content) {
    auto ends = [&](std::string_view ext) { return path.size() >= ext.size() && path.ends_with(ext); };
    if (ends(".g6") || ends(".graph6")) return GraphFormat::Graph6;
    if (ends(".el") || ends(".edges") || ends(".txt")) return GraphFormat::EdgeList;
    if (content.starts_with(">>graph6<<")) return GraphFormat::Graph6;
    for (char c : content) {
        if (c == '#' || c == ' ' || c == '\n' || (c >= '0' && c <= '9')) continue;
        return GraphFormat::Graph6;
    }
    return GraphFormat::EdgeList;
}

inline Graph read_graph_file(const std::string& path) {
    const auto text = read_text_file(path);
    return detect_format(path, text) == GraphFormat::Graph6 ? read_graph6(text) : read_edge_list(text);
}

} // namespace evencycle
