#pragma once

#include "evencycle/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace evencycle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
/// A vertex sequence; for cycles the closing edge back to the front is implied.
using VertexPath = std::vector<Vertex>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built. Loops and repeated edges are rejected at
/// construction; callers that produce loops (polarity constructions) drop
/// them first.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n, std::span<const Edge> edges = {}, std::vector<std::string> labels = {})
        : adjacency_(n), labels_(std::move(labels)) {
        if (!labels_.empty() && labels_.size() != n)
            throw Error(ErrorCode::InvalidGraph, "label count does not match vertex count");
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw Error(ErrorCode::InvalidGraph,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(u));
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (std::size_t v = 0; v < n; ++v) {
            auto& a = adjacency_[v];
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw Error(ErrorCode::InvalidGraph, "parallel edge at vertex " + std::to_string(v));
        }
        edge_count_ = edges.size();
        if (n <= bit_matrix_limit) {
            words_ = (n + 63) / 64;
            bits_.assign(n * words_, 0);
            for (auto [u, v] : edges) {
                bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
                bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
            }
        }
    }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }
    std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }

    bool has_edge(Vertex u, Vertex v) const noexcept {
        if (!bits_.empty()) return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
        const auto& a = adjacency_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Edges (u,v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (Vertex v : adjacency_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.adjacency_ == b.adjacency_; }

private:
    static constexpr std::size_t bit_matrix_limit = 4096;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct DegreeStats {
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    Rational average = 0; // exact 2m/n
    std::size_t edges = 0;
};

inline DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.edges = g.edge_count();
    if (g.vertex_count() == 0) return s;
    s.min_degree = g.degree(0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    s.average = Rational(2 * g.edge_count(), g.vertex_count());
    return s;
}

/// True iff consecutive vertices (and the last/first pair) are adjacent and
/// all vertices are distinct.
inline bool is_cycle_in(const Graph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) return false;
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.back() >= g.vertex_count()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

/// True iff the sequence is a simple path in g.
inline bool is_path_in(const Graph& g, std::span<const Vertex> path) {
    if (path.empty()) return false;
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.back() >= g.vertex_count()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

} // namespace evencycle
