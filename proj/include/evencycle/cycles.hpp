#pragma once

// Cycle and path instruments: girth, shortest even cycle with witness,
// the even-cycle certificate, bounded path enumeration and exact counts of
// non-returning walks.

#include "evencycle/graph.hpp"
#include "evencycle/parallel.hpp"

#include <array>
#include <limits>
#include <optional>
#include <queue>

namespace evencycle {

inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex root) {
    std::vector<std::uint32_t> dist(g.vertex_count(), unreachable);
    std::vector<Vertex> queue{root};
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : g.neighbors(x))
            if (dist[y] == unreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

/// Length of a shortest cycle, or nullopt for a forest.
inline std::optional<std::size_t> girth(const Graph& g, unsigned threads = 0) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> best(n, unreachable);
    parallel_for(n, threads, [&](std::size_t s) {
        std::vector<std::uint32_t> dist(n, unreachable);
        std::vector<Vertex> parent(n, static_cast<Vertex>(n)), queue{static_cast<Vertex>(s)};
        dist[s] = 0;
        std::uint32_t local = unreachable;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            if (local != unreachable && 2 * dist[x] + 1 >= local) break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == unreachable) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    local = std::min(local, dist[x] + dist[y] + 1);
                }
            }
        }
        best[s] = local;
    });
    std::uint32_t g_min = unreachable;
    for (auto b : best) g_min = std::min(g_min, b);
    if (g_min == unreachable) return std::nullopt;
    return g_min;
}

struct EvenCycle {
    std::size_t length = 0;
    VertexPath cycle;
};

namespace detail {

// Searches for a cycle of exactly `length` edges whose smallest vertex is
// `root`, returning the lexicographically first one with cycle[1] < cycle.back().
// Pruned by shortest walk lengths of each parity back to the root inside the
// subgraph on vertices >= root: a partial path at x with `left` edges still
// to go survives only if a walk of that parity and length <= left exists.
inline std::optional<VertexPath> cycle_through_min_vertex(const Graph& g, Vertex root, std::size_t length) {
    const std::size_t n = g.vertex_count();
    std::vector<std::array<std::uint32_t, 2>> dist(n, {unreachable, unreachable});
    std::vector<std::pair<Vertex, int>> queue{{root, 0}};
    dist[root][0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [x, par] = queue[head];
        const std::uint32_t d = dist[x][par];
        if (d + 1 > length) continue;
        for (Vertex y : g.neighbors(x)) {
            if (y < root) continue;
            if (dist[y][par ^ 1] == unreachable) {
                dist[y][par ^ 1] = d + 1;
                queue.emplace_back(y, par ^ 1);
            }
        }
    }
    std::vector<char> on_path(n, 0);
    VertexPath path{root};
    on_path[root] = 1;
    std::vector<std::size_t> cursor{0};
    while (!cursor.empty()) {
        const Vertex x = path.back();
        const auto nbrs = g.neighbors(x);
        std::size_t& c = cursor.back();
        const std::size_t depth = path.size() - 1; // edges used so far
        bool advanced = false;
        while (c < nbrs.size()) {
            const Vertex y = nbrs[c++];
            if (y <= root || on_path[y]) continue;
            const std::size_t left = length - depth - 1; // edges after stepping to y
            if (dist[y][left & 1] > left) continue;
            if (left == 1) {
                // path[1] < y fixes the orientation of the cycle
                if (g.has_edge(y, root) && path[1] < y) {
                    path.push_back(y);
                    return path;
                }
                continue;
            }
            path.push_back(y);
            on_path[y] = 1;
            cursor.push_back(0);
            advanced = true;
            break;
        }
        if (!advanced) {
            on_path[path.back()] = 0;
            path.pop_back();
            cursor.pop_back();
            if (path.empty()) break;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Minimum even length <= cap of a cycle in g, with a witness cycle whose
/// smallest vertex comes first. Deterministic for any thread count.
inline std::optional<EvenCycle> shortest_even_cycle(const Graph& g, std::size_t cap, unsigned threads = 0) {
    if (cap < 4 || cap % 2 != 0) throw Error(ErrorCode::Precondition, "cap must be even and at least 4");
    const auto gir = girth(g, threads);
    if (!gir) return std::nullopt;
    const std::size_t n = g.vertex_count();
    for (std::size_t len = std::max<std::size_t>(4, *gir + (*gir % 2)); len <= cap; len += 2) {
        std::vector<std::optional<VertexPath>> found(n);
        parallel_for(n, threads, [&](std::size_t s) {
            found[s] = detail::cycle_through_min_vertex(g, static_cast<Vertex>(s), len);
        });
        for (auto& f : found)
            if (f) return EvenCycle{len, std::move(*f)};
    }
    return std::nullopt;
}

struct EvenCycleCertificate {
    std::size_t k = 0;
    bool pass = false;
    VertexPath witness; // an even cycle of length <= 2k when !pass
};

/// Decides whether g has no even cycle of length at most 2k.
inline EvenCycleCertificate certify_no_even_cycles(const Graph& g, std::size_t k, unsigned threads = 0) {
    if (k < 2) throw Error(ErrorCode::Precondition, "k must be at least 2");
    EvenCycleCertificate cert{k, true, {}};
    if (auto c = shortest_even_cycle(g, 2 * k, threads)) {
        cert.pass = false;
        cert.witness = std::move(c->cycle);
    }
    return cert;
}

inline constexpr std::size_t default_path_ceiling = 1'000'000;

/// All simple u-v paths with exactly `length` edges, lexicographic by vertex
/// sequence.
inline std::vector<VertexPath> enumerate_paths(const Graph& g, Vertex u, Vertex v, std::size_t length,
                                               std::size_t ceiling = default_path_ceiling) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw Error(ErrorCode::Precondition, "vertex out of range");
    if (u == v) throw Error(ErrorCode::Precondition, "endpoints must differ");
    if (length < 1) throw Error(ErrorCode::Precondition, "length must be at least 1");
    const auto to_v = bfs_distances(g, v);
    std::vector<VertexPath> out;
    if (to_v[u] > length) return out;
    std::vector<char> on_path(g.vertex_count(), 0);
    VertexPath path{u};
    on_path[u] = 1;
    std::vector<std::size_t> cursor{0};
    while (!cursor.empty()) {
        const Vertex x = path.back();
        const auto nbrs = g.neighbors(x);
        std::size_t& c = cursor.back();
        const std::size_t left = length - (path.size() - 1) - 1;
        bool advanced = false;
        while (c < nbrs.size()) {
            const Vertex y = nbrs[c++];
            if (on_path[y]) continue;
            if (y == v) {
                if (left == 0) {
                    if (out.size() >= ceiling)
                        throw Error(ErrorCode::ExplosionCeiling,
                                    "more than " + std::to_string(ceiling) + " paths of length " + std::to_string(length));
                    out.push_back(path);
                    out.back().push_back(v);
                }
                continue;
            }
            if (left == 0 || to_v[y] > left) continue;
            path.push_back(y);
            on_path[y] = 1;
            cursor.push_back(0);
            advanced = true;
            break;
        }
        if (!advanced) {
            on_path[path.back()] = 0;
            path.pop_back();
            cursor.pop_back();
        }
    }
    return out;
}

/// Number of simple paths with `length` edges counted as vertex sequences
/// (each undirected path twice for length >= 1; n for length 0).
inline std::uint64_t count_paths(const Graph& g, std::size_t length, unsigned threads = 0) {
    const std::size_t n = g.vertex_count();
    if (length == 0) return n;
    std::vector<std::uint64_t> per_root(n, 0);
    parallel_for(n, threads, [&](std::size_t s) {
        std::vector<char> on_path(n, 0);
        VertexPath path{static_cast<Vertex>(s)};
        on_path[s] = 1;
        std::vector<std::size_t> cursor{0};
        std::uint64_t count = 0;
        while (!cursor.empty()) {
            const auto nbrs = g.neighbors(path.back());
            std::size_t& c = cursor.back();
            bool advanced = false;
            while (c < nbrs.size()) {
                const Vertex y = nbrs[c++];
                if (on_path[y]) continue;
                if (path.size() == length) {
                    ++count;
                    continue;
                }
                path.push_back(y);
                on_path[y] = 1;
                cursor.push_back(0);
                advanced = true;
                break;
            }
            if (!advanced) {
                on_path[path.back()] = 0;
                path.pop_back();
                cursor.pop_back();
            }
        }
        per_root[s] = count;
    });
    std::uint64_t total = 0;
    for (auto c : per_root) total += c;
    return total;
}

/// |W_r|: walks with r edges in which no edge is immediately traversed back.
inline BigInt count_nonreturning_walks(const Graph& g, std::size_t r) {
    const std::size_t n = g.vertex_count();
    if (r == 0) return BigInt(n);
    // arc index: offset[x] + position of y in neighbors(x)
    std::vector<std::size_t> offset(n + 1, 0);
    for (Vertex x = 0; x < n; ++x) offset[x + 1] = offset[x] + g.degree(x);
    const std::size_t arcs = offset[n];
    std::vector<std::size_t> reverse(arcs);
    for (Vertex x = 0; x < n; ++x) {
        const auto nx = g.neighbors(x);
        for (std::size_t i = 0; i < nx.size(); ++i) {
            const Vertex y = nx[i];
            const auto ny = g.neighbors(y);
            const auto j = static_cast<std::size_t>(std::lower_bound(ny.begin(), ny.end(), x) - ny.begin());
            reverse[offset[x] + i] = offset[y] + j;
        }
    }
    std::vector<BigInt> cur(arcs, BigInt(1)), next(arcs);
    std::vector<BigInt> into(n);
    for (std::size_t step = 1; step < r; ++step) {
        for (auto& t : into) t = 0;
        // cur[a] counts walks ending with arc a = (x -> y); accumulate at y
        for (Vertex x = 0; x < n; ++x) {
            const auto nx = g.neighbors(x);
            for (std::size_t i = 0; i < nx.size(); ++i) into[nx[i]] += cur[offset[x] + i];
        }
        for (Vertex y = 0; y < n; ++y)
            for (std::size_t a = offset[y]; a < offset[y + 1]; ++a) next[a] = into[y] - cur[reverse[a]];
        std::swap(cur, next);
    }
    BigInt total = 0;
    for (const auto& c : cur) total += c;
    return total;
}

} // namespace evencycle
