#pragma once

// Canonical forms for graphs on at most 32 vertices. The form is the least
// upper-triangle adjacency bit string over the labelings reached by the
// individualise-and-refine tree, which is isomorphism invariant and so
// equal for two graphs exactly when they are isomorphic.

#include "evencycle/graph.hpp"

#include <array>
#include <bit>

namespace evencycle {

/// Dense graph on at most 32 vertices, one bit mask per row.
struct SmallGraph {
    static constexpr std::size_t max_vertices = 32;

    std::uint32_t n = 0;
    std::array<std::uint32_t, max_vertices> rows{};

    SmallGraph() = default;
    explicit SmallGraph(std::uint32_t vertices) : n(vertices) {
        if (vertices > max_vertices) throw Error(ErrorCode::Precondition, "small graphs hold at most 32 vertices");
    }

    void add_edge(std::uint32_t a, std::uint32_t b) noexcept {
        rows[a] |= 1u << b;
        rows[b] |= 1u << a;
    }
    bool has_edge(std::uint32_t a, std::uint32_t b) const noexcept { return (rows[a] >> b) & 1u; }
    std::uint32_t degree(std::uint32_t a) const noexcept { return static_cast<std::uint32_t>(std::popcount(rows[a])); }
    std::size_t edge_count() const noexcept {
        std::size_t s = 0;
        for (std::uint32_t a = 0; a < n; ++a) s += degree(a);
        return s / 2;
    }

    Graph to_graph() const {
        std::vector<Edge> edges;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b)
                if (has_edge(a, b)) edges.emplace_back(a, b);
        return Graph(n, edges);
    }

    static SmallGraph from_graph(const Graph& g) {
        SmallGraph s(static_cast<std::uint32_t>(g.vertex_count()));
        for (auto [a, b] : g.edges()) s.add_edge(a, b);
        return s;
    }

    friend bool operator==(const SmallGraph& a, const SmallGraph& b) noexcept {
        if (a.n != b.n) return false;
        for (std::uint32_t i = 0; i < a.n; ++i)
            if (a.rows[i] != b.rows[i]) return false;
        return true;
    }
};

struct CanonicalForm {
    std::uint32_t n = 0;
    std::array<std::uint64_t, 8> bits{}; // upper triangle, column by column, most significant first

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

inline CanonicalForm relabeled_form(const SmallGraph& g, const std::array<std::uint8_t, 32>& position) {
    // position[v] = new label of v
    std::array<std::uint8_t, 32> vertex_at{};
    for (std::uint32_t v = 0; v < g.n; ++v) vertex_at[position[v]] = static_cast<std::uint8_t>(v);
    CanonicalForm f;
    f.n = g.n;
    std::size_t bit = 0;
    for (std::uint32_t j = 1; j < g.n; ++j)
        for (std::uint32_t i = 0; i < j; ++i, ++bit)
            if (g.has_edge(vertex_at[i], vertex_at[j])) f.bits[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    return f;
}

// Ordered partition as a sequence of cells of vertex masks.
using Partition = std::vector<std::uint32_t>;

// Splits cells by neighbour counts into other cells until stable. Cells are
// split in increasing order of count so the result is label independent.
inline void refine(const SmallGraph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const std::uint32_t splitter = cells[s];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const std::uint32_t cell = cells[c];
                if (std::popcount(cell) == 1) continue;
                std::array<std::uint32_t, 33> by_count{};
                std::uint32_t seen_counts = 0;
                std::uint64_t present = 0;
                for (std::uint32_t m = cell; m; m &= m - 1) {
                    const auto v = static_cast<std::uint32_t>(std::countr_zero(m));
                    const auto cnt = static_cast<std::uint32_t>(std::popcount(g.rows[v] & splitter));
                    if (!((present >> cnt) & 1)) ++seen_counts;
                    present |= std::uint64_t{1} << cnt;
                    by_count[cnt] |= 1u << v;
                }
                if (seen_counts < 2) continue;
                Partition pieces;
                for (std::uint32_t cnt = 0; cnt <= 32; ++cnt)
                    if (by_count[cnt]) pieces.push_back(by_count[cnt]);
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

inline void canonical_search(const SmallGraph& g, Partition cells, CanonicalForm& best,
                             std::array<std::uint8_t, 32>& best_position, bool& have) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (std::popcount(cells[c]) > 1) {
            target = c;
            break;
        }
    if (target == cells.size()) {
        std::array<std::uint8_t, 32> position{};
        for (std::size_t c = 0; c < cells.size(); ++c)
            position[static_cast<std::size_t>(std::countr_zero(cells[c]))] = static_cast<std::uint8_t>(c);
        const auto form = relabeled_form(g, position);
        if (!have || form < best) {
            best = form;
            best_position = position;
            have = true;
        }
        return;
    }
    // vertices with identical neighbourhoods outside each other are swapped by
    // an automorphism, so one representative per twin class suffices
    std::uint32_t done = 0;
    for (std::uint32_t m = cells[target]; m; m &= m - 1) {
        const auto v = static_cast<std::uint32_t>(std::countr_zero(m));
        bool twin_of_done = false;
        for (std::uint32_t dm = done; dm && !twin_of_done; dm &= dm - 1) {
            const auto w = static_cast<std::uint32_t>(std::countr_zero(dm));
            const std::uint32_t mask = ~((1u << v) | (1u << w));
            twin_of_done = (g.rows[v] & mask) == (g.rows[w] & mask);
        }
        done |= 1u << v;
        if (twin_of_done) continue;
        Partition next = cells;
        next[target] &= ~(1u << v);
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(target), 1u << v);
        canonical_search(g, std::move(next), best, best_position, have);
    }
}

} // namespace detail

/// new label of each vertex under the canonical labeling
inline std::array<std::uint8_t, 32> canonical_labeling(const SmallGraph& g) {
    CanonicalForm best;
    std::array<std::uint8_t, 32> position{};
    bool have = false;
    if (g.n == 0) return position;
    // start from cells ordered by degree
    std::array<std::uint32_t, 33> by_degree{};
    for (std::uint32_t v = 0; v < g.n; ++v) by_degree[g.degree(v)] |= 1u << v;
    detail::Partition cells;
    for (auto c : by_degree)
        if (c) cells.push_back(c);
    detail::canonical_search(g, cells, best, position, have);
    return position;
}

inline CanonicalForm canonical_form(const SmallGraph& g) {
    if (g.n == 0) return {};
    return detail::relabeled_form(g, canonical_labeling(g));
}

/// The graph relabeled canonically.
inline SmallGraph canonical_graph(const SmallGraph& g) {
    const auto position = canonical_labeling(g);
    SmallGraph out(g.n);
    for (std::uint32_t a = 0; a < g.n; ++a)
        for (std::uint32_t b = a + 1; b < g.n; ++b)
            if (g.has_edge(a, b)) out.add_edge(position[a], position[b]);
    return out;
}

} // namespace evencycle
