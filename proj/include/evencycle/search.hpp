#pragma once

// Exact ex(n, {C4, C6, ..., C2k}) for small n.
//
// Every extremal graph G can be dismantled by repeatedly deleting a vertex of
// minimum degree; the i-vertex graph G_i met along the way has at least
// L_i edges, where L_n is any lower bound on ex(n) and
// L_(i-1) = L_i - floor(2 L_i / i). The search runs this in reverse: level i
// holds the isomorphism classes (canonical forms) of admissible graphs on i
// vertices with at least L_i edges, each obtained from a level i-1 class by
// adding a vertex whose degree is the minimum degree of the new graph.

#include "evencycle/canonical.hpp"
#include "evencycle/cycles.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>

namespace evencycle {

struct SearchBudget {
    std::uint64_t max_nodes = 2'000'000'000;
    std::uint64_t max_millis = 0; // 0 = unlimited

    /// Defaults, with EVENCYCLE_BUDGET_NODES overriding the node limit.
    static SearchBudget from_environment() {
        SearchBudget b;
        if (const char* env = std::getenv("EVENCYCLE_BUDGET_NODES")) {
            char* end = nullptr;
            const auto v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) b.max_nodes = v;
        }
        return b;
    }
};

struct SearchResult {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t max_edges = 0;
    Graph witness;
    std::uint64_t explored = 0;
    double elapsed_ms = 0.0;
    bool optimal = true;
};

/// Search stopped early; carries the best graph known, which is not proven
/// optimal.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(SearchResult incumbent)
        : Error(ErrorCode::BudgetExceeded, "search budget exhausted at n=" + std::to_string(incumbent.n) +
                                               "; best known " + std::to_string(incumbent.max_edges) + " edges"),
          incumbent_(std::move(incumbent)) {}
    const SearchResult& incumbent() const noexcept { return incumbent_; }

private:
    SearchResult incumbent_;
};

inline bool verify_witness(const Graph& g, std::size_t k) { return certify_no_even_cycles(g, k, 1).pass; }

namespace detail {

// conflict[a] has bit b set when some simple a-b path has even length in
// [2, 2k-2]; a new vertex adjacent to both would close an even cycle <= 2k.
inline std::array<std::uint32_t, 32> even_path_conflicts(const SmallGraph& g, std::size_t k) {
    std::array<std::uint32_t, 32> conflict{};
    const std::size_t max_len = 2 * k - 2;
    for (std::uint32_t a = 0; a < g.n; ++a) {
        std::array<std::uint32_t, 32> path{};
        std::array<std::uint32_t, 32> pending{};
        std::size_t depth = 0;
        path[0] = a;
        std::uint32_t used = 1u << a;
        pending[0] = g.rows[a];
        while (true) {
            if (pending[depth] == 0) {
                if (depth == 0) break;
                used &= ~(1u << path[depth]);
                --depth;
                continue;
            }
            const auto y = static_cast<std::uint32_t>(std::countr_zero(pending[depth]));
            pending[depth] &= pending[depth] - 1;
            if (used & (1u << y)) continue;
            const std::size_t len = depth + 1;
            if (len % 2 == 0) conflict[a] |= 1u << y;
            if (len < max_len) {
                ++depth;
                path[depth] = y;
                used |= 1u << y;
                pending[depth] = g.rows[y] & ~used;
            }
        }
    }
    return conflict;
}

struct LevelItem {
    CanonicalForm form;
    SmallGraph graph; // canonically labeled
};

inline std::vector<std::size_t> level_thresholds(std::size_t n, std::size_t lower) {
    std::vector<std::size_t> L(n + 1, 0);
    L[n] = lower;
    for (std::size_t i = n; i >= 2; --i) L[i - 1] = L[i] - (2 * L[i]) / i;
    return L;
}

// All extensions of h by one vertex of minimum degree that keep the graph
// admissible and reach `need` edges.
inline void extend(const SmallGraph& h, std::size_t k, std::size_t need, std::vector<LevelItem>& out,
                   std::uint64_t& nodes) {
    const std::uint32_t m = h.n;
    const auto conflict = even_path_conflicts(h, k);
    const std::size_t base = h.edge_count();
    std::uint32_t min_deg = m ? 64 : 0;
    for (std::uint32_t x = 0; x < m; ++x) min_deg = std::min(min_deg, h.degree(x));
    const std::size_t max_d = m ? std::min<std::size_t>(m, min_deg + 1) : 0;
    const std::size_t min_d = need > base ? need - base : 0;
    if (min_d > max_d) return;
    const std::uint32_t all = m == 32 ? ~0u : ((1u << m) - 1);
    auto consider = [&](std::uint32_t set) {
        ++nodes;
        const auto d = static_cast<std::uint32_t>(std::popcount(set));
        if (d < min_d) return;
        for (std::uint32_t x = 0; x < m; ++x)
            if (h.degree(x) + ((set >> x) & 1u) < d) return;
        SmallGraph g(m + 1);
        for (std::uint32_t x = 0; x < m; ++x) g.rows[x] = h.rows[x];
        for (std::uint32_t s = set; s; s &= s - 1) g.add_edge(m, static_cast<std::uint32_t>(std::countr_zero(s)));
        auto canon = canonical_graph(g);
        out.push_back({canonical_form(canon), canon});
    };
    // neighbour sets in increasing vertex order; `allowed` excludes vertices in
    // conflict with a chosen one and those below the last choice
    auto walk = [&](auto&& self, std::uint32_t chosen, std::uint32_t allowed) -> void {
        consider(chosen);
        const auto size = static_cast<std::size_t>(std::popcount(chosen));
        if (size == max_d) return;
        if (size + static_cast<std::size_t>(std::popcount(allowed)) < min_d) return;
        for (std::uint32_t rest = allowed; rest; rest &= rest - 1) {
            const auto x = static_cast<std::uint32_t>(std::countr_zero(rest));
            const std::uint32_t above = x == 31 ? 0u : ~((2u << x) - 1u);
            self(self, chosen | (1u << x), allowed & ~conflict[x] & above);
        }
    };
    walk(walk, 0u, all);
}

inline void dedupe(std::vector<LevelItem>& items) {
    std::sort(items.begin(), items.end(), [](const LevelItem& a, const LevelItem& b) { return a.form < b.form; });
    items.erase(std::unique(items.begin(), items.end(),
                            [](const LevelItem& a, const LevelItem& b) { return a.form == b.form; }),
                items.end());
}

inline SearchResult incumbent_from(const SearchResult& previous) {
    // previous extremal graph plus a pendant vertex
    const Graph& w = previous.witness;
    auto edges = w.edges();
    if (w.vertex_count() > 0) edges.emplace_back(0, static_cast<Vertex>(w.vertex_count()));
    SearchResult r;
    r.n = previous.n + 1;
    r.k = previous.k;
    r.witness = Graph(w.vertex_count() + 1, edges);
    r.max_edges = r.witness.edge_count();
    r.optimal = false;
    return r;
}

inline SearchResult search_level_chain(std::size_t n, std::size_t k, std::size_t lower, const SearchBudget& budget,
                                       unsigned threads, std::uint64_t& explored,
                                       std::chrono::steady_clock::time_point start, const SearchResult& fallback) {
    const auto L = level_thresholds(n, lower);
    std::vector<LevelItem> level{{canonical_form(SmallGraph(1)), SmallGraph(1)}};
    std::atomic<std::uint64_t> total{explored};
    auto over_budget = [&] {
        if (total.load() > budget.max_nodes) return true;
        if (budget.max_millis) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            if (static_cast<std::uint64_t>(ms.count()) > budget.max_millis) return true;
        }
        return false;
    };
    for (std::size_t i = 2; i <= n; ++i) {
        std::vector<std::vector<LevelItem>> produced(level.size());
        std::atomic<bool> stop{false};
        parallel_for(level.size(), threads, [&](std::size_t idx) {
            if (stop.load()) return;
            std::uint64_t nodes = 0;
            extend(level[idx].graph, k, L[i], produced[idx], nodes);
            total += nodes;
            dedupe(produced[idx]);
            if (over_budget()) stop = true;
        });
        if (stop.load()) {
            explored = total.load();
            throw BudgetExceededError(fallback);
        }
        std::vector<LevelItem> next;
        for (auto& p : produced) next.insert(next.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
        dedupe(next);
        level = std::move(next);
    }
    explored = total.load();
    SearchResult r;
    r.n = n;
    r.k = k;
    const LevelItem* best = nullptr;
    for (const auto& item : level)
        if (!best || item.graph.edge_count() > best->graph.edge_count()) best = &item;
    if (!best) throw Error(ErrorCode::ConstructionFailure, "search found no graph above a proven lower bound");
    r.max_edges = best->graph.edge_count();
    r.witness = best->graph.to_graph();
    return r;
}

} // namespace detail

/// Exact ex(n, {C4, ..., C2k}) with a canonical extremal witness. Throws
/// BudgetExceededError (holding a non-optimal incumbent) when the budget runs
/// out. `lower` may supply a known lower bound, e.g. ex(n-1)+1.
inline SearchResult ex_exact(std::size_t n, std::size_t k, const SearchBudget& budget = SearchBudget::from_environment(),
                             unsigned threads = 0, const SearchResult* previous = nullptr) {
    if (k < 2) throw Error(ErrorCode::Precondition, "k must be at least 2");
    if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
    if (n > SmallGraph::max_vertices) throw Error(ErrorCode::Precondition, "n too large for exact search");
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t explored = 0;
    SearchResult r;
    if (n == 1) {
        r = SearchResult{1, k, 0, Graph(1), 0, 0.0, true};
    } else {
        SearchResult prev = previous && previous->n == n - 1 && previous->k == k && previous->optimal
                                ? *previous
                                : ex_exact(n - 1, k, budget, threads);
        const auto fallback = detail::incumbent_from(prev);
        r = detail::search_level_chain(n, k, prev.max_edges + 1, budget, threads, explored, start, fallback);
    }
    r.explored = explored;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!verify_witness(r.witness, k) || r.witness.edge_count() != r.max_edges)
        throw Error(ErrorCode::ConstructionFailure, "search witness fails its certificate");
    return r;
}

/// ex(n, {C4..C2k}) for n = 1..n_max, each row reusing the previous one.
inline std::vector<SearchResult> ex_table(std::size_t n_max, std::size_t k,
                                          const SearchBudget& budget = SearchBudget::from_environment(),
                                          unsigned threads = 0) {
    std::vector<SearchResult> rows;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const SearchResult* prev = rows.empty() ? nullptr : &rows.back();
        rows.push_back(ex_exact(n, k, budget, threads, prev));
    }
    return rows;
}

} // namespace evencycle
