#pragma once

// Closed-form edge and degree bounds for graphs without short even cycles,
// evaluated exactly. Each verdict is decided by integer cross-multiplication
// of k-th powers; the double fields exist only for display.

#include "evencycle/cycles.hpp"
#include "evencycle/exact.hpp"
#include "evencycle/report.hpp"

#include <optional>

namespace evencycle {

enum class Verdict { True, False, NotApplicable, NotInstantiated };

constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::NotInstantiated: return "hypothesis-not-instantiated";
    }
    return "?";
}

inline Verdict verdict_of(bool b) noexcept { return b ? Verdict::True : Verdict::False; }

struct BoundReport {
    std::string step;        // short identifier, e.g. "iii"
    std::string name;
    Record inputs;
    std::string statement;   // the inequality being decided
    std::string value;       // exact quantities, as text
    double display = 0.0;    // bound value for people
    Verdict verdict = Verdict::NotInstantiated;
    std::string method = "exact-integer-cross-multiplication";
    bool asserted = false;
    std::string note;
};

namespace detail {

inline BigInt pow2(std::size_t e) { return ipow(BigInt(2), e); }

inline std::string str(const BigInt& x) { return x.str(); }
inline std::string str(const Rational& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline void require_k(std::size_t k) {
    if (k < 2) throw Error(ErrorCode::Precondition, "k must be at least 2");
}

} // namespace detail

/// m <= n^(1+1/k)/2 + 2^(k^2) n, decided as (2(m - 2^(k^2) n))^k <= n^(k+1).
inline bool theorem1_holds(const BigInt& m, const BigInt& n, std::size_t k) {
    const BigInt x = 2 * (m - detail::pow2(k * k) * n);
    if (x <= 0) return true;
    return ipow(x, k) <= ipow(n, k + 1);
}

inline BoundReport theorem1_bound(std::size_t n, std::size_t k, std::optional<std::size_t> edges = std::nullopt) {
    detail::require_k(k);
    if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
    BoundReport r;
    r.step = "theorem1";
    r.name = "edge bound n^(1+1/k)/2 + 2^(k^2) n";
    r.inputs = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
    r.statement = "m <= n^(1+1/k)/2 + 2^(k^2)*n";
    const double nd = static_cast<double>(n);
    r.display = 0.5 * std::pow(nd, 1.0 + 1.0 / static_cast<double>(k)) + to_display(detail::pow2(k * k)) * nd;
    const BigInt linear = detail::pow2(k * k) * n;
    r.value = "linear_term=" + linear.str();
    if (edges) {
        r.inputs.emplace_back("m", std::to_string(*edges));
        r.verdict = verdict_of(theorem1_holds(*edges, n, k));
    }
    if (linear >= BigInt(n) * (n - 1) / 2) r.note = "vacuous: the linear term alone exceeds n(n-1)/2";
    return r;
}

/// d(d-1)^(k-1) <= n for average degree d >= 2.
inline BoundReport ahl_moore_check(std::size_t n, const Rational& d, std::size_t k) {
    detail::require_k(k);
    BoundReport r;
    r.step = "moore";
    r.name = "Moore-type bound d(d-1)^(k-1) <= n";
    r.inputs = {{"n", std::to_string(n)}, {"d", detail::str(d)}, {"k", std::to_string(k)}};
    r.statement = "d*(d-1)^(k-1) <= n";
    if (d < 2) {
        r.verdict = Verdict::NotApplicable;
        r.note = "average degree below 2";
        return r;
    }
    const Rational lhs = d * rpow(d - 1, k - 1);
    r.value = "lhs=" + detail::str(lhs);
    r.display = to_display(lhs);
    r.verdict = verdict_of(lhs <= Rational(n));
    return r;
}

/// n^(1/k) + 2 for display.
inline double regular_bound(std::size_t n, std::size_t k) {
    detail::require_k(k);
    return root_display(static_cast<double>(n), k) + 2.0;
}

/// d < n^(1/k) + 2, decided by comparing (d-2)^k with n.
inline bool regular_degree_within_bound(std::size_t d, std::size_t n, std::size_t k) {
    if (d < 2) return true;
    return compare_with_root(Rational(d - 2), k, n) < 0;
}

inline BoundReport regular_bound_report(std::size_t n, std::size_t k, std::optional<std::size_t> degree = std::nullopt) {
    BoundReport r;
    r.step = "regular";
    r.name = "regular-graph degree bound";
    r.inputs = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
    r.statement = "d < n^(1/k) + 2";
    r.display = regular_bound(n, k);
    if (degree) {
        r.inputs.emplace_back("d", std::to_string(*degree));
        r.verdict = verdict_of(regular_degree_within_bound(*degree, n, k));
    }
    return r;
}

/// Evaluates each inequality of the maximum-degree, walk-count and path-count
/// argument, measured on g when given. Hypotheses that fail on the instance
/// are reported as not-applicable; without a graph only the symbolic
/// thresholds are reported.
inline std::vector<BoundReport> audit_proof_chain(std::size_t n, std::size_t k, const Graph* g = nullptr,
                                                  unsigned threads = 0) {
    detail::require_k(k);
    std::vector<BoundReport> out;
    const BigInt N = g ? BigInt(g->vertex_count()) : BigInt(n);
    if (g) n = g->vertex_count();
    const double nd = static_cast<double>(n);
    const double root = root_display(nd, k);
    const std::string ks = std::to_string(k);

    if (!g) {
        BoundReport a;
        a.step = "ii";
        a.name = "maximum degree of a minimal counterexample";
        a.inputs = {{"n", std::to_string(n)}, {"k", ks}};
        a.statement = "d > n^(1/k) + 2^(k^2)  =>  Delta < 2^(k-1) n^(1/k)";
        a.display = to_display(detail::pow2(k - 1)) * root;
        a.value = "d_threshold=" + fixed(root + to_display(detail::pow2(k * k)));
        a.verdict = Verdict::NotInstantiated;
        out.push_back(a);
        BoundReport b;
        b.step = "iii.closed-form";
        b.name = "non-path walk bound";
        b.inputs = a.inputs;
        b.statement = "Delta^(k-1) k n < k 2^((k-1)^2) n^((2k-1)/k)";
        b.display = static_cast<double>(k) * to_display(detail::pow2((k - 1) * (k - 1))) *
                    std::pow(nd, (2.0 * k - 1.0) / static_cast<double>(k));
        b.verdict = Verdict::NotInstantiated;
        out.push_back(b);
        out.push_back(theorem1_bound(n, k));
        return out;
    }

    if (!certify_no_even_cycles(*g, k, threads).pass)
        throw Error(ErrorCode::Precondition, "graph contains an even cycle of length <= " + std::to_string(2 * k));
    const auto st = degree_stats(*g);
    const std::size_t delta = st.min_degree, Delta = st.max_degree;
    const Rational& d = st.average;
    const Record base = {{"n", std::to_string(n)}, {"k", ks}, {"m", std::to_string(st.edges)},
                         {"d", detail::str(d)}, {"delta", std::to_string(delta)}, {"Delta", std::to_string(Delta)}};
    auto make = [&](std::string step, std::string name, std::string statement) {
        BoundReport r;
        r.step = std::move(step);
        r.name = std::move(name);
        r.inputs = base;
        r.statement = std::move(statement);
        return r;
    };

    // BFS tree from the first vertex of maximum degree
    Vertex root_v = 0;
    for (Vertex x = 0; x < n; ++x)
        if (g->degree(x) == Delta) {
            root_v = x;
            break;
        }
    const auto dist = bfs_distances(*g, root_v);
    bool single_parent = true, matching = true;
    std::size_t tree_size = 0;
    for (Vertex x = 0; x < n; ++x) {
        if (dist[x] == unreachable || dist[x] > k) continue;
        ++tree_size;
        std::size_t parents = 0, same = 0;
        for (Vertex y : g->neighbors(x)) {
            if (dist[y] + 1 == dist[x]) ++parents;
            if (dist[y] == dist[x]) ++same;
        }
        if (dist[x] >= 1 && parents > 1) single_parent = false;
        if (dist[x] >= 1 && dist[x] <= k - 1 && same > 1) matching = false;
    }
    {
        auto r = make("i.no-double-parent", "BFS tree: single parents",
                      "at each distance r <= k, a vertex has exactly one neighbour one step closer to the root");
        r.inputs.emplace_back("root", std::to_string(root_v));
        r.verdict = verdict_of(single_parent);
        out.push_back(r);
    }
    {
        auto r = make("i.matching", "BFS tree: level matchings",
                      "at each distance r-1 < k, a vertex has at most one neighbour at the same distance");
        r.inputs.emplace_back("root", std::to_string(root_v));
        r.verdict = verdict_of(matching);
        out.push_back(r);
    }
    {
        auto r = make("i", "BFS tree volume", "1 + Delta + Delta(delta-2) + ... + Delta(delta-2)^(k-1) <= |V(T)| <= n");
        if (delta < 2) {
            r.verdict = Verdict::NotApplicable;
            r.note = "minimum degree below 2";
        } else {
            BigInt lhs = 1;
            for (std::size_t i = 0; i < k; ++i) lhs += BigInt(Delta) * ipow(BigInt(delta - 2), i);
            r.value = "lhs=" + lhs.str() + " tree=" + std::to_string(tree_size);
            r.display = to_display(lhs);
            r.verdict = verdict_of(lhs <= tree_size && tree_size <= n);
        }
        out.push_back(r);
    }
    {
        auto r = make("ii", "maximum degree bound", "d > n^(1/k) + 4  =>  Delta < 2^(k-1) n^(1/k)");
        r.display = to_display(detail::pow2(k - 1)) * root;
        const bool hyp = compare_with_root(d - 4, k, N) > 0;
        if (!hyp) {
            r.verdict = Verdict::NotApplicable;
            r.note = "hypothesis d > n^(1/k) + 4 is false on this graph";
        } else {
            r.verdict = verdict_of(ipow(BigInt(Delta), k) < detail::pow2(k * (k - 1)) * N);
        }
        out.push_back(r);
    }

    const BigInt walks = count_nonreturning_walks(*g, k);
    std::vector<std::uint64_t> paths(k + 1);
    for (std::size_t l = 0; l <= k; ++l) paths[l] = count_paths(*g, l, threads);
    {
        auto r = make("iii", "walks that are not paths", "|Q_k| = |W_k| - |P_k| <= Delta^(k-1) k n");
        const BigInt q = walks - paths[k];
        const BigInt rhs = ipow(BigInt(Delta), k - 1) * k * N;
        r.value = "W_k=" + walks.str() + " P_k=" + std::to_string(paths[k]) + " Q_k=" + q.str() + " rhs=" + rhs.str();
        r.display = to_display(rhs);
        r.verdict = verdict_of(q <= rhs);
        out.push_back(r);
    }
    {
        auto r = make("iii.closed-form", "non-path walk bound, closed form",
                      "Delta^(k-1) k n < k 2^((k-1)^2) n^((2k-1)/k)");
        // Delta^(k-1) < 2^((k-1)^2) n^((k-1)/k)  <=>  Delta^(k(k-1)) < 2^(k(k-1)^2) n^(k-1)
        r.verdict = verdict_of(ipow(BigInt(Delta), k * (k - 1)) < detail::pow2(k * (k - 1) * (k - 1)) * ipow(N, k - 1));
        r.display = static_cast<double>(k) * to_display(detail::pow2((k - 1) * (k - 1))) *
                    std::pow(nd, (2.0 * k - 1.0) / static_cast<double>(k));
        r.note = "follows from (ii) when its hypothesis holds";
        out.push_back(r);
    }
    for (std::size_t l = 1; l < k; ++l) {
        auto r = make("iv.l=" + std::to_string(l), "path extension", "|P_k| >= (delta-k)^(k-l) |P_l|");
        r.inputs.emplace_back("l", std::to_string(l));
        if (delta < k) {
            r.verdict = Verdict::NotApplicable;
            r.note = "minimum degree below k";
        } else {
            const BigInt rhs = ipow(BigInt(delta - k), k - l) * paths[l];
            r.value = "P_k=" + std::to_string(paths[k]) + " rhs=" + rhs.str();
            r.verdict = verdict_of(BigInt(paths[k]) >= rhs);
        }
        out.push_back(r);
    }
    {
        auto r = make("walks", "non-returning walk lower bound", "|W_k| >= n d (d-1)^(k-1)");
        if (d < 2) {
            r.verdict = Verdict::NotApplicable;
            r.note = "average degree below 2";
        } else {
            const Rational rhs = Rational(N) * d * rpow(d - 1, k - 1);
            r.value = "W_k=" + walks.str() + " rhs=" + detail::str(rhs);
            r.display = to_display(rhs);
            r.verdict = verdict_of(Rational(walks) >= rhs);
        }
        out.push_back(r);
    }
    {
        auto r = make("asserted", "minimum degree versus average degree", "delta - k - 1 >= d/4");
        r.asserted = true;
        r.verdict = verdict_of(Rational(static_cast<long long>(delta) - static_cast<long long>(k) - 1) >= d / 4);
        r.note = "asserted without local justification; informational";
        out.push_back(r);
    }
    {
        auto m = ahl_moore_check(n, d, k);
        m.inputs = base;
        out.push_back(m);
    }
    {
        auto t = theorem1_bound(n, k, st.edges);
        t.inputs = base;
        out.push_back(t);
    }
    return out;
}

inline std::string format_bound_table(const std::vector<BoundReport>& reports) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports)
        rows.push_back({r.step, std::string(to_string(r.verdict)) + (r.asserted ? "*" : ""), r.statement,
                        r.value.empty() ? (r.display != 0.0 ? fixed(r.display) : "-") : r.value, r.note});
    return format_table({"step", "verdict", "statement", "value", "note"}, rows);
}

inline std::string format_bound_records(const std::vector<BoundReport>& reports) {
    Record rec;
    for (const auto& r : reports) {
        const std::string p = "bound." + r.step + ".";
        rec.emplace_back(p + "name", r.name);
        for (const auto& [k, v] : r.inputs) rec.emplace_back(p + "input." + k, v);
        rec.emplace_back(p + "statement", r.statement);
        if (!r.value.empty()) rec.emplace_back(p + "value", r.value);
        rec.emplace_back(p + "display", fixed(r.display));
        rec.emplace_back(p + "verdict", std::string(to_string(r.verdict)));
        rec.emplace_back(p + "method", r.method);
        if (r.asserted) rec.emplace_back(p + "asserted", "true");
        if (!r.note.empty()) rec.emplace_back(p + "note", r.note);
    }
    return format_records(rec);
}

} // namespace evencycle
