#pragma once

// Local structure of graphs without short even cycles: theta-graph parity,
// the vine formed by all short u-v paths, geodesic uniqueness, the family of
// ear subsets used by k-paths, and the Sperner-type path-count bound.
//
// Path lengths are counted in edges throughout.

#include "evencycle/cycles.hpp"

#include <set>
#include <sstream>

namespace evencycle {

struct ThetaCycle {
    std::size_t length = 0;
    VertexPath cycle;
    std::pair<int, int> paths; // indices (0,1,2) of the two paths used
};

/// One even cycle among the three cycles of a theta graph.
inline ThetaCycle find_even_cycle_in_theta(VertexPath a, VertexPath b, VertexPath c) {
    std::array<VertexPath*, 3> ps{&a, &b, &c};
    for (auto* p : ps)
        if (p->size() < 2) throw Error(ErrorCode::NotATheta, "every path needs at least one edge");
    const Vertex s = a.front(), t = a.back();
    if (s == t) throw Error(ErrorCode::NotATheta, "endpoints coincide");
    for (auto* p : ps) {
        if (p->front() == t && p->back() == s) std::reverse(p->begin(), p->end());
        if (p->front() != s || p->back() != t) throw Error(ErrorCode::NotATheta, "paths do not share both endpoints");
    }
    std::set<Vertex> interior;
    std::size_t interior_total = 0;
    int single_edges = 0;
    for (auto* p : ps) {
        if (p->size() == 2) ++single_edges;
        for (std::size_t i = 1; i + 1 < p->size(); ++i) {
            interior.insert((*p)[i]);
            ++interior_total;
        }
    }
    if (single_edges > 1) throw Error(ErrorCode::NotATheta, "two single-edge paths would be parallel edges");
    if (interior.size() != interior_total || interior.count(s) || interior.count(t))
        throw Error(ErrorCode::NotATheta, "paths are not internally disjoint");
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    for (auto [i, j] : pairs) {
        const std::size_t len = (ps[i]->size() - 1) + (ps[j]->size() - 1);
        if (len % 2 == 0) {
            ThetaCycle out{len, *ps[i], {i, j}};
            for (std::size_t x = ps[j]->size() - 2; x >= 1; --x) out.cycle.push_back((*ps[j])[x]);
            return out;
        }
    }
    throw Error(ErrorCode::NotATheta, "no even cycle; parity argument violated");
}

/// Whether callers have already certified g against even cycles <= 2k.
enum class Precheck { Run, AlreadyCertified };

namespace detail {

inline void require_certified(const Graph& g, std::size_t k, Precheck pre) {
    if (pre == Precheck::AlreadyCertified) return;
    if (!certify_no_even_cycles(g, k).pass)
        throw Error(ErrorCode::Precondition, "graph contains an even cycle of length <= " + std::to_string(2 * k));
}

inline std::size_t checked_distance(const Graph& g, Vertex u, Vertex v, std::size_t k) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw Error(ErrorCode::Precondition, "vertex out of range");
    if (u == v) throw Error(ErrorCode::Precondition, "endpoints must differ");
    const auto d = bfs_distances(g, u)[v];
    if (d == unreachable || d > k)
        throw Error(ErrorCode::TooFar, "dist(" + std::to_string(u) + "," + std::to_string(v) + ") exceeds " + std::to_string(k));
    return d;
}

} // namespace detail

/// The shortest u-v path, verified to be the only one.
inline VertexPath unique_geodesic(const Graph& g, Vertex u, Vertex v, std::size_t k,
                                  Precheck pre = Precheck::Run) {
    detail::require_certified(g, k, pre);
    const auto d = detail::checked_distance(g, u, v, k);
    auto paths = enumerate_paths(g, u, v, d);
    if (paths.size() != 1)
        throw Error(ErrorCode::LemmaViolation, std::to_string(paths.size()) + " geodesics between " +
                                                   std::to_string(u) + " and " + std::to_string(v));
    return paths.front();
}

struct PathUnion {
    std::vector<Vertex> vertices;              // sorted
    std::vector<Edge> edges;                   // (a,b) with a < b, sorted
    std::vector<std::vector<VertexPath>> paths; // paths[l] = all u-v paths of length l, l <= k
};

/// The union H of all u-v paths of length at most k.
inline PathUnion short_path_union(const Graph& g, Vertex u, Vertex v, std::size_t k,
                                  std::size_t ceiling = default_path_ceiling) {
    const auto d = detail::checked_distance(g, u, v, k);
    PathUnion h;
    h.paths.resize(k + 1);
    std::set<Vertex> vs;
    std::set<Edge> es;
    for (std::size_t len = d; len <= k; ++len) {
        h.paths[len] = enumerate_paths(g, u, v, len, ceiling);
        for (const auto& p : h.paths[len])
            for (std::size_t i = 0; i < p.size(); ++i) {
                vs.insert(p[i]);
                if (i + 1 < p.size()) es.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
            }
    }
    h.vertices.assign(vs.begin(), vs.end());
    h.edges.assign(es.begin(), es.end());
    return h;
}

struct Ear {
    VertexPath path;        // from u_i to v_i
    std::size_t start = 0;  // position of u_i on the geodesic
    std::size_t end = 0;    // position of v_i on the geodesic
    std::size_t length() const noexcept { return path.size() - 1; }
    std::size_t cycle_length() const noexcept { return length() + (end - start); }
};

struct PathFamily {
    std::vector<std::vector<std::size_t>> members; // f(P) per k-path, 1-based ear indices
    bool injective = true;
    bool antichain = true;
    bool sizes_ok = true;
    std::string witness; // describes the first failing pair, if any
};

struct VineCertificate {
    Vertex u = 0, v = 0;
    std::size_t k = 0;
    VertexPath geodesic;
    std::vector<Ear> ears;
    std::vector<VertexPath> k_paths; // P_k(u,v)
    PathFamily family;
    bool is_vine = false;
    bool ordering_ok = false;
    bool geodesic_unique = false;
    bool ear_cycles_odd = false;
    bool sperner_ok = false;          // |F| <= C(r, min(r/2, k-|P*|))
    bool within_global_bound = false; // |P_k(u,v)| <= path_count_bound(k)
    std::string violation;

    std::size_t geodesic_length() const noexcept { return geodesic.size() - 1; }
    bool all_checks_pass() const noexcept {
        return is_vine && ordering_ok && geodesic_unique && ear_cycles_odd && family.injective &&
               family.antichain && family.sizes_ok && sperner_ok && within_global_bound;
    }
};

/// Raised when a structural lemma fails on the input; carries the partial
/// certificate for diagnosis.
class LemmaViolationError : public Error {
public:
    LemmaViolationError(VineCertificate cert, const std::string& what)
        : Error(ErrorCode::LemmaViolation, what), certificate_(std::move(cert)) {}
    const VineCertificate& certificate() const noexcept { return certificate_; }

private:
    VineCertificate certificate_;
};

inline BigInt binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    BigInt out = 1;
    for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

/// C(r, m) with m = min(floor(r/2), k - geodesic_length).
inline BigInt path_count_bound(std::size_t r, std::size_t geodesic_length, std::size_t k) {
    if (geodesic_length > k) return 0;
    return binomial(r, std::min(r / 2, k - geodesic_length));
}

/// max over r <= k of C(r, min(floor(r/2), k - r)).
inline BigInt path_count_bound(std::size_t k) {
    if (k < 2) throw Error(ErrorCode::Precondition, "k must be at least 2");
    BigInt best = 0;
    for (std::size_t r = 0; r <= k; ++r) best = std::max(best, binomial(r, std::min(r / 2, k - r)));
    return best;
}

/// f(P) for every k-path in the certificate, with injectivity, antichain and
/// size checks.
inline PathFamily path_family(const VineCertificate& cert) {
    PathFamily fam;
    const std::size_t limit = cert.k >= cert.geodesic_length() ? cert.k - cert.geodesic_length() : 0;
    for (const auto& p : cert.k_paths) {
        std::set<Edge> used;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) used.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
        std::vector<std::size_t> member;
        for (std::size_t e = 0; e < cert.ears.size(); ++e) {
            const auto& ear = cert.ears[e].path;
            bool inside = true;
            for (std::size_t i = 0; i + 1 < ear.size() && inside; ++i)
                inside = used.count({std::min(ear[i], ear[i + 1]), std::max(ear[i], ear[i + 1])}) > 0;
            if (inside) member.push_back(e + 1);
        }
        if (member.size() > limit && fam.sizes_ok) {
            fam.sizes_ok = false;
            if (fam.witness.empty()) fam.witness = "path " + std::to_string(fam.members.size()) + " uses too many ears";
        }
        fam.members.push_back(std::move(member));
    }
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        for (std::size_t j = 0; j < fam.members.size(); ++j) {
            if (i == j) continue;
            const auto& a = fam.members[i];
            const auto& b = fam.members[j];
            if (a == b) {
                if (fam.injective && fam.witness.empty())
                    fam.witness = "paths " + std::to_string(i) + " and " + std::to_string(j) + " share f(P)";
                fam.injective = false;
            } else if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                if (fam.antichain && fam.witness.empty())
                    fam.witness = "f(path " + std::to_string(i) + ") is contained in f(path " + std::to_string(j) + ")";
                fam.antichain = false;
            }
        }
    return fam;
}

/// Decomposes the union of all u-v paths of length <= k into the geodesic and
/// its ears, and runs every structural check on the result.
inline VineCertificate vine_decompose(const Graph& g, Vertex u, Vertex v, std::size_t k,
                                      Precheck pre = Precheck::Run,
                                      std::size_t ceiling = default_path_ceiling) {
    detail::require_certified(g, k, pre);
    const auto h = short_path_union(g, u, v, k, ceiling);
    VineCertificate cert;
    cert.u = u;
    cert.v = v;
    cert.k = k;
    auto violate = [&](const std::string& why) {
        cert.violation = why;
        throw LemmaViolationError(cert, why);
    };

    std::size_t d = 0;
    while (h.paths[d].empty()) ++d;
    cert.geodesic = h.paths[d].front();
    cert.geodesic_unique = h.paths[d].size() == 1;
    cert.k_paths = h.paths[k];
    if (!cert.geodesic_unique) violate(std::to_string(h.paths[d].size()) + " geodesics of length " + std::to_string(d));

    std::vector<std::size_t> pos(g.vertex_count(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < cert.geodesic.size(); ++i) pos[cert.geodesic[i]] = i;
    std::set<Edge> on_geodesic;
    for (std::size_t i = 0; i + 1 < cert.geodesic.size(); ++i)
        on_geodesic.insert({std::min(cert.geodesic[i], cert.geodesic[i + 1]), std::max(cert.geodesic[i], cert.geodesic[i + 1])});
    std::vector<std::vector<Vertex>> rest(g.vertex_count());
    for (auto e : h.edges)
        if (!on_geodesic.count(e)) {
            rest[e.first].push_back(e.second);
            rest[e.second].push_back(e.first);
        }
    for (Vertex x : h.vertices)
        if (pos[x] == static_cast<std::size_t>(-1) && rest[x].size() != 2)
            violate("vertex " + std::to_string(x) + " off the geodesic has degree " + std::to_string(rest[x].size()) +
                    " in H");

    // trace each ear from its attachment nearer to u
    for (Vertex a : cert.geodesic)
        for (Vertex next : rest[a]) {
            VertexPath path{a};
            Vertex prev = a, cur = next;
            while (pos[cur] == static_cast<std::size_t>(-1)) {
                path.push_back(cur);
                const Vertex step = rest[cur][0] == prev ? rest[cur][1] : rest[cur][0];
                prev = cur;
                cur = step;
            }
            path.push_back(cur);
            if (pos[cur] == pos[a]) violate("ear returns to its attachment vertex " + std::to_string(a));
            if (pos[cur] < pos[a]) continue;
            cert.ears.push_back({std::move(path), pos[a], pos[cur]});
        }
    std::stable_sort(cert.ears.begin(), cert.ears.end(),
                     [](const Ear& x, const Ear& y) { return x.start < y.start; });
    cert.is_vine = true;
    cert.ordering_ok = true;
    for (std::size_t i = 0; i + 1 < cert.ears.size(); ++i)
        if (cert.ears[i].end > cert.ears[i + 1].start || cert.ears[i].start == cert.ears[i + 1].start)
            cert.ordering_ok = false;
    cert.ear_cycles_odd = std::all_of(cert.ears.begin(), cert.ears.end(),
                                      [](const Ear& e) { return e.cycle_length() % 2 == 1; });
    cert.family = path_family(cert);
    cert.sperner_ok = BigInt(cert.family.members.size()) <= path_count_bound(cert.ears.size(), d, k);
    cert.within_global_bound = BigInt(cert.k_paths.size()) <= path_count_bound(k);

    if (!cert.ordering_ok) {
        cert.is_vine = false;
        violate("ears overlap along the geodesic");
    }
    if (!cert.ear_cycles_odd) violate("an ear closes an even cycle with the geodesic");
    if (!cert.family.injective || !cert.family.antichain || !cert.family.sizes_ok) violate(cert.family.witness);
    if (!cert.sperner_ok || !cert.within_global_bound) violate("path count exceeds the Sperner bound");
    return cert;
}

struct EqualityWitness {
    Graph graph;
    Vertex u = 0, v = 0;
    std::size_t triangles = 0;  // r = |P*|
    BigInt bound;               // per-instance bound
    std::size_t path_count = 0; // |P_k(u,v)| by enumeration
};

/// Chain of r triangles over a path of length r, with r the smallest value
/// maximising C(r, min(floor(r/2), k - r)); vertices x0..xr then apexes.
inline EqualityWitness equality_witness(std::size_t k) {
    if (k < 2) throw Error(ErrorCode::Precondition, "k must be at least 2");
    std::size_t best_r = 1;
    for (std::size_t r = 1; r <= k; ++r)
        if (path_count_bound(r, r, k) > path_count_bound(best_r, best_r, k)) best_r = r;
    auto chain = [](std::size_t r) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < r; ++i) {
            const auto apex = static_cast<Vertex>(r + 1 + i);
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
            edges.emplace_back(static_cast<Vertex>(i), apex);
            edges.emplace_back(static_cast<Vertex>(i + 1), apex);
        }
        return Graph(2 * r + 1, edges);
    };
    // fall back to smaller chains if a chain ever fails the certificate
    for (std::size_t r = best_r; r >= 1; --r) {
        Graph g = chain(r);
        if (!certify_no_even_cycles(g, k).pass) continue;
        EqualityWitness w{g, 0, static_cast<Vertex>(r), r, path_count_bound(r, r, k), 0};
        w.path_count = enumerate_paths(g, w.u, w.v, k).size();
        return w;
    }
    throw Error(ErrorCode::ConstructionFailure, "no triangle chain passes the certificate");
}

namespace detail {

inline std::string join_path(const VertexPath& p) {
    std::ostringstream s;
    for (std::size_t i = 0; i < p.size(); ++i) s << (i ? "-" : "") << p[i];
    return s.str();
}

// printed as a set: members in sorted order
inline std::string format_family(const PathFamily& f) {
    auto members = f.members;
    std::sort(members.begin(), members.end());
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < members.size(); ++i) {
        s << (i ? "," : "") << '{';
        for (std::size_t j = 0; j < members[i].size(); ++j) s << (j ? "," : "") << members[i][j];
        s << '}';
    }
    s << '}';
    return s.str();
}

} // namespace detail

/// Line-oriented text report of a certificate.
inline std::string format_vine_report(const VineCertificate& c) {
    std::ostringstream s;
    auto verdict = [](bool b) { return b ? "PASS" : "FAIL"; };
    s << "pair " << c.u << ' ' << c.v << " k=" << c.k << '\n';
    s << "geodesic " << detail::join_path(c.geodesic) << " length=" << c.geodesic_length() << '\n';
    s << "ears " << c.ears.size() << '\n';
    for (std::size_t i = 0; i < c.ears.size(); ++i)
        s << "ear " << i + 1 << ' ' << detail::join_path(c.ears[i].path) << " attach=" << c.ears[i].start << ".."
          << c.ears[i].end << " cycle=" << c.ears[i].cycle_length() << '\n';
    s << "k-paths " << c.k_paths.size() << '\n';
    s << "family " << detail::format_family(c.family) << '\n';
    s << "check vine " << verdict(c.is_vine) << '\n';
    s << "check ordering " << verdict(c.ordering_ok) << '\n';
    s << "check geodesic-unique " << verdict(c.geodesic_unique) << '\n';
    s << "check ear-cycles-odd " << verdict(c.ear_cycles_odd) << '\n';
    s << "check injective " << verdict(c.family.injective) << '\n';
    s << "check antichain " << verdict(c.family.antichain) << '\n';
    s << "check sizes " << verdict(c.family.sizes_ok) << '\n';
    s << "check sperner " << verdict(c.sperner_ok) << '\n';
    s << "check path-count-bound " << verdict(c.within_global_bound) << '\n';
    if (!c.violation.empty()) s << "violation " << c.violation << '\n';
    return s.str();
}

/// The same content as key=value records.
inline std::string format_vine_records(const VineCertificate& c) {
    std::ostringstream s;
    auto b = [](bool x) { return x ? "true" : "false"; };
    s << "vine.u=" << c.u << "\nvine.v=" << c.v << "\nvine.k=" << c.k << '\n';
    s << "vine.geodesic=" << detail::join_path(c.geodesic) << '\n';
    s << "vine.ears=" << c.ears.size() << '\n';
    for (std::size_t i = 0; i < c.ears.size(); ++i) s << "vine.ear." << i + 1 << '=' << detail::join_path(c.ears[i].path) << '\n';
    s << "vine.k_paths=" << c.k_paths.size() << '\n';
    s << "vine.family=" << detail::format_family(c.family) << '\n';
    s << "vine.is_vine=" << b(c.is_vine) << "\nvine.ordering_ok=" << b(c.ordering_ok)
      << "\nvine.geodesic_unique=" << b(c.geodesic_unique) << "\nvine.ear_cycles_odd=" << b(c.ear_cycles_odd)
      << "\nvine.injective=" << b(c.family.injective) << "\nvine.antichain=" << b(c.family.antichain)
      << "\nvine.sizes_ok=" << b(c.family.sizes_ok) << "\nvine.sperner_ok=" << b(c.sperner_ok)
      << "\nvine.path_count_bound_ok=" << b(c.within_global_bound) << '\n';
    if (!c.violation.empty()) s << "vine.violation=" << c.violation << '\n';
    return s.str();
}

} // namespace evencycle
