#pragma once

// Finite-geometry constructions: polarity graphs of PG(2,q) and of the
// symplectic quadrangle W(q), and incidence graphs of PG(2,q), W(q) and the
// split Cayley hexagon H(q). Every construction checks its own parameters
// (line sizes, point degrees, girth) before handing out a graph and throws
// ConstructionFailure otherwise.

#include "evencycle/cycles.hpp"
#include "evencycle/exact.hpp"
#include "evencycle/gf.hpp"

#include <map>
#include <sstream>

namespace evencycle {

using Coordinates = std::vector<FieldElement>;

/// Canonical points of PG(dim, q): nonzero vectors of length dim+1 whose
/// first nonzero coordinate is 1, ordered lexicographically.
class ProjectiveSpace {
public:
    ProjectiveSpace(Field field, std::size_t dim) : field_(std::move(field)), length_(dim + 1) {
        const std::uint32_t q = field_.order();
        std::size_t total = 1;
        for (std::size_t i = 0; i < length_; ++i) total *= q;
        index_of_code_.assign(total, npos);
        for (std::size_t code = 1; code < total; ++code) {
            Coordinates c = decode(code);
            if (canonical(c) == c) {
                index_of_code_[code] = points_.size();
                points_.push_back(std::move(c));
            }
        }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Coordinates& point(std::size_t i) const noexcept { return points_[i]; }
    const std::vector<Coordinates>& points() const noexcept { return points_; }

    Coordinates canonical(Coordinates c) const {
        for (auto x : c)
            if (x != field_.zero()) {
                const auto s = field_.inv(x);
                for (auto& y : c) y = field_.mul(s, y);
                return c;
            }
        throw Error(ErrorCode::ConstructionFailure, "zero vector has no projective point");
    }

    /// Index of the point spanned by a nonzero vector.
    std::size_t index(const Coordinates& c) const { return index_of_code_[encode(canonical(c))]; }

    /// Indices of all points on the line spanned by points a and b, sorted.
    std::vector<std::uint32_t> span(std::size_t a, std::size_t b) const {
        std::vector<std::uint32_t> out;
        const auto& x = points_[a];
        const auto& y = points_[b];
        Coordinates z(length_);
        out.push_back(static_cast<std::uint32_t>(b));
        for (std::uint32_t t = 0; t < field_.order(); ++t) {
            for (std::size_t i = 0; i < length_; ++i) z[i] = field_.add(x[i], field_.mul(FieldElement{t}, y[i]));
            out.push_back(static_cast<std::uint32_t>(index(z)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string label(std::size_t i, char open = '(', char close = ')') const {
        std::ostringstream s;
        s << open;
        for (std::size_t j = 0; j < length_; ++j) s << (j ? "," : "") << points_[i][j].value;
        s << close;
        return s.str();
    }

private:
    Coordinates decode(std::size_t code) const {
        Coordinates c(length_);
        for (std::size_t i = length_; i-- > 0;) {
            c[i] = FieldElement{static_cast<std::uint32_t>(code % field_.order())};
            code /= field_.order();
        }
        return c;
    }
    std::size_t encode(const Coordinates& c) const {
        std::size_t code = 0;
        for (auto x : c) code = code * field_.order() + x.value;
        return code;
    }

    Field field_;
    std::size_t length_;
    std::vector<Coordinates> points_;
    std::vector<std::size_t> index_of_code_;
};

struct ProjectivePoint {
    Coordinates coords;
};

/// Points and lines of a partial linear space with lines of size s+1 and
/// t+1 lines through each point.
struct IncidenceStructure {
    std::vector<std::string> point_labels;
    std::vector<std::vector<std::uint32_t>> lines; // sorted point indices
    std::size_t s = 0;
    std::size_t t = 0;
};

/// Checks the (s,t) regularity and that two points share at most one line.
inline void verify_incidence_structure(const IncidenceStructure& g, std::string_view name) {
    const std::size_t np = g.point_labels.size();
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ConstructionFailure, std::string(name) + ": " + why);
    };
    std::vector<std::size_t> lines_through(np, 0);
    for (const auto& line : g.lines) {
        if (line.size() != g.s + 1) fail("line with " + std::to_string(line.size()) + " points");
        for (auto p : line) ++lines_through[p];
    }
    for (std::size_t p = 0; p < np; ++p)
        if (lines_through[p] != g.t + 1) fail("point on " + std::to_string(lines_through[p]) + " lines");
    std::vector<std::uint32_t> seen(np * np <= (1u << 26) ? np * np : 0, 0);
    if (!seen.empty()) {
        for (std::size_t l = 0; l < g.lines.size(); ++l)
            for (std::size_t i = 0; i < g.lines[l].size(); ++i)
                for (std::size_t j = i + 1; j < g.lines[l].size(); ++j) {
                    auto& cell = seen[std::size_t(g.lines[l][i]) * np + g.lines[l][j]];
                    if (cell) fail("two points share two lines");
                    cell = 1;
                }
    }
}

/// Bipartite point-line incidence graph: points first, then lines.
inline Graph incidence_graph(const IncidenceStructure& s) {
    const std::size_t np = s.point_labels.size();
    std::vector<Edge> edges;
    std::vector<std::string> labels = s.point_labels;
    for (std::size_t l = 0; l < s.lines.size(); ++l) {
        std::ostringstream lab;
        lab << "L" << l << "[";
        for (std::size_t i = 0; i < s.lines[l].size(); ++i) lab << (i ? " " : "") << s.lines[l][i];
        lab << "]";
        labels.push_back(lab.str());
        for (auto p : s.lines[l]) edges.emplace_back(p, static_cast<Vertex>(np + l));
    }
    std::sort(edges.begin(), edges.end());
    return Graph(np + s.lines.size(), edges, std::move(labels));
}

inline void expect_girth(const Graph& g, std::size_t expected, std::string_view name) {
    const auto gg = girth(g);
    if (!gg || *gg != expected)
        throw Error(ErrorCode::ConstructionFailure,
                    std::string(name) + ": girth " + (gg ? std::to_string(*gg) : "none") + ", expected " +
                        std::to_string(expected));
}

namespace detail {

inline FieldElement dot(const Field& f, const Coordinates& x, const Coordinates& y) {
    FieldElement s = f.zero();
    for (std::size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
    return s;
}

// x0y1 - x1y0 + x2y3 - x3y2
inline FieldElement symplectic(const Field& f, const Coordinates& x, const Coordinates& y) {
    FieldElement s = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    return f.add(s, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
}

inline FieldElement plucker(const Field& f, const Coordinates& x, const Coordinates& y, std::size_t i, std::size_t j) {
    return f.sub(f.mul(x[i], y[j]), f.mul(x[j], y[i]));
}

// Lines spanned by pairs of points accepted by `joinable`, each found once.
template <class Joinable>
std::vector<std::vector<std::uint32_t>> collect_lines(const ProjectiveSpace& space, Joinable&& joinable) {
    const std::size_t n = space.size();
    std::vector<std::vector<std::uint32_t>> lines;
    std::vector<std::vector<std::uint32_t>> lines_at(n);
    std::vector<std::size_t> mark(n, static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < n; ++a) {
        for (auto l : lines_at[a])
            for (auto p : lines[l]) mark[p] = a;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (mark[b] == a || !joinable(space.point(a), space.point(b))) continue;
            auto line = space.span(a, b);
            const auto id = static_cast<std::uint32_t>(lines.size());
            for (auto p : line) {
                lines_at[p].push_back(id);
                mark[p] = a;
            }
            lines.push_back(std::move(line));
        }
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

inline std::vector<std::string> point_labels(const ProjectiveSpace& space) {
    std::vector<std::string> out;
    out.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.label(i));
    return out;
}

} // namespace detail

/// Polarity graph of PG(2,q) under x0y0+x1y1+x2y2: points x != y are adjacent
/// when y lies on the polar line of x; the q+1 absolute points lose their loop.
inline Graph erdos_renyi_polarity(std::uint32_t q) {
    const ProjectiveSpace plane(Field::of_order(q), 2);
    const Field& f = plane.field();
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < plane.size(); ++a)
        for (std::size_t b = a + 1; b < plane.size(); ++b)
            if (detail::dot(f, plane.point(a), plane.point(b)) == f.zero())
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    Graph g(plane.size(), edges, detail::point_labels(plane));
    const std::size_t qq = q;
    if (g.edge_count() != qq * (qq + 1) * (qq + 1) / 2)
        throw Error(ErrorCode::ConstructionFailure, "ER polarity graph has wrong edge count");
    return g;
}

inline IncidenceStructure projective_plane(std::uint32_t q) {
    const ProjectiveSpace plane(Field::of_order(q), 2);
    const Field& f = plane.field();
    IncidenceStructure s{detail::point_labels(plane), {}, q, q};
    // line [l] is the set of points x with l.x = 0; lines reuse the point coordinates
    for (std::size_t l = 0; l < plane.size(); ++l) {
        std::vector<std::uint32_t> line;
        for (std::size_t p = 0; p < plane.size(); ++p)
            if (detail::dot(f, plane.point(l), plane.point(p)) == f.zero()) line.push_back(static_cast<std::uint32_t>(p));
        s.lines.push_back(std::move(line));
    }
    verify_incidence_structure(s, "PG(2," + std::to_string(q) + ")");
    return s;
}

/// Point-line incidence graph of PG(2,q): (q+1)-regular, girth 6.
inline Graph incidence_pg2(std::uint32_t q) {
    auto g = incidence_graph(projective_plane(q));
    expect_girth(g, 6, "incidence graph of PG(2,q)");
    return g;
}

/// The symplectic generalized quadrangle W(q): all points of PG(3,q) and the
/// lines totally isotropic for x0y1-x1y0+x2y3-x3y2.
inline IncidenceStructure symplectic_quadrangle(std::uint32_t q) {
    const ProjectiveSpace space(Field::of_order(q), 3);
    const Field& f = space.field();
    IncidenceStructure s{detail::point_labels(space), {}, q, q};
    s.lines = detail::collect_lines(space, [&](const Coordinates& x, const Coordinates& y) {
        return detail::symplectic(f, x, y) == f.zero();
    });
    const std::size_t qq = q;
    if (s.lines.size() != (qq + 1) * (qq * qq + 1))
        throw Error(ErrorCode::ConstructionFailure, "W(q) has " + std::to_string(s.lines.size()) + " lines");
    verify_incidence_structure(s, "W(" + std::to_string(q) + ")");
    return s;
}

/// Incidence graph of W(q): (q+1)-regular, girth 8.
inline Graph incidence_w(std::uint32_t q) {
    auto g = incidence_graph(symplectic_quadrangle(q));
    expect_girth(g, 8, "incidence graph of W(q)");
    return g;
}

/// A polarity of W(q), q = 2^(2e+1), as a pair of mutually inverse maps
/// between lines and points.
struct QuadranglePolarity {
    IncidenceStructure quadrangle;
    std::vector<std::uint32_t> point_of_line; // rho(L)
    std::vector<std::uint32_t> line_of_point; // rho(x)
    std::size_t absolute_points = 0;
};

/// Builds the polarity of W(q) and certifies it exhaustively.
///
/// A totally isotropic line with Pluecker coordinates p_ij is sent to the point
/// (p02, p13, p03, p12) with the inverse Tits endomorphism applied to each
/// coordinate. The image of each point is the line through the images of its
/// pencil. The maps are checked to be mutually inverse and incidence
/// preserving before anything is returned.
inline QuadranglePolarity w_polarity(std::uint32_t q) {
    const Field field = Field::of_order(q);
    std::vector<FieldElement> sigma_inv(q);
    for (std::uint32_t a = 0; a < q; ++a) sigma_inv[tits_sigma(field, FieldElement{a}).value] = FieldElement{a};

    QuadranglePolarity pol{symplectic_quadrangle(q), {}, {}, 0};
    const ProjectiveSpace space(field, 3);
    const auto& lines = pol.quadrangle.lines;
    const std::size_t n = space.size();
    auto fail = [](const std::string& why) {
        throw Error(ErrorCode::ConstructionFailure, "W(q) polarity: " + why);
    };

    pol.point_of_line.resize(lines.size());
    std::vector<std::uint32_t> preimage(n, static_cast<std::uint32_t>(-1));
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const auto& x = space.point(lines[l][0]);
        const auto& y = space.point(lines[l][1]);
        Coordinates z{detail::plucker(field, x, y, 0, 2), detail::plucker(field, x, y, 1, 3),
                      detail::plucker(field, x, y, 0, 3), detail::plucker(field, x, y, 1, 2)};
        for (auto& c : z) c = sigma_inv[c.value];
        const auto p = static_cast<std::uint32_t>(space.index(z));
        if (preimage[p] != static_cast<std::uint32_t>(-1)) fail("line map is not injective");
        preimage[p] = static_cast<std::uint32_t>(l);
        pol.point_of_line[l] = p;
    }

    std::vector<std::vector<std::uint32_t>> lines_at(n);
    for (std::size_t l = 0; l < lines.size(); ++l)
        for (auto p : lines[l]) lines_at[p].push_back(static_cast<std::uint32_t>(l));
    std::map<std::vector<std::uint32_t>, std::uint32_t> line_index;
    for (std::size_t l = 0; l < lines.size(); ++l) line_index.emplace(lines[l], static_cast<std::uint32_t>(l));

    pol.line_of_point.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::uint32_t> image;
        for (auto l : lines_at[x]) image.push_back(pol.point_of_line[l]);
        std::sort(image.begin(), image.end());
        auto it = line_index.find(image);
        if (it == line_index.end()) fail("pencil of point " + std::to_string(x) + " is not mapped onto a line");
        pol.line_of_point[x] = it->second;
    }
    for (std::size_t x = 0; x < n; ++x)
        if (pol.point_of_line[pol.line_of_point[x]] != x) fail("rho^2 != id on points");
    for (std::size_t l = 0; l < lines.size(); ++l)
        if (pol.line_of_point[pol.point_of_line[l]] != l) fail("rho^2 != id on lines");
    // x on L  <=>  rho(L) on rho(x): the lines through x must be exactly the
    // preimages of the points of rho(x)
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::uint32_t> back;
        for (auto y : lines[pol.line_of_point[x]]) back.push_back(preimage[y]);
        std::sort(back.begin(), back.end());
        auto through = lines_at[x];
        std::sort(through.begin(), through.end());
        if (back != through) fail("incidence not preserved at point " + std::to_string(x));
    }
    for (std::size_t x = 0; x < n; ++x) {
        const auto& l = lines[pol.line_of_point[x]];
        if (std::binary_search(l.begin(), l.end(), static_cast<std::uint32_t>(x))) ++pol.absolute_points;
    }
    return pol;
}

/// Polarity graph of W(q) for q = 2^(2e+1): x ~ y iff x lies on rho(y).
/// (q^2+1)(q^2+2q)/2 edges, no cycles of length 4 or 6.
inline Graph polarity_w(std::uint32_t q) {
    const Field field = Field::of_order(q);
    (void)tits_sigma(field, field.one()); // WrongFieldOrder unless q = 2^(2e+1)
    const auto pol = w_polarity(q);
    const auto& lines = pol.quadrangle.lines;
    const std::size_t n = pol.line_of_point.size();
    std::vector<Edge> edges;
    for (std::size_t y = 0; y < n; ++y)
        for (auto x : lines[pol.line_of_point[y]])
            if (x < y) edges.emplace_back(x, static_cast<Vertex>(y));
    std::sort(edges.begin(), edges.end());
    Graph g(n, edges, pol.quadrangle.point_labels);
    const std::size_t qq = q;
    if (pol.absolute_points != qq * qq + 1 || g.edge_count() != (qq * qq + 1) * (qq * qq + 2 * qq) / 2)
        throw Error(ErrorCode::ConstructionFailure, "W(q) polarity graph has wrong parameters");
    return g;
}

/// The split Cayley hexagon H(q) in its standard embedding: points of the
/// quadric x0x4+x1x5+x2x6 = x3^2 in PG(6,q), lines the quadric lines whose
/// Grassmann coordinates satisfy p12=p34, p54=p32, p20=p35, p65=p30,
/// p01=p36, p46=p31.
inline IncidenceStructure split_cayley_hexagon(std::uint32_t q) {
    if (q != 2 && q != 3)
        throw Error(ErrorCode::UnsupportedOrder, "hexagon construction supports q = 2, 3; got " + std::to_string(q));
    const Field f = Field::of_order(q);
    const ProjectiveSpace space(f, 6);
    auto quad = [&](const Coordinates& x) {
        FieldElement s = f.add(f.add(f.mul(x[0], x[4]), f.mul(x[1], x[5])), f.mul(x[2], x[6]));
        return f.sub(s, f.mul(x[3], x[3]));
    };
    std::vector<std::size_t> on_quadric;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (quad(space.point(i)) == f.zero()) on_quadric.push_back(i);
    std::vector<std::size_t> renumber(space.size(), static_cast<std::size_t>(-1));
    IncidenceStructure s{{}, {}, q, q};
    for (std::size_t i = 0; i < on_quadric.size(); ++i) {
        renumber[on_quadric[i]] = i;
        s.point_labels.push_back(space.label(on_quadric[i]));
    }
    const std::size_t np = on_quadric.size();
    std::vector<std::vector<std::uint32_t>> lines_at(np);
    std::vector<std::size_t> mark(np, static_cast<std::size_t>(-1));
    Coordinates sum(7);
    for (std::size_t a = 0; a < np; ++a) {
        for (auto l : lines_at[a])
            for (auto p : s.lines[l]) mark[p] = a;
        const auto& x = space.point(on_quadric[a]);
        for (std::size_t b = a + 1; b < np; ++b) {
            if (mark[b] == a) continue;
            const auto& y = space.point(on_quadric[b]);
            for (std::size_t i = 0; i < 7; ++i) sum[i] = f.add(x[i], y[i]);
            if (quad(sum) != f.zero()) continue; // polar form vanishes iff the span lies on the quadric
            auto p = [&](std::size_t i, std::size_t j) { return detail::plucker(f, x, y, i, j); };
            if (p(1, 2) != p(3, 4) || p(5, 4) != p(3, 2) || p(2, 0) != p(3, 5) || p(6, 5) != p(3, 0) ||
                p(0, 1) != p(3, 6) || p(4, 6) != p(3, 1))
                continue;
            std::vector<std::uint32_t> line;
            for (auto pt : space.span(on_quadric[a], on_quadric[b])) line.push_back(static_cast<std::uint32_t>(renumber[pt]));
            std::sort(line.begin(), line.end());
            const auto id = static_cast<std::uint32_t>(s.lines.size());
            for (auto pt : line) {
                lines_at[pt].push_back(id);
                mark[pt] = a;
            }
            s.lines.push_back(std::move(line));
        }
    }
    std::sort(s.lines.begin(), s.lines.end());
    const std::size_t qq = q;
    const std::size_t expected = ((qq * qq * qq * qq * qq * qq) - 1) / (qq - 1);
    if (np != expected || s.lines.size() != expected)
        throw Error(ErrorCode::ConstructionFailure, "H(q) has " + std::to_string(np) + " points and " +
                                                        std::to_string(s.lines.size()) + " lines");
    verify_incidence_structure(s, "H(" + std::to_string(q) + ")");
    return s;
}

/// Incidence graph of H(q): (q+1)-regular, girth 12.
inline Graph incidence_hexagon(std::uint32_t q) {
    auto g = incidence_graph(split_cayley_hexagon(q));
    expect_girth(g, 12, "incidence graph of H(q)");
    return g;
}

struct DensityReport {
    std::size_t edges = 0;
    std::size_t vertices = 0;
    std::size_t k = 0;
    BigInt threshold;       // ceil(n^(1+1/k)/2) - n
    bool dense = false;     // edges >= threshold, decided exactly
    double ratio = 0.0;     // 2|E| / n^(1+1/k), display only
};

/// How close g comes to n^(1+1/k)/2 edges.
inline DensityReport edge_density_report(const Graph& g, std::size_t k) {
    if (k < 2) throw Error(ErrorCode::Precondition, "k must be at least 2");
    DensityReport r;
    r.edges = g.edge_count();
    r.vertices = g.vertex_count();
    r.k = k;
    if (r.vertices == 0) return r;
    const BigInt n = r.vertices;
    r.threshold = ceil_half_power(n, k) - n;
    r.dense = BigInt(r.edges) >= r.threshold;
    r.ratio = 2.0 * static_cast<double>(r.edges) /
              std::pow(static_cast<double>(r.vertices), 1.0 + 1.0 / static_cast<double>(k));
    return r;
}

} // namespace evencycle
