#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcmdual/errors.hpp"
#include "lcmdual/ferrers.hpp"
#include "lcmdual/monomial.hpp"
#include "lcmdual/rational_matrix.hpp"

namespace lcmdual {

struct GridVertex {
    int row = 0;  // 1-based
    int col = 0;

    auto operator<=>(const GridVertex&) const = default;
};

enum class EdgeKind { horizontal, vertical };

/// Directed edge of the grid complex; the tail is the smaller endpoint in
/// row-major order, and the direction of the arrow.
struct GridEdge {
    GridVertex tail;
    GridVertex head;
    EdgeKind kind = EdgeKind::horizontal;

    bool operator==(const GridEdge&) const = default;
};

/// Unit square with corners (i,j), (i+1,j), (i+1,j+1), (i,j+1).
struct GridFace {
    GridVertex corner;

    bool operator==(const GridFace&) const = default;
};

/// Labeled polyhedral grid complex. Vertex (i,j) carries m_I/(x_i x_j),
/// a horizontal edge carries m_I/x_row, a vertical edge m_I/x_col, and every
/// face carries m_I itself. The cell lists are public so that restricted and
/// synthetic complexes can be assembled directly.
struct LabeledComplex {
    std::size_t ambient;
    Monomial top_label;  // m_I
    std::vector<GridVertex> vertices;
    std::vector<GridEdge> edges;
    std::vector<GridFace> faces;

    LabeledComplex(std::size_t ambient_vars, Monomial top)
        : ambient(ambient_vars), top_label(std::move(top)) {}

    Monomial vertex_label(const GridVertex& v) const {
        std::vector<int> e = top_label.exponents();
        e[static_cast<std::size_t>(v.row) - 1] -= 1;
        e[static_cast<std::size_t>(v.col) - 1] -= 1;
        return Monomial(std::move(e));
    }

    Monomial edge_label(const GridEdge& e) const {
        const int shared = e.kind == EdgeKind::horizontal ? e.tail.row : e.tail.col;
        std::vector<int> exps = top_label.exponents();
        exps[static_cast<std::size_t>(shared) - 1] -= 1;
        return Monomial(std::move(exps));
    }

    Monomial face_label() const { return top_label; }
};

/// The complex X_lambda of the strongly stable ideal attached to lambda.
/// Vertices are row-major; edge columns follow the displayed matrix order:
/// for each row, its horizontal edges left to right, then the vertical edges
/// into the next row left to right. Faces are row-major.
inline LabeledComplex build_complex(const Partition& lambda) {
    if (!lambda.admits_staircase())
        throw DomainError("the grid complex requires lambda_m >= m");
    const int m = static_cast<int>(lambda.rows());
    const int n = lambda.cols();

    std::vector<int> top(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < m; ++i) top[static_cast<std::size_t>(i)] = 2;
    LabeledComplex x(static_cast<std::size_t>(n), Monomial(std::move(top)));

    auto part = [&](int i) { return lambda.part(static_cast<std::size_t>(i) - 1); };
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= part(i); ++j) x.vertices.push_back({i, j});
    for (int i = 1; i <= m; ++i) {
        for (int j = i; j < part(i); ++j)
            x.edges.push_back({{i, j}, {i, j + 1}, EdgeKind::horizontal});
        if (i < m)
            for (int j = i + 1; j <= part(i + 1); ++j)
                x.edges.push_back({{i, j}, {i + 1, j}, EdgeKind::vertical});
    }
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j < part(i + 1); ++j) x.faces.push_back({GridVertex{i, j}});
    return x;
}

namespace detail {

inline std::map<GridVertex, std::size_t> vertex_index(const LabeledComplex& x) {
    std::map<GridVertex, std::size_t> idx;
    for (std::size_t i = 0; i < x.vertices.size(); ++i) idx[x.vertices[i]] = i;
    return idx;
}

inline std::map<std::pair<GridVertex, GridVertex>, std::size_t> edge_index(
    const LabeledComplex& x) {
    std::map<std::pair<GridVertex, GridVertex>, std::size_t> idx;
    for (std::size_t i = 0; i < x.edges.size(); ++i)
        idx[{x.edges[i].tail, x.edges[i].head}] = i;
    return idx;
}

/// The four boundary edges of a face as (tail, head, sign) in the cycle
/// orientation: top and right are traversed with the edge, bottom and left
/// against it.
inline std::array<std::tuple<GridVertex, GridVertex, int>, 4> face_boundary(const GridFace& f) {
    const int i = f.corner.row, j = f.corner.col;
    return {{
        {{i, j}, {i, j + 1}, +1},          // top horizontal
        {{i, j + 1}, {i + 1, j + 1}, +1},  // right vertical
        {{i + 1, j}, {i + 1, j + 1}, -1},  // bottom horizontal
        {{i, j}, {i + 1, j}, -1},          // left vertical
    }};
}

} // namespace detail

/// Vertex-by-edge matrix: +1 at the tail (negative end), -1 at the head.
inline RationalMatrix incidence_matrix(const LabeledComplex& x) {
    const auto vid = detail::vertex_index(x);
    RationalMatrix a(x.vertices.size(), x.edges.size());
    for (std::size_t c = 0; c < x.edges.size(); ++c) {
        a.at(vid.at(x.edges[c].tail), c) = 1;
        a.at(vid.at(x.edges[c].head), c) = -1;
    }
    return a;
}

/// Edge-by-face matrix of the bounded face cycles, entries +-1 according to
/// whether the edge direction agrees with the cycle orientation.
inline RationalMatrix face_cycle_matrix(const LabeledComplex& x) {
    const auto eid = detail::edge_index(x);
    RationalMatrix c(x.edges.size(), x.faces.size());
    for (std::size_t f = 0; f < x.faces.size(); ++f)
        for (const auto& [tail, head, sign] : detail::face_boundary(x.faces[f])) {
            const auto it = eid.find({tail, head});
            if (it == eid.end()) throw std::logic_error("face without its boundary edge");
            c.at(it->second, f) = sign;
        }
    return c;
}

/// Entry of a differential: zero, or a signed single variable (0-based).
struct SignedVariable {
    int sign = 0;
    std::size_t var = 0;

    bool operator==(const SignedVariable&) const = default;
};

struct MonomialMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SignedVariable> entries;  // row-major

    MonomialMatrix() = default;
    MonomialMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    SignedVariable& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const SignedVariable& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Sign pattern of a differential as a rational matrix, forgetting variables.
inline RationalMatrix sign_pattern(const MonomialMatrix& m) {
    RationalMatrix s(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) s.at(r, c) = m.at(r, c).sign;
    return s;
}

/// Evaluate a differential at an integer point (variable index -> value).
inline RationalMatrix evaluate(const MonomialMatrix& m, const std::vector<Integer>& values) {
    RationalMatrix out(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) {
            const SignedVariable& e = m.at(r, c);
            if (e.sign != 0) out.at(r, c) = Rational(e.sign) * Rational(values.at(e.var));
        }
    return out;
}

/// Exact polynomial check that a o b = 0: coefficients of every degree-2
/// product x_u x_v must cancel in each entry of the composite.
inline bool differentials_compose_to_zero(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.cols != b.rows) throw DomainError("differential composition: dimensions disagree");
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < b.cols; ++c) {
            std::map<std::pair<std::size_t, std::size_t>, int> coeff;
            for (std::size_t k = 0; k < a.cols; ++k) {
                const SignedVariable& u = a.at(r, k);
                const SignedVariable& v = b.at(k, c);
                if (u.sign == 0 || v.sign == 0) continue;
                coeff[std::minmax(u.var, v.var)] += u.sign * v.sign;
            }
            for (const auto& [vars, value] : coeff)
                if (value != 0) return false;
        }
    return true;
}

/// Free complex R <- R^v <- R^e <- R^f carried by a labeled grid complex.
struct CellularFreeComplex {
    std::array<std::size_t, 3> betti{};  // (vertices, edges, faces)
    std::array<int, 3> shifts{};         // generator degrees of the free modules
    std::vector<Monomial> d0;            // vertex labels
    MonomialMatrix d1;
    MonomialMatrix d2;
};

/// Differentials of the cellular free complex. A horizontal edge maps to
/// x_col tail - x_{col+1} head; a vertical edge to x_row tail - x_{row+1}
/// head. A face maps to its boundary edges weighted by the variable shared
/// between the face label and each edge label.
inline CellularFreeComplex boundary_maps(const LabeledComplex& x) {
    const auto vid = detail::vertex_index(x);
    const auto eid = detail::edge_index(x);
    CellularFreeComplex c;
    const int top = x.top_label.degree();
    c.betti = {x.vertices.size(), x.edges.size(), x.faces.size()};
    c.shifts = {top - 2, top - 1, top};

    c.d0.reserve(x.vertices.size());
    for (const GridVertex& v : x.vertices) c.d0.push_back(x.vertex_label(v));

    c.d1 = MonomialMatrix(x.vertices.size(), x.edges.size());
    for (std::size_t col = 0; col < x.edges.size(); ++col) {
        const GridEdge& e = x.edges[col];
        if (e.kind == EdgeKind::horizontal) {
            c.d1.at(vid.at(e.tail), col) = {+1, static_cast<std::size_t>(e.tail.col) - 1};
            c.d1.at(vid.at(e.head), col) = {-1, static_cast<std::size_t>(e.head.col) - 1};
        } else {
            c.d1.at(vid.at(e.tail), col) = {+1, static_cast<std::size_t>(e.tail.row) - 1};
            c.d1.at(vid.at(e.head), col) = {-1, static_cast<std::size_t>(e.head.row) - 1};
        }
    }

    c.d2 = MonomialMatrix(x.edges.size(), x.faces.size());
    for (std::size_t col = 0; col < x.faces.size(); ++col) {
        const int i = x.faces[col].corner.row, j = x.faces[col].corner.col;
        struct Term {
            GridVertex tail, head;
            int sign;
            int var;  // 1-based variable of the coefficient
        };
        const std::array<Term, 4> terms{{
            {{i, j}, {i, j + 1}, +1, i},              // x_i on the top edge
            {{i, j + 1}, {i + 1, j + 1}, +1, j + 1},  // x_{j+1} on the right edge
            {{i + 1, j}, {i + 1, j + 1}, -1, i + 1},  // x_{i+1} on the bottom edge
            {{i, j}, {i + 1, j}, -1, j},              // x_j on the left edge
        }};
        for (const Term& t : terms) {
            const auto it = eid.find({t.tail, t.head});
            if (it == eid.end()) throw std::logic_error("face without its boundary edge");
            c.d2.at(it->second, col) = {t.sign, static_cast<std::size_t>(t.var) - 1};
        }
    }

    if (!differentials_compose_to_zero(c.d1, c.d2))
        throw std::logic_error("cellular differentials do not compose to zero");
    return c;
}

/// Subcomplex of cells whose labels divide the bound.
inline LabeledComplex restrict_complex(const LabeledComplex& x, const Monomial& bound) {
    if (bound.ambient() != x.ambient)
        throw DomainError("restriction bound lives in the wrong ambient");
    LabeledComplex sub(x.ambient, x.top_label);
    std::set<GridVertex> kept;
    for (const GridVertex& v : x.vertices)
        if (x.vertex_label(v).divides(bound)) {
            sub.vertices.push_back(v);
            kept.insert(v);
        }
    std::set<std::pair<GridVertex, GridVertex>> kept_edges;
    for (const GridEdge& e : x.edges)
        if (x.edge_label(e).divides(bound)) {
            if (!kept.contains(e.tail) || !kept.contains(e.head))
                throw std::logic_error("restriction dropped an edge endpoint");
            sub.edges.push_back(e);
            kept_edges.emplace(e.tail, e.head);
        }
    for (const GridFace& f : x.faces)
        if (x.face_label().divides(bound)) {
            for (const auto& [tail, head, sign] : detail::face_boundary(f))
                if (!kept_edges.contains({tail, head}))
                    throw std::logic_error("restriction dropped a face boundary edge");
            sub.faces.push_back(f);
        }
    return sub;
}

/// Reduced rational homology of the complex vanishes in every dimension.
/// The empty face sits in dimension -1; a void complex counts as acyclic.
inline bool is_acyclic(const LabeledComplex& x) {
    const std::size_t v = x.vertices.size();
    const std::size_t e = x.edges.size();
    const std::size_t f = x.faces.size();
    if (v == 0) {
        if (e != 0 || f != 0) throw std::logic_error("cells without vertices");
        return true;
    }
    const std::size_t rank_a = rank(incidence_matrix(x));
    const std::size_t rank_c = rank(face_cycle_matrix(x));
    // H~0 = (v - 1) - rank A, H~1 = (e - rank A) - rank C, H~2 = f - rank C;
    // the augmentation to the empty face is onto, so H~(-1) = 0.
    return v - 1 == rank_a && e == rank_a + rank_c && f == rank_c;
}

/// All distinct restriction bounds: the lcm closure of the vertex labels,
/// together with m_I/x_i and m_I themselves. Restricting at any multidegree
/// reproduces the subcomplex at one of these bounds.
inline std::vector<Monomial> label_lcm_closure(const LabeledComplex& x) {
    std::set<std::vector<int>> seen;
    std::vector<Monomial> frontier;
    for (const GridVertex& v : x.vertices) {
        Monomial l = x.vertex_label(v);
        if (seen.insert(l.exponents()).second) frontier.push_back(std::move(l));
    }
    std::vector<Monomial> closure = frontier;
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const Monomial& a : closure)
            for (const Monomial& b : frontier) {
                Monomial l = lcm(a, b);
                if (seen.insert(l.exponents()).second) next.push_back(std::move(l));
            }
        for (Monomial& m : next) closure.push_back(m);
        frontier = std::move(next);
    }
    for (std::size_t i = 0; i < x.ambient; ++i) {
        std::vector<int> e = x.top_label.exponents();
        if (e[i] == 0) continue;
        --e[i];
        Monomial l{std::move(e)};
        if (seen.insert(l.exponents()).second) closure.push_back(std::move(l));
    }
    if (seen.insert(x.top_label.exponents()).second) closure.push_back(x.top_label);
    std::sort(closure.begin(), closure.end(), MonomialOrder{});
    return closure;
}

struct ResolutionSummary {
    std::array<std::size_t, 3> betti{};
    std::array<int, 3> shifts{};
    int regularity = 0;
    int projective_dimension = 0;
    bool is_linear = false;

    bool operator==(const ResolutionSummary&) const = default;
};

namespace detail {

inline std::string exponents_string(const Monomial& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.ambient(); ++i) {
        if (i) s += ",";
        s += std::to_string(m.exponent(i));
    }
    return s + ")";
}

} // namespace detail

/// Full verification that the cellular free complex resolves the LCM-dual
/// minimally: exact and substituted composition to zero, sign patterns equal
/// to the incidence and face cycle matrices, the two rank identities, the
/// Euler face count, acyclicity of every distinct restriction, and absence
/// of unit entries in d1 and d2. Throws VerificationError naming the first
/// failing check.
inline ResolutionSummary verify_resolution(const Partition& lambda) {
    const LabeledComplex x = build_complex(lambda);
    const CellularFreeComplex c = boundary_maps(x);
    const std::size_t v = x.vertices.size(), e = x.edges.size(), f = x.faces.size();

    if (!differentials_compose_to_zero(c.d1, c.d2))
        throw VerificationError("d1*d2 != 0 symbolically");
    // distinct primes per variable; the ambient stays in the single digits
    static const int prime_table[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    std::vector<Integer> primes;
    for (std::size_t i = 0; i < x.ambient; ++i)
        primes.push_back(prime_table[i % std::size(prime_table)]);
    if (!compose_is_zero(evaluate(c.d1, primes), evaluate(c.d2, primes)))
        throw VerificationError("d1*d2 != 0 after prime substitution");

    const RationalMatrix a = incidence_matrix(x);
    const RationalMatrix cf = face_cycle_matrix(x);
    if (sign_pattern(c.d1) != a)
        throw VerificationError("sign pattern of d1 differs from the incidence matrix");
    if (sign_pattern(c.d2) != cf)
        throw VerificationError("sign pattern of d2 differs from the face cycle matrix");
    if (f != e - v + 1) throw VerificationError("face count violates Euler's relation");
    if (rank(a) != v - 1) throw VerificationError("incidence rank is not v - 1");
    if (rank(cf) != e - v + 1) throw VerificationError("face cycle rank is not e - v + 1");

    // minimality: every nonzero entry of d1 and d2 must be a genuine variable,
    // never a unit constant
    for (const MonomialMatrix* dm : {&c.d1, &c.d2})
        for (const SignedVariable& entry : dm->entries)
            if (entry.sign != 0 &&
                (entry.var >= x.ambient || x.top_label.exponent(entry.var) < 1))
                throw VerificationError("unit entry in a differential");

    for (const Monomial& b : label_lcm_closure(x))
        if (!is_acyclic(restrict_complex(x, b)))
            throw VerificationError("subcomplex at bound " + detail::exponents_string(b) +
                                    " is not acyclic");

    ResolutionSummary s;
    s.betti = c.betti;
    s.shifts = c.shifts;
    s.regularity = x.top_label.degree() - 3;
    s.projective_dimension = (v > 0) + (e > 0) + (f > 0);
    s.is_linear = true;  // one shift per homological step, stepping by one
    return s;
}

/// Closed-form Betti numbers. beta3's formula can dip below zero for
/// degenerate partitions; the value is clamped at the true face count floor
/// and the clamping is reported.
struct BettiFormulaValues {
    std::array<long, 3> betti{};
    bool beta3_clamped = false;

    bool operator==(const BettiFormulaValues&) const = default;
};

inline BettiFormulaValues betti_formulas(const Partition& lambda) {
    const long m = static_cast<long>(lambda.rows());
    const long total = lambda.sum();
    const long tail = total - lambda.cols();  // lambda_2 + ... + lambda_m
    BettiFormulaValues out;
    out.betti[0] = total - m * (m - 1) / 2;
    out.betti[1] = lambda.cols() + 2 * tail - m * m;
    const long beta3 = tail - m * (m + 1) / 2 + 1;
    out.beta3_clamped = beta3 < 0;
    out.betti[2] = std::max(beta3, 0L);
    return out;
}

/// Checks the rewritten Betti formulas beta1 = mu, beta2 = 2 mu - g - n,
/// beta3 = mu - g - n + 1 against the generator count and the computed
/// height of the strongly stable ideal.
inline bool betti_identities(const Partition& lambda) {
    const MonomialIdeal ideal = strongly_stable_from_partition(lambda);
    const long mu = static_cast<long>(ideal.generators().size());
    const long g = static_cast<long>(height(ideal).height);
    const long n = lambda.cols();
    const BettiFormulaValues f = betti_formulas(lambda);
    if (g != static_cast<long>(lambda.rows())) return false;
    return f.betti[0] == mu && f.betti[1] == 2 * mu - g - n &&
           f.betti[2] == std::max(mu - g - n + 1, 0L);
}

/// One entry of the multigraded Betti table of R/I.
struct BettiTableEntry {
    int index = 0;  // homological position, 1 = generators
    Monomial degree;
    std::size_t rank = 0;

    bool operator==(const BettiTableEntry&) const = default;
};

inline std::size_t oracle_scale_limit() {
    if (const char* env = std::getenv("MONOMIDEAL_MAX_SCALE")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 15;
}

/// Independent multigraded Betti oracle: for every multidegree b in the lcm
/// lattice of the generators, the rank of the (i-2)nd reduced homology of
/// the upper Koszul complex { squarefree tau : x^b / x^tau in I } equals
/// beta_{i,b}(R/I). Entirely separate from the grid complex machinery; only
/// the exact rank routine is shared.
inline std::vector<BettiTableEntry> multigraded_betti_oracle(
    const MonomialIdeal& ideal, std::size_t max_generators = oracle_scale_limit()) {
    if (ideal.is_zero()) throw DomainError("betti oracle needs a nonzero ideal");
    if (ideal.generators().size() > max_generators)
        throw DomainError("betti oracle scale guard exceeded (" +
                          std::to_string(ideal.generators().size()) + " generators > " +
                          std::to_string(max_generators) +
                          "); raise MONOMIDEAL_MAX_SCALE to override");

    // lcm lattice of the generators
    std::set<std::vector<int>> seen;
    std::vector<Monomial> lattice, frontier;
    for (const Monomial& g : ideal.generators())
        if (seen.insert(g.exponents()).second) frontier.push_back(g);
    lattice = frontier;
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const Monomial& a : lattice)
            for (const Monomial& b : frontier) {
                Monomial l = lcm(a, b);
                if (seen.insert(l.exponents()).second) next.push_back(std::move(l));
            }
        for (Monomial& m : next) lattice.push_back(m);
        frontier = std::move(next);
    }
    std::sort(lattice.begin(), lattice.end(), MonomialOrder{});

    std::vector<BettiTableEntry> table;
    for (const Monomial& b : lattice) {
        const std::vector<std::size_t> support = b.support();
        const int dim_cap = static_cast<int>(support.size());
        // faces of the upper Koszul complex, by dimension (|tau| - 1)
        std::map<int, std::vector<std::vector<std::size_t>>> faces;
        const std::size_t subsets = std::size_t{1} << support.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<std::size_t> tau;
            std::vector<int> exps = b.exponents();
            for (std::size_t k = 0; k < support.size(); ++k)
                if (mask >> k & 1) {
                    tau.push_back(support[k]);
                    --exps[support[k]];
                }
            if (ideal.contains(Monomial(std::move(exps))))
                faces[static_cast<int>(tau.size()) - 1].push_back(std::move(tau));
        }
        if (!faces.contains(-1)) continue;  // x^b itself is outside the ideal

        std::map<int, std::size_t> boundary_rank;
        for (int k = 0; k < dim_cap; ++k) {
            const auto rows_it = faces.find(k - 1);
            const auto cols_it = faces.find(k);
            if (cols_it == faces.end() || rows_it == faces.end()) continue;
            const auto& rows = rows_it->second;
            const auto& cols = cols_it->second;
            std::map<std::vector<std::size_t>, std::size_t> row_of;
            for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
            RationalMatrix bd(rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
                    std::vector<std::size_t> sub = cols[c];
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                    bd.at(row_of.at(sub), c) = (drop % 2 == 0) ? 1 : -1;
                }
            boundary_rank[k] = rank(bd);
        }
        for (int k = -1; k < dim_cap; ++k) {
            const auto it = faces.find(k);
            if (it == faces.end()) continue;
            const std::size_t dim_ck = it->second.size();
            const std::size_t out_rank = boundary_rank.contains(k) ? boundary_rank[k] : 0;
            const std::size_t in_rank = boundary_rank.contains(k + 1) ? boundary_rank[k + 1] : 0;
            const std::size_t homology = dim_ck - out_rank - in_rank;
            if (homology > 0) table.push_back({k + 2, b, homology});
        }
    }
    return table;
}

inline std::map<int, std::size_t> oracle_totals(const std::vector<BettiTableEntry>& table) {
    std::map<int, std::size_t> totals;
    for (const BettiTableEntry& e : table) totals[e.index] += e.rank;
    return totals;
}

inline std::map<int, std::set<int>> oracle_shifts(const std::vector<BettiTableEntry>& table) {
    std::map<int, std::set<int>> shifts;
    for (const BettiTableEntry& e : table) shifts[e.index].insert(e.degree.degree());
    return shifts;
}

} // namespace lcmdual
