#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcmdual/errors.hpp"
#include "lcmdual/monomial.hpp"

namespace lcmdual {

/// Partition lambda_1 >= ... >= lambda_m >= 1. Row i of the associated
/// Ferrers diagram has lambda_i cells; the column count n is lambda_1.
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw DomainError("partition needs at least one part");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw DomainError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw DomainError("partition parts must be weakly decreasing");
        }
    }

    std::size_t rows() const { return parts_.size(); }        // m
    int cols() const { return parts_.front(); }               // n = lambda_1
    int part(std::size_t i) const { return parts_[i]; }       // 0-based row
    const std::vector<int>& parts() const { return parts_; }

    int sum() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// lambda_i >= i for every row, equivalently lambda_m >= m. Exactly these
    /// partitions admit the staircase shift mu = (0, 1, ..., m-1).
    bool admits_staircase() const {
        return parts_.back() >= static_cast<int>(parts_.size());
    }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Shift vector 0 <= mu_1 <= ... <= mu_m < lambda_m for a generalized
/// Ferrers ideal.
class Shift {
public:
    Shift(std::vector<int> mu, const Partition& lambda) : mu_(std::move(mu)) {
        if (mu_.size() != lambda.rows())
            throw DomainError("shift length must match the partition row count");
        for (std::size_t i = 0; i < mu_.size(); ++i) {
            if (mu_[i] < 0) throw DomainError("shift entries must be non-negative");
            if (i > 0 && mu_[i] < mu_[i - 1])
                throw DomainError("shift entries must be weakly increasing");
        }
        if (mu_.back() >= lambda.part(lambda.rows() - 1))
            throw DomainError("shift must stay strictly below the last part");
    }

    static Shift staircase(const Partition& lambda) {
        std::vector<int> mu(lambda.rows());
        for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = static_cast<int>(i);
        return Shift(std::move(mu), lambda);
    }

    int at(std::size_t i) const { return mu_[i]; }
    const std::vector<int>& values() const { return mu_; }
    int sum() const {
        int s = 0;
        for (int v : mu_) s += v;
        return s;
    }

private:
    std::vector<int> mu_;
};

/// Bipartite graph on x_1..x_m and y_1..y_n; edges are 1-based (i, j) pairs.
struct BipartiteGraph {
    std::size_t x_count = 0;
    std::size_t y_count = 0;
    std::set<std::pair<int, int>> edges;

    void add_edge(int i, int j) {
        if (i < 1 || i > static_cast<int>(x_count) || j < 1 || j > static_cast<int>(y_count))
            throw DomainError("bipartite edge endpoint out of range");
        edges.emplace(i, j);
    }
};

inline BipartiteGraph ferrers_graph(const Partition& lambda) {
    BipartiteGraph g;
    g.x_count = lambda.rows();
    g.y_count = static_cast<std::size_t>(lambda.cols());
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            g.add_edge(static_cast<int>(i) + 1, j);
    return g;
}

/// Edge ideal over the joint ambient {x_1..x_m, y_1..y_n}, x-variables first.
inline MonomialIdeal edge_ideal(const BipartiteGraph& g) {
    const std::size_t ambient = g.x_count + g.y_count;
    std::vector<Monomial> gens;
    gens.reserve(g.edges.size());
    for (const auto& [i, j] : g.edges)
        gens.push_back(Monomial::variable(ambient, static_cast<std::size_t>(i) - 1) *
                       Monomial::variable(ambient, g.x_count + static_cast<std::size_t>(j) - 1));
    return MonomialIdeal::from_generators(ambient, std::move(gens));
}

inline MonomialIdeal ferrers_ideal(const Partition& lambda) {
    return edge_ideal(ferrers_graph(lambda));
}

/// Edge ideal of the complement graph, over all vertex pairs of the ambient
/// (x-x and y-y pairs included). The input ideal is read as a simple graph:
/// every generator must be squarefree of degree two.
inline MonomialIdeal complement_edge_ideal(const MonomialIdeal& graph) {
    const std::size_t n = graph.ambient();
    for (const Monomial& g : graph.generators())
        if (!g.is_squarefree() || g.degree() != 2)
            throw DomainError("complement: input must be a squarefree degree-2 edge ideal");
    std::vector<Monomial> gens;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            Monomial pair = Monomial::variable(n, u) * Monomial::variable(n, v);
            if (!graph.contains(pair)) gens.push_back(std::move(pair));
        }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

inline MonomialIdeal complement_edge_ideal(const BipartiteGraph& g) {
    return complement_edge_ideal(edge_ideal(g));
}

/// Alexander dual of a squarefree ideal: the intersection of the variable
/// primes spanned by each generator's support. The empty intersection (zero
/// ideal input) is the unit ideal.
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.ambient();
    for (const Monomial& g : ideal.generators())
        if (!g.is_squarefree())
            throw DomainError("alexander dual requires a squarefree ideal");
    MonomialIdeal result = MonomialIdeal::unit(n);
    for (const Monomial& g : ideal.generators()) {
        std::vector<Monomial> prime;
        for (std::size_t v : g.support()) prime.push_back(Monomial::variable(n, v));
        result = intersect(result, MonomialIdeal::from_generators(n, std::move(prime)));
    }
    return result;
}

/// Prime component spanned by a set of variables of the joint ambient.
struct PrimeComponent {
    std::vector<std::size_t> variables;  // sorted, 0-based joint indices

    bool operator==(const PrimeComponent&) const = default;
};

inline MonomialIdeal component_ideal(const PrimeComponent& c, std::size_t ambient) {
    std::vector<Monomial> gens;
    gens.reserve(c.variables.size());
    for (std::size_t v : c.variables) gens.push_back(Monomial::variable(ambient, v));
    return MonomialIdeal::from_generators(ambient, std::move(gens));
}

inline MonomialIdeal intersect_components(const std::vector<PrimeComponent>& comps,
                                          std::size_t ambient) {
    MonomialIdeal result = MonomialIdeal::unit(ambient);
    for (const PrimeComponent& c : comps) result = intersect(result, component_ideal(c, ambient));
    return result;
}

/// Closed-form irredundant primary decomposition of the LCM-dual of a Ferrers
/// ideal: all (x_i, x_j), all (y_i, y_j), and (x_i, y_j) for every non-edge.
/// The column range is n = lambda_1, so there are no non-edges in row 1.
inline std::vector<PrimeComponent> ferrers_dual_primary_decomposition(const Partition& lambda) {
    const std::size_t m = lambda.rows();
    const std::size_t n = static_cast<std::size_t>(lambda.cols());
    std::vector<PrimeComponent> comps;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) comps.push_back(PrimeComponent{{i, j}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) comps.push_back(PrimeComponent{{m + i, m + j}});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = static_cast<std::size_t>(lambda.part(i)); j < n; ++j)
            comps.push_back(PrimeComponent{{i, m + j}});
    return comps;
}

/// Generators x_i y_j with mu_i < j <= lambda_i. Requires n >= m.
inline MonomialIdeal generalized_ferrers_ideal(const Partition& lambda, const Shift& mu) {
    if (lambda.cols() < static_cast<int>(lambda.rows()))
        throw DomainError("generalized Ferrers ideal requires n >= m");
    const std::size_t m = lambda.rows();
    const std::size_t ambient = m + static_cast<std::size_t>(lambda.cols());
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < m; ++i)
        for (int j = mu.at(i) + 1; j <= lambda.part(i); ++j)
            gens.push_back(Monomial::variable(ambient, i) *
                           Monomial::variable(ambient, m + static_cast<std::size_t>(j) - 1));
    return MonomialIdeal::from_generators(ambient, std::move(gens));
}

/// Substitute y_j by x_j over k = max(m, n) variables and minimalize.
inline MonomialIdeal specialize(const MonomialIdeal& ideal, std::size_t x_count,
                                std::size_t y_count) {
    if (ideal.ambient() != x_count + y_count)
        throw DomainError("specialize: ambient must split into the declared x and y blocks");
    const std::size_t k = std::max(x_count, std::max<std::size_t>(y_count, 1));
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        std::vector<int> e(k, 0);
        for (std::size_t i = 0; i < x_count; ++i) e[i] += g.exponent(i);
        for (std::size_t j = 0; j < y_count; ++j) e[j] += g.exponent(x_count + j);
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal::from_generators(k, std::move(gens));
}

/// Specialization of the generalized Ferrers ideal with the staircase shift
/// mu = (0, 1, ..., m-1): a strongly stable ideal generated in degree two,
/// with generators x_i x_j for i <= j <= lambda_i.
inline MonomialIdeal strongly_stable_from_partition(const Partition& lambda) {
    if (!lambda.admits_staircase())
        throw DomainError("strongly stable specialization requires lambda_m >= m");
    return specialize(generalized_ferrers_ideal(lambda, Shift::staircase(lambda)),
                      lambda.rows(), static_cast<std::size_t>(lambda.cols()));
}

/// Recover lambda from a strongly stable ideal generated in degree two:
/// lambda_i = max{ j : x_i x_j in I }.
inline Partition partition_from_strongly_stable(const MonomialIdeal& ideal) {
    const auto degree = is_equigenerated(ideal);
    if (!degree || *degree != 2)
        throw DomainError("expected an ideal generated in degree two");
    if (!is_strongly_stable(ideal)) throw DomainError("expected a strongly stable ideal");
    const std::size_t n = ideal.ambient();
    std::vector<int> parts;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 2;
        if (!ideal.contains(Monomial(e))) break;
        int last = 0;
        for (std::size_t j = i; j < n; ++j) {
            std::vector<int> f(n, 0);
            ++f[i];
            ++f[j];
            if (ideal.contains(Monomial(std::move(f)))) last = static_cast<int>(j) + 1;
        }
        parts.push_back(last);
    }
    return Partition(std::move(parts));
}

} // namespace lcmdual
