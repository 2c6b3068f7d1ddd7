#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "lcmdual/errors.hpp"

namespace lcmdual {

/// Monomial in a fixed ambient set of variables, stored as its exponent vector.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        for (int e : exps_)
            if (e < 0) throw DomainError("monomial exponents must be non-negative");
    }

    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

    static Monomial variable(std::size_t n, std::size_t index) {
        if (index >= n) throw DomainError("variable index out of range");
        std::vector<int> e(n, 0);
        e[index] = 1;
        return Monomial(std::move(e));
    }

    std::size_t ambient() const { return exps_.size(); }
    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    int exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0) s.push_back(i);
        return s;
    }

    bool divides(const Monomial& other) const {
        require_same_ambient(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        require_same_ambient(other);
        std::vector<int> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
        return Monomial(std::move(e));
    }

    /// Exact quotient; the divisor must divide this monomial.
    Monomial divide_by(const Monomial& divisor) const {
        require_same_ambient(divisor);
        std::vector<int> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= divisor.exps_[i];
            if (e[i] < 0) throw DomainError("monomial quotient is not a monomial");
        }
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial&) const = default;

private:
    void require_same_ambient(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw DomainError("monomials live in different ambients");
    }

    std::vector<int> exps_;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.ambient() != b.ambient())
        throw DomainError("lcm: monomials live in different ambients");
    std::vector<int> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.ambient() != b.ambient())
        throw DomainError("gcd: monomials live in different ambients");
    std::vector<int> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

/// Canonical generator order: total degree first, then reverse lexicographic
/// on exponent vectors, so x1-heavy monomials print first within a degree.
inline bool monomial_order(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() > b.exponents();
}

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_order(a, b);
    }
};

/// Monomial ideal with its unique minimal generating set, canonically sorted.
/// The zero ideal has an empty generator list; the unit ideal is generated
/// by the identity monomial. Equality is structural.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t ambient) : ambient_(ambient) {
        if (ambient == 0) throw DomainError("ambient must have at least one variable");
    }

    /// Minimalizes: drops duplicates and every monomial divisible by another,
    /// then sorts canonically.
    static MonomialIdeal from_generators(std::size_t ambient, std::vector<Monomial> gens) {
        MonomialIdeal ideal(ambient);
        for (const Monomial& g : gens)
            if (g.ambient() != ambient)
                throw DomainError("generator does not live in the declared ambient");
        std::sort(gens.begin(), gens.end(), MonomialOrder{});
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (const Monomial& g : gens) {
            bool redundant = false;
            for (const Monomial& h : gens)
                if (h != g && h.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) ideal.gens_.push_back(g);
        }
        return ideal;
    }

    static MonomialIdeal unit(std::size_t ambient) {
        return from_generators(ambient, {Monomial::one(ambient)});
    }

    std::size_t ambient() const { return ambient_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_proper() const { return !is_zero() && !is_unit(); }

    /// Membership: some minimal generator divides m.
    bool contains(const Monomial& m) const {
        if (m.ambient() != ambient_)
            throw DomainError("membership test across different ambients");
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const Monomial& g) { return g.divides(m); });
    }

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::size_t ambient_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t ambient) {
    return MonomialIdeal::from_generators(ambient, std::move(gens));
}

inline bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) {
    return ideal.contains(m);
}

/// lcm of the minimal generators (the componentwise exponent maximum).
inline Monomial lcm_of_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("lcm of the zero ideal is undefined");
    Monomial m = ideal.generators().front();
    for (const Monomial& g : ideal.generators()) m = lcm(m, g);
    return m;
}

/// Dual generators m_I/f_i in the positional order induced by the canonical
/// order of I's generators. These always form an antichain under divisibility:
/// m_I/f | m_I/g would force g | f.
inline std::vector<Monomial> lcm_dual_generators(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("the zero ideal has no dual");
    const Monomial m = lcm_of_ideal(ideal);
    std::vector<Monomial> dual;
    dual.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) dual.push_back(m.divide_by(g));
    return dual;
}

inline MonomialIdeal lcm_dual(const MonomialIdeal& ideal) {
    return MonomialIdeal::from_generators(ideal.ambient(), lcm_dual_generators(ideal));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient())
        throw DomainError("product of ideals in different ambients");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& f : a.generators())
        for (const Monomial& g : b.generators()) gens.push_back(f * g);
    return MonomialIdeal::from_generators(a.ambient(), std::move(gens));
}

/// Intersection of monomial ideals, generated by the pairwise lcms.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient())
        throw DomainError("intersection of ideals in different ambients");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& f : a.generators())
        for (const Monomial& g : b.generators()) gens.push_back(lcm(f, g));
    return MonomialIdeal::from_generators(a.ambient(), std::move(gens));
}

struct HeightCertificate {
    std::size_t height = 0;
    std::vector<std::size_t> witness;  // variable indices of a minimum cover

    bool operator==(const HeightCertificate&) const = default;
};

/// Height of a proper nonzero monomial ideal: the smallest set of variables
/// meeting the support of every generator. Exhaustive search by cardinality;
/// within a cardinality, subsets are visited in lexicographic index order and
/// the first cover found is the witness.
inline HeightCertificate height(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("height requires a nonzero proper ideal");
    const std::size_t n = ideal.ambient();
    std::vector<std::vector<std::size_t>> supports;
    supports.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) supports.push_back(g.support());

    std::vector<std::size_t> subset;
    auto covers = [&](const std::vector<std::size_t>& vars) {
        for (const auto& s : supports) {
            bool hit = false;
            for (std::size_t v : vars)
                if (std::binary_search(s.begin(), s.end(), v)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };
    // enumerate k-subsets of {0..n-1} in lexicographic order
    for (std::size_t k = 1; k <= n; ++k) {
        subset.resize(k);
        for (std::size_t i = 0; i < k; ++i) subset[i] = i;
        while (true) {
            if (covers(subset)) return HeightCertificate{k, subset};
            std::size_t i = k;
            while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    throw std::logic_error("height: no variable cover found for a proper ideal");
}

/// Common degree of the minimal generators, if they share one.
inline std::optional<int> is_equigenerated(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("equigeneration is undefined for the zero ideal");
    const int d = ideal.generators().front().degree();
    for (const Monomial& g : ideal.generators())
        if (g.degree() != d) return std::nullopt;
    return d;
}

/// Exchange property checked on the minimal generators: for each generator f,
/// each variable x_i dividing f, and each j < i, the monomial x_j f / x_i must
/// lie in the ideal. Generators suffice; the exchange then propagates to every
/// monomial of the ideal.
inline bool is_strongly_stable(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("strong stability is undefined for the zero ideal");
    const std::size_t n = ideal.ambient();
    for (const Monomial& g : ideal.generators()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (g.exponent(i) == 0) continue;
            for (std::size_t j = 0; j < i; ++j) {
                std::vector<int> e = g.exponents();
                --e[i];
                ++e[j];
                if (!ideal.contains(Monomial(std::move(e)))) return false;
            }
        }
    }
    return true;
}

} // namespace lcmdual
