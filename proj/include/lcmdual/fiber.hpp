#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lcmdual/errors.hpp"
#include "lcmdual/ferrers.hpp"
#include "lcmdual/monomial.hpp"
#include "lcmdual/rational_matrix.hpp"

namespace lcmdual {

/// Binomial relation T_beta - T_alpha among generator powers: two distinct
/// r-element index multisets whose generator products coincide. Stored with
/// the lexicographically smaller multiset first; indices are 0-based.
struct RelationPair {
    std::vector<int> lhs;
    std::vector<int> rhs;

    RelationPair(std::vector<int> a, std::vector<int> b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (b < a) std::swap(a, b);
        lhs = std::move(a);
        rhs = std::move(b);
    }

    int degree() const { return static_cast<int>(lhs.size()); }

    auto operator<=>(const RelationPair&) const = default;
};

/// All relations of degree r among an ordered generator list, by exhaustive
/// enumeration of the r-element index multisets grouped by product.
inline std::set<RelationPair> toric_relations(const std::vector<Monomial>& gens, int r) {
    if (r < 1) throw DomainError("relation degree must be at least 1");
    std::set<RelationPair> out;
    if (gens.empty()) return out;

    std::map<std::vector<int>, std::vector<std::vector<int>>> by_product;
    const int count = static_cast<int>(gens.size());
    std::vector<int> multiset(static_cast<std::size_t>(r), 0);
    while (true) {
        Monomial p = Monomial::one(gens.front().ambient());
        for (int i : multiset) p = p * gens[static_cast<std::size_t>(i)];
        by_product[p.exponents()].push_back(multiset);
        // next non-decreasing index tuple
        int pos = r - 1;
        while (pos >= 0 && multiset[static_cast<std::size_t>(pos)] == count - 1) --pos;
        if (pos < 0) break;
        const int v = multiset[static_cast<std::size_t>(pos)] + 1;
        for (int k = pos; k < r; ++k) multiset[static_cast<std::size_t>(k)] = v;
    }
    for (auto& [prod, sets] : by_product)
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = a + 1; b < sets.size(); ++b)
                out.emplace(sets[a], sets[b]);
    return out;
}

inline std::set<RelationPair> toric_relations(const MonomialIdeal& ideal, int r) {
    if (ideal.is_zero()) throw DomainError("toric relations need a nonzero ideal");
    return toric_relations(ideal.generators(), r);
}

/// Checks that the defining relations of the fiber rings of I and of its
/// LCM-dual coincide through degree r_max, pairing generator i of I with
/// m_I/f_i positionally (the dual list is not re-sorted). Hypothesis
/// violations raise DomainError; a genuine mismatch returns false.
inline bool verify_fiber_isomorphism(const MonomialIdeal& ideal, int r_max) {
    if (!is_equigenerated(ideal))
        throw DomainError("fiber isomorphism hypothesis: ideal must be equigenerated");
    if (height(ideal).height < 2)
        throw DomainError("fiber isomorphism hypothesis: height must be at least 2");
    const std::vector<Monomial> dual = lcm_dual_generators(ideal);
    for (int r = 1; r <= r_max; ++r)
        if (toric_relations(ideal.generators(), r) != toric_relations(dual, r)) return false;
    return true;
}

/// Krull dimension of the fiber ring of an equigenerated ideal: the rank of
/// the generator exponent matrix over the rationals.
inline std::size_t fiber_dimension(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("fiber dimension needs a nonzero ideal");
    if (!is_equigenerated(ideal))
        throw DomainError("fiber dimension via exponent rank needs an equigenerated ideal");
    const std::size_t n = ideal.ambient();
    RationalMatrix m(ideal.generators().size(), n);
    for (std::size_t r = 0; r < ideal.generators().size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = ideal.generators()[r].exponent(c);
    return rank(m);
}

/// 2x2 minor data of the symmetrized generator tableau: the four matrix
/// positions, stored canonically with row <= column.
struct SymmetricMinor {
    std::pair<int, int> top_left;      // (i, j)
    std::pair<int, int> top_right;     // (i, l)
    std::pair<int, int> bottom_left;   // (k, j)
    std::pair<int, int> bottom_right;  // (k, l)
};

/// The nonzero positions of the symmetric matrix S_lambda together with every
/// 2x2 minor supported entirely on nonzero positions, and the binomial
/// relations those minors impose on the generators.
struct SymmetricPresentation {
    Partition lambda;
    std::set<std::pair<int, int>> positions;  // 1-based, i <= j
    std::vector<SymmetricMinor> minors;
    std::set<RelationPair> relations;  // indices into the canonical generators
};

inline SymmetricPresentation symmetric_minors(const Partition& lambda) {
    if (!lambda.admits_staircase())
        throw DomainError("symmetric presentation requires lambda_m >= m");
    const int m = static_cast<int>(lambda.rows());
    const int n = lambda.cols();

    SymmetricPresentation pres{lambda, {}, {}, {}};
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= lambda.part(static_cast<std::size_t>(i) - 1); ++j)
            pres.positions.emplace(i, j);

    const MonomialIdeal ideal = strongly_stable_from_partition(lambda);
    auto canon = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    auto gen_index = [&](std::pair<int, int> pos) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        ++e[static_cast<std::size_t>(pos.first) - 1];
        ++e[static_cast<std::size_t>(pos.second) - 1];
        const Monomial mon{std::move(e)};
        const auto& gens = ideal.generators();
        const auto it = std::find(gens.begin(), gens.end(), mon);
        if (it == gens.end()) throw std::logic_error("position without a generator");
        return static_cast<int>(it - gens.begin());
    };

    // every 2x2 submatrix of the full n x n symmetric matrix whose four
    // entries are all nonzero; duplicates collapse through the relation pair
    for (int a = 1; a <= n; ++a)
        for (int c = a + 1; c <= n; ++c)
            for (int b = 1; b <= n; ++b)
                for (int d = b + 1; d <= n; ++d) {
                    const auto p_ab = canon(a, b), p_cd = canon(c, d);
                    const auto p_ad = canon(a, d), p_cb = canon(c, b);
                    if (!pres.positions.contains(p_ab) || !pres.positions.contains(p_cd) ||
                        !pres.positions.contains(p_ad) || !pres.positions.contains(p_cb))
                        continue;
                    RelationPair rel({gen_index(p_ab), gen_index(p_cd)},
                                     {gen_index(p_ad), gen_index(p_cb)});
                    if (rel.lhs == rel.rhs) continue;
                    if (pres.relations.insert(std::move(rel)).second)
                        pres.minors.push_back(SymmetricMinor{p_ab, p_ad, p_cb, p_cd});
                }
    return pres;
}

} // namespace lcmdual
