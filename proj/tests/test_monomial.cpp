#include <catch2/catch_amalgamated.hpp>

#include "lcmdual/monomial.hpp"

#include "support/oracles.hpp"

using namespace lcmdual;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.push_back(mono(std::move(g)));
    return MonomialIdeal::from_generators(n, std::move(ms));
}

} // namespace

TEST_CASE("minimalize removes multiples and duplicates") {
    // {x^2, x^2 y, y} -> (x^2, y)
    REQUIRE(ideal(2, {{2, 0}, {2, 1}, {0, 1}}) == ideal(2, {{2, 0}, {0, 1}}));
    // already minimal
    const auto i = ideal(2, {{3, 0}, {2, 2}, {0, 4}});
    REQUIRE(i.generators().size() == 3);
    // empty list is the zero ideal
    REQUIRE(ideal(3, {}).is_zero());
    // wrong ambient rejected
    REQUIRE_THROWS_AS(MonomialIdeal::from_generators(2, {mono({1, 0, 0})}), DomainError);
}

TEST_CASE("canonical generator order is degree then x1-major") {
    const auto i = ideal(2, {{0, 4}, {1, 2}, {3, 0}});
    REQUIRE(i.generators() == std::vector<Monomial>{mono({3, 0}), mono({1, 2}), mono({0, 4})});
}

TEST_CASE("lcm of an ideal") {
    REQUIRE(lcm_of_ideal(ideal(2, {{3, 0}, {2, 2}, {0, 4}})) == mono({3, 4}));
    REQUIRE(lcm_of_ideal(ideal(3, {{1, 2, 1}})) == mono({1, 2, 1}));
    REQUIRE_THROWS_AS(lcm_of_ideal(MonomialIdeal(2)), DomainError);
}

TEST_CASE("lcm dual of the running example") {
    const auto i = ideal(2, {{3, 0}, {2, 2}, {0, 4}});
    REQUIRE(lcm_dual(i) == ideal(2, {{3, 0}, {1, 2}, {0, 4}}));
}

TEST_CASE("lcm dual of the height-1 example and its double dual") {
    const auto i = ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    const auto d = lcm_dual(i);
    REQUIRE(d == ideal(3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    REQUIRE(lcm_dual(d) == ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    REQUIRE(lcm_dual(d) != i);
    REQUIRE_THROWS_AS(lcm_dual(MonomialIdeal(2)), DomainError);
}

TEST_CASE("dual of a principal ideal is the unit ideal") {
    REQUIRE(lcm_dual(ideal(2, {{1, 0}})).is_unit());
}

TEST_CASE("product of ideals") {
    const auto i = ideal(2, {{3, 0}, {1, 1}, {0, 2}});
    REQUIRE(product(i, i) == ideal(2, {{6, 0}, {4, 1}, {2, 2}, {1, 3}, {0, 4}}));
    REQUIRE(product(i, MonomialIdeal::unit(2)) == i);
    const auto d = lcm_dual(i);
    REQUIRE(product(d, d) == ideal(2, {{6, 0}, {5, 1}, {3, 2}, {2, 3}, {0, 4}}));
    REQUIRE_THROWS_AS(product(i, MonomialIdeal::unit(3)), DomainError);
}

TEST_CASE("product law fails for the non-equigenerated example") {
    const auto i = ideal(2, {{3, 0}, {1, 1}, {0, 2}});
    const auto dual_sq = product(lcm_dual(i), lcm_dual(i));
    const auto sq_dual = lcm_dual(product(i, i));
    REQUIRE(dual_sq != sq_dual);
    const auto witness = mono({3, 2});
    REQUIRE(dual_sq.contains(witness));
    REQUIRE_FALSE(sq_dual.contains(witness));
    // strict containment: the dual of the square sits inside the square of the dual
    for (const Monomial& g : sq_dual.generators()) REQUIRE(dual_sq.contains(g));
}

TEST_CASE("height certificates") {
    const auto h1 = height(ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
    REQUIRE(h1 == HeightCertificate{1, {0}});
    const auto h2 = height(ideal(2, {{3, 0}, {2, 2}, {0, 4}}));
    REQUIRE(h2 == HeightCertificate{2, {0, 1}});
    const auto maximal = ideal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    REQUIRE(height(maximal).height == 4);
    REQUIRE_THROWS_AS(height(MonomialIdeal(2)), DomainError);
    REQUIRE_THROWS_AS(height(MonomialIdeal::unit(2)), DomainError);
}

TEST_CASE("equigeneration detection") {
    REQUIRE(is_equigenerated(ideal(2, {{2, 0}, {1, 1}, {0, 2}})) == 2);
    REQUIRE_FALSE(is_equigenerated(ideal(2, {{3, 0}, {1, 1}, {0, 2}})).has_value());
    REQUIRE(is_equigenerated(ideal(3, {{1, 2, 0}})) == 3);
}

TEST_CASE("strong stability") {
    REQUIRE(is_strongly_stable(ideal(4, {{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                         {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 2, 0}})));
    REQUIRE_FALSE(is_strongly_stable(ideal(3, {{0, 1, 1}})));
    REQUIRE(is_strongly_stable(ideal(3, {{1, 0, 0}})));
}

TEST_CASE("membership") {
    const auto i = ideal(2, {{3, 0}, {1, 1}, {0, 2}});
    REQUIRE_FALSE(lcm_dual(product(i, i)).contains(mono({3, 2})));
    for (const Monomial& g : i.generators()) REQUIRE(i.contains(g));
    REQUIRE_FALSE(i.contains(Monomial::one(2)));
    REQUIRE(MonomialIdeal::unit(2).contains(Monomial::one(2)));
    REQUIRE_FALSE(MonomialIdeal(2).contains(mono({5, 5})));
    REQUIRE_THROWS_AS(i.contains(Monomial::one(3)), DomainError);
}

TEST_CASE("intersections") {
    REQUIRE(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
    REQUIRE(intersect(ideal(3, {{1, 0, 0}, {0, 1, 0}}), ideal(3, {{1, 0, 0}, {0, 0, 1}})) ==
            ideal(3, {{1, 0, 0}, {0, 1, 1}}));
    REQUIRE(intersect(ideal(2, {{1, 0}}), MonomialIdeal(2)).is_zero());
}

TEST_CASE("dual generators form an antichain on random ideals") {
    testsupport::Rng rng(31415);
    for (int trial = 0; trial < 200; ++trial) {
        const auto i = testsupport::random_ideal(rng);
        const auto duals = lcm_dual_generators(i);
        for (std::size_t a = 0; a < duals.size(); ++a)
            for (std::size_t b = 0; b < duals.size(); ++b)
                if (a != b) REQUIRE_FALSE(duals[a].divides(duals[b]));
        REQUIRE(lcm_dual(i).generators().size() == i.generators().size());
    }
}

TEST_CASE("the dual preserves the ideal lcm when the height is at least 2") {
    testsupport::Rng rng(2718);
    int seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto i = testsupport::random_ideal(rng);
        if (!i.is_proper() || height(i).height < 2) continue;
        ++seen;
        REQUIRE(lcm_of_ideal(lcm_dual(i)) == lcm_of_ideal(i));
        REQUIRE(lcm_dual(lcm_dual(i)) == i);
    }
    REQUIRE(seen > 50);
}

TEST_CASE("height-1 samples always break the double dual") {
    testsupport::Rng rng(1618);
    int seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto i = testsupport::random_ideal(rng);
        if (!i.is_proper() || height(i).height != 1) continue;
        ++seen;
        REQUIRE(lcm_dual(lcm_dual(i)) != i);
    }
    REQUIRE(seen > 20);
}

TEST_CASE("product law for equigenerated ideals") {
    testsupport::Rng rng(60221023);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto i = testsupport::random_equigenerated(rng, n, rng.uniform(1, 4), rng.uniform(1, 6));
        const auto j = testsupport::random_equigenerated(rng, n, rng.uniform(1, 4), rng.uniform(1, 6));
        REQUIRE(lcm_dual(product(i, j)) == product(lcm_dual(i), lcm_dual(j)));
        const auto di = is_equigenerated(i), dj = is_equigenerated(j);
        REQUIRE(is_equigenerated(product(i, j)) == *di + *dj);
    }
}
