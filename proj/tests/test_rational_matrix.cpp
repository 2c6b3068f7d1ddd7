#include <catch2/catch_amalgamated.hpp>

#include "lcmdual/rational_matrix.hpp"

#include "support/oracles.hpp"

using namespace lcmdual;

namespace {

// incidence matrix of the lambda = (4,4,3) grid graph, vertices ordered
// (1,1),(1,2),(1,3),(1,4),(2,2),(2,3),(2,4),(3,3)
const RationalMatrix kIncidence443 = RationalMatrix::from_int_rows({
    {1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 0, 1, 0, 0, 0, 0, 0},
    {0, -1, 1, 0, 1, 0, 0, 0, 0},
    {0, 0, -1, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, -1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, -1, 0, -1, 1, 1},
    {0, 0, 0, 0, 0, -1, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, -1},
});

const RationalMatrix kFaceCycle443 = RationalMatrix::from_int_rows({
    {0, 0}, {1, 0}, {0, 1}, {-1, 0}, {1, -1}, {0, 1}, {-1, 0}, {0, -1}, {0, 0},
});

// the two differentials of the (4,4,3) complex after substituting the
// variables x1..x4 by the primes 2, 3, 5, 7
const RationalMatrix kD1Primes = RationalMatrix::from_int_rows({
    {2, 0, 0, 0, 0, 0, 0, 0, 0},
    {-3, 3, 0, 2, 0, 0, 0, 0, 0},
    {0, -5, 5, 0, 2, 0, 0, 0, 0},
    {0, 0, -7, 0, 0, 2, 0, 0, 0},
    {0, 0, 0, -3, 0, 0, 3, 0, 0},
    {0, 0, 0, 0, -3, 0, -5, 5, 3},
    {0, 0, 0, 0, 0, -3, 0, -7, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, -5},
});

const RationalMatrix kD2Primes = RationalMatrix::from_int_rows({
    {0, 0}, {2, 0}, {0, 2}, {-3, 0}, {5, -5}, {0, 7}, {-3, 0}, {0, -3}, {0, 0},
});

} // namespace

TEST_CASE("rank of the displayed incidence matrix is 7") {
    REQUIRE(rank(kIncidence443) == 7);
}

TEST_CASE("rank of the displayed face cycle matrix is 2") {
    REQUIRE(rank(kFaceCycle443) == 2);
    REQUIRE(kernel_dimension(kFaceCycle443) == 0);
}

TEST_CASE("zero and empty matrices have rank 0") {
    REQUIRE(rank(RationalMatrix(4, 6)) == 0);
    REQUIRE(rank(RationalMatrix(0, 0)) == 0);
    REQUIRE(rank(RationalMatrix(3, 0)) == 0);
    REQUIRE(rank(RationalMatrix(0, 5)) == 0);
}

TEST_CASE("kernel dimension basics") {
    REQUIRE(kernel_dimension(RationalMatrix::identity(3)) == 0);
    REQUIRE(kernel_dimension(RationalMatrix::from_int_rows({{1, 1}})) == 1);
}

TEST_CASE("composition of the substituted differentials vanishes") {
    REQUIRE(compose_is_zero(kD1Primes, kD2Primes));
}

TEST_CASE("compose_is_zero rejects and detects") {
    REQUIRE_FALSE(compose_is_zero(RationalMatrix::identity(2), RationalMatrix::identity(2)));
    REQUIRE(compose_is_zero(kIncidence443, RationalMatrix(9, 4)));
    REQUIRE_THROWS_AS(compose_is_zero(RationalMatrix(2, 3), RationalMatrix(2, 3)), DomainError);
}

TEST_CASE("rational entries are scaled away before elimination") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(1, 4);
    m.at(1, 1) = Rational(1, 5);
    REQUIRE(rank(m) == 2);
    m.at(1, 0) = Rational(5, 2);
    m.at(1, 1) = Rational(5, 3);  // second row = 5 * first row
    REQUIRE(rank(m) == 1);
}

TEST_CASE("rank agrees with naive rational elimination on random matrices") {
    testsupport::Rng rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = testsupport::random_int_matrix(rng, 6, 6, -9, 9);
        REQUIRE(rank(m) == testsupport::naive_rank(m));
    }
}

TEST_CASE("rank is invariant under transposition") {
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 7));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 7));
        const auto m = testsupport::random_int_matrix(rng, rows, cols, -5, 5);
        REQUIRE(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("rank plus kernel dimension is the column count") {
    testsupport::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 8));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 8));
        const auto m = testsupport::random_int_matrix(rng, rows, cols, -4, 4);
        REQUIRE(rank(m) + kernel_dimension(m) == cols);
    }
}

TEST_CASE("matrix product matches hand values") {
    const auto a = RationalMatrix::from_int_rows({{1, 2}, {3, 4}});
    const auto b = RationalMatrix::from_int_rows({{0, 1}, {1, 0}});
    REQUIRE(a * b == RationalMatrix::from_int_rows({{2, 1}, {4, 3}}));
}
