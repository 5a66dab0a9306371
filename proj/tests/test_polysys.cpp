#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "persym/census.hpp"
#include "persym/identities.hpp"
#include "persym/polysys.hpp"

#include "oracles.hpp"

using persym::BigInt;
using persym::F2Poly;

TEST_CASE("carry-less polynomials validate their shape") {
    CHECK_NOTHROW(F2Poly{0b101, 2});
    CHECK_THROWS_AS(F2Poly(0b101, 1), std::invalid_argument);
    CHECK_THROWS_AS(F2Poly(0, -1), std::invalid_argument);
    CHECK_THROWS_AS(F2Poly(0, 64), std::invalid_argument);
    CHECK(F2Poly{0b11, 1} == F2Poly{0b11, 1});
    CHECK_FALSE(F2Poly{0b11, 1} == F2Poly{0b11, 2});
}

TEST_CASE("products over GF(2)[T]") {
    CHECK(persym::poly_mul(F2Poly{0b11, 1}, F2Poly{0b11, 1}) == F2Poly{0b101, 2});
    CHECK(persym::poly_mul(F2Poly{0b11, 1}, F2Poly{0b1011, 3}) == F2Poly{0b11101, 4});
    CHECK(persym::poly_mul(F2Poly{0, 5}, F2Poly{0b111, 2}) == F2Poly{0, 7});

    CHECK_THROWS_AS(persym::poly_mul(F2Poly{1, 32}, F2Poly{1, 32}),
                    std::invalid_argument);

    std::mt19937_64 rng(0xc0ffeeu);
    for (int trial = 0; trial < 500; ++trial) {
        int da = static_cast<int>(rng() % 30);
        int db = static_cast<int>(rng() % 30);
        persym::word a = rng() & ((persym::word(1) << (da + 1)) - 1);
        persym::word b = rng() & ((persym::word(1) << (db + 1)) - 1);
        F2Poly prod = persym::poly_mul(F2Poly{a, da}, F2Poly{b, db});
        REQUIRE(prod.bits == oracles::clmul_naive(a, b));
        REQUIRE(prod.bound == da + db);
    }
}

TEST_CASE("solution counts by direct enumeration") {
    CHECK(persym::count_solutions_bruteforce(1, 1, 1) == 5);
    CHECK(persym::count_solutions_bruteforce(1, 2, 3) == 23);
    // 2^{q(2n+k)-(k+1)n} (1 + 3/4 + 4/16) with the rank counts 1, 3, 4.
    CHECK(persym::count_solutions_bruteforce(2, 1, 2) == 64);
}

TEST_CASE("marginalized count matches enumeration everywhere both run") {
    for (int q = 1; q <= 3; ++q)
        for (int n = 1; n <= 2; ++n)
            for (int k = 1; k <= 6; ++k) {
                if (q * (k + 2 * n) > 18) continue;
                INFO("q=" << q << " n=" << n << " k=" << k);
                REQUIRE(persym::count_solutions_marginalized(q, n, k) ==
                        BigInt(persym::count_solutions_bruteforce(q, n, k)));
            }
}

TEST_CASE("marginalized count is worker-count independent") {
    BigInt base = persym::count_solutions_marginalized(3, 2, 4, 1);
    CHECK(persym::count_solutions_marginalized(3, 2, 4, 4) == base);
    CHECK(persym::count_solutions_marginalized(3, 2, 4, 8) == base);
}

TEST_CASE("marginalized count reproduces the anchored width-10 values") {
    CHECK(persym::count_solutions_marginalized(4, 1, 10) == BigInt(587) * persym::pow2(31));
    CHECK(persym::count_solutions_marginalized(4, 2, 10) == BigInt(6361) * persym::pow2(28));
}

TEST_CASE("counts agree with the rank-weighted power sum") {
    persym::RankDistribution d = persym::census(2, 3);
    for (int q = 1; q <= 4; ++q) {
        INFO("q=" << q);
        REQUIRE(persym::count_solutions_marginalized(q, 2, 3) ==
                persym::r_qnk(q, 2, 3, d));
    }
}

TEST_CASE("solution counting refuses oversized problems") {
    CHECK_THROWS_AS(persym::count_solutions_bruteforce(2, 5, 10), persym::BudgetError);
    CHECK_THROWS_AS(persym::count_solutions_marginalized(7, 2, 10), persym::BudgetError);
    CHECK_THROWS_AS(persym::count_solutions_marginalized(7, 1, 10), persym::BudgetError);
    CHECK_THROWS_AS(persym::count_solutions_bruteforce(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(persym::count_solutions_marginalized(1, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(persym::count_solutions_marginalized(1, 1, 0), std::invalid_argument);
}
