#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "persym/census.hpp"

using persym::BigInt;
using persym::BudgetError;
using persym::RankDistribution;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

}

TEST_CASE("census on hand-checked spaces") {
    CHECK(persym::census(1, 1).counts == big({1, 3}));
    CHECK(persym::census(1, 2).counts == big({1, 3, 4}));
    CHECK(persym::census(1, 10).counts == big({1, 3, 2044}));
    CHECK(persym::census(2, 10).counts == big({1, 9, 6174, 42840, 4145280}));
}

TEST_CASE("census of the empty family") {
    RankDistribution d = persym::census(0, 7);
    CHECK(d.counts == big({1}));
    CHECK(d.total() == 1);
}

TEST_CASE("census totals and rank bounds") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 5; ++k) {
            RankDistribution d = persym::census(n, k);
            CHECK(d.n == n);
            CHECK(d.k == k);
            CHECK(static_cast<int>(d.counts.size()) == std::min(2 * n, k) + 1);
            CHECK(d.total() == persym::pow2(static_cast<unsigned long>(n * (k + 1))));
            CHECK(d.counts[0] == 1);
        }
    }
}

TEST_CASE("census agrees with the per-tuple reference walk") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 19; ++k) {
            if (n * (k + 1) > 20) continue;
            RankDistribution fast = persym::census(n, k);
            RankDistribution slow = persym::census_naive(n, k);
            INFO("n=" << n << " k=" << k);
            REQUIRE(fast == slow);
        }
    }
}

TEST_CASE("census result is worker-count independent") {
    RankDistribution one = persym::census(2, 6, 1);
    CHECK(persym::census(2, 6, 3) == one);
    CHECK(persym::census(2, 6, 8) == one);

    RankDistribution wide = persym::census(3, 4, 5);
    CHECK(wide == persym::census(3, 4, 1));
}

TEST_CASE("rank-one count is 3(2^n - 1) once k >= 2") {
    for (auto [n, k] : {std::pair{1, 4}, {2, 5}, {3, 3}, {4, 2}}) {
        RankDistribution d = persym::census(n, k);
        CHECK(d.counts[1] == 3 * (persym::pow2(static_cast<unsigned long>(n)) - 1));
    }
}

TEST_CASE("census refuses oversized spaces") {
    CHECK_THROWS_AS(persym::census(4, 9), BudgetError);      // beyond the hard cap
    CHECK_THROWS_AS(persym::census(4, 9, 1, true), BudgetError);
    CHECK_THROWS_AS(persym::census(3, 9), BudgetError);      // ceiling without force

    try {
        persym::census(3, 9);
        FAIL("expected a budget error");
    } catch (const BudgetError& e) {
        CHECK(e.estimated_leaves() == persym::pow2(30));
        CHECK(std::string(e.what()).find("force") != std::string::npos);
    }

    CHECK_THROWS_AS(persym::census_naive(2, 12), BudgetError);
    CHECK_THROWS_AS(persym::census(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(persym::census(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(persym::census(2, 5, 0), std::invalid_argument);
}
