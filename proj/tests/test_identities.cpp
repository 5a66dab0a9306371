#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "persym/census.hpp"
#include "persym/closedform.hpp"
#include "persym/identities.hpp"

using persym::BigInt;
using persym::BigRational;
using persym::GammaSource;
using persym::RankDistribution;

TEST_CASE("weighted moments of a distribution") {
    RankDistribution d = persym::census(1, 10);
    CHECK(persym::moment(d, 0) == BigRational(persym::pow2(11)));
    CHECK(persym::moment(d, -1) == persym::rat(1027, 2));
    CHECK(persym::moment(d, 1) == BigRational(1 + 3 * 2 + 2044 * 4));
    CHECK(persym::first_moment_expected(1, 10) == persym::rat(1027, 2));
}

TEST_CASE("moment identities hold on closed-form distributions") {
    for (int n = 1; n <= 8; ++n) {
        persym::MomentReport rep = persym::verify_moments(n, 10, GammaSource::ClosedForm);
        INFO("n=" << n);
        for (const auto& c : rep.checks) {
            INFO(c.name << ": " << c.lhs << " vs " << c.rhs);
            REQUIRE(c.pass);
        }
        REQUIRE(rep.all_pass());
        REQUIRE(rep.checks.size() == 7);  // width 10 adds the three fixed-width forms
    }
    for (int n = 1; n <= 3; ++n)
        for (int k = 7; k <= 12; ++k) {
            if (!persym::closedform_covers(n, k)) continue;
            INFO("n=" << n << " k=" << k);
            REQUIRE(persym::verify_moments(n, k, GammaSource::ClosedForm).all_pass());
        }
}

TEST_CASE("moment identities hold on censused distributions") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 17; ++k) {
            if (n * (k + 1) > 18) continue;
            persym::MomentReport rep = persym::verify_moments(n, k, GammaSource::Census);
            INFO("n=" << n << " k=" << k);
            REQUIRE(rep.all_pass());
        }
}

TEST_CASE("scaled power sums at q = 1") {
    RankDistribution d = persym::closedform_distribution(3, 7);
    CHECK(persym::r_qnk(1, 3, 7, d) == 191);
    CHECK(persym::r1_expected(3, 7) == 191);

    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 12; ++k) {
            RankDistribution src{0, 0, {}};
            if (persym::closedform_covers(n, k))
                src = persym::closedform_distribution(n, k);
            else if (n * (k + 1) <= 18)
                src = persym::census(n, k);
            else
                continue;
            INFO("n=" << n << " k=" << k);
            REQUIRE(persym::r_qnk(1, n, k, src) == persym::r1_expected(n, k));
        }
}

TEST_CASE("scaled power sums at q = 4 and width 10") {
    CHECK(persym::r_qnk(4, 1, 10, persym::closedform_distribution(1, 10)) ==
          BigInt(587) * persym::pow2(31));
    CHECK(persym::r_qnk(4, 2, 10, persym::closedform_distribution(2, 10)) ==
          BigInt(6361) * persym::pow2(28));
    CHECK(persym::r_qnk(4, 3, 10, persym::closedform_distribution(3, 10)) ==
          BigInt(1552553) * persym::pow2(21));
}

TEST_CASE("scaled power sum argument validation") {
    RankDistribution d = persym::census(1, 3);
    CHECK_THROWS_AS(persym::r_qnk(0, 1, 3, d), std::invalid_argument);
    CHECK_THROWS_AS(persym::r_qnk(1, 2, 3, d), std::invalid_argument);
    CHECK_THROWS_AS(persym::r_qnk(1, 1, 4, d), std::invalid_argument);
}

TEST_CASE("the count polynomial at q = 4 and width 10") {
    persym::RatPoly p = persym::r4_k10_polynomial();
    std::vector<BigRational> expect{
        BigRational(BigInt("975297576960")), BigRational(BigInt("106673172480")),
        BigRational(BigInt("17174626560")),  BigRational(329001120),
        BigRational(37128000),               BigRational(107310),
        BigRational(15345),                  BigRational(0),
        BigRational(1)};
    REQUIRE(p.degree() == 8);
    for (int dgr = 0; dgr <= 8; ++dgr) {
        INFO("degree " << dgr);
        REQUIRE(p.coeff(dgr) == expect[static_cast<std::size_t>(dgr)]);
    }

    // The polynomial in 2^n reproduces the anchored values.
    CHECK(persym::to_integer(p.eval(BigRational(2))) == BigInt(587) * persym::pow2(31));
    CHECK(persym::to_integer(p.eval(BigRational(4))) == BigInt(6361) * persym::pow2(28));
    CHECK(persym::to_integer(p.eval(BigRational(8))) == BigInt(1552553) * persym::pow2(21));
}

TEST_CASE("transcription adjudication settles both printed variants") {
    persym::TranscriptionReport rep = persym::adjudicate_r4_transcriptions();
    CHECK(rep.resolved_y2_coeff == BigInt("17174626560"));
    CHECK(rep.resolved_y2_coeff == BigInt(67088385) * 256);
    CHECK(rep.resolved_gamma7_y5_coeff == 5117310);

    std::vector<std::string> names;
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
        names.push_back(c.name);
    }
    REQUIRE(rep.all_pass());
    REQUIRE(names.size() == 7);
    CHECK(std::find(names.begin(), names.end(), "extra-zero-variant-rejected") != names.end());
    CHECK(std::find(names.begin(), names.end(), "extra-one-variant-rejected") != names.end());
    CHECK(std::find(names.begin(), names.end(), "variants-mutually-inconsistent") != names.end());
}
