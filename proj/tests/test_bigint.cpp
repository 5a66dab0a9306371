#include <catch2/catch_amalgamated.hpp>

#include "persym/bigint.hpp"
#include "persym/poly.hpp"

using persym::BigInt;
using persym::BigRational;
using persym::RatPoly;

TEST_CASE("powers of two") {
    CHECK(persym::pow2(0) == 1);
    CHECK(persym::pow2(10) == 1024);
    CHECK(persym::pow2(64) == BigInt("18446744073709551616"));
    CHECK(persym::pow2q(3) == BigRational(8));
    CHECK(persym::pow2q(0) == BigRational(1));
    CHECK(persym::pow2q(-2) == persym::rat(1, 4));
    CHECK(persym::pow2q(-1) * persym::pow2q(1) == BigRational(1));
}

TEST_CASE("rational helpers") {
    CHECK(persym::rat(6, 4) == persym::rat(3, 2));
    CHECK(persym::rat(-6, 4).get_den() == 2);
    CHECK(persym::is_integral(persym::rat(8, 2)));
    CHECK_FALSE(persym::is_integral(persym::rat(8, 3)));
    CHECK(persym::to_integer(persym::rat(8, 2)) == 4);
    CHECK_THROWS_AS(persym::to_integer(persym::rat(1, 2)), std::domain_error);
}

TEST_CASE("double-entry constants") {
    CHECK(persym::checked_pow2_multiple(587, 31, "1260572901376") ==
          BigInt("1260572901376"));
    CHECK(persym::checked_pow2_multiple(-3, 4, "-48") == -48);
    CHECK_THROWS_AS(persym::checked_pow2_multiple(587, 31, "1260572901377"),
                    std::logic_error);
}

TEST_CASE("rational polynomial basics") {
    RatPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.coeff(5) == 0);
    CHECK_THROWS_AS(zero.coeff(-1), std::out_of_range);

    RatPoly p{BigRational(1), BigRational(0), persym::rat(3, 2)};  // 1 + (3/2)x^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(BigRational(2)) == BigRational(7));
    CHECK(p.eval(persym::rat(1, 2)) == persym::rat(11, 8));

    RatPoly q{BigRational(0), BigRational(1)};  // x
    CHECK((p * q).degree() == 3);
    CHECK((p * q).coeff(3) == persym::rat(3, 2));
    CHECK(p + (-p) == RatPoly{});
    CHECK(p - p == RatPoly{});
    CHECK(q.shifted(2) == RatPoly{BigRational(0), BigRational(0), BigRational(0),
                                  BigRational(1)});
    CHECK(p * BigRational(2) == RatPoly{BigRational(2), BigRational(0), BigRational(3)});
    CHECK(BigRational(2) * p == p * BigRational(2));
    CHECK(p / BigRational(2) == RatPoly{persym::rat(1, 2), BigRational(0),
                                        persym::rat(3, 4)});
}
