#pragma once

// Exact closed-form rank-count tables.
//
// Conventions: X stands for 2^k and Y for 2^n. The general-k table stores,
// for each rank i <= 7, the coefficient of every Y power as a polynomial in
// X, together with the smallest k for which the row is asserted; below that
// threshold the row is refused, never extrapolated. The k = 10 table stores
// plain integer polynomials in Y for every rank i <= 10.
//
// Constants quoted as c * 2^m are expanded through checked_pow2_multiple,
// which verifies them against a redundant decimal transcription at table
// construction time.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "census.hpp"
#include "poly.hpp"

namespace persym {

/// One rank's general-k closed form: y_coeffs[d] is the coefficient of Y^d
/// as a polynomial in X.
struct GammaFormula {
    int rank = 0;
    int min_k = 1;
    std::vector<RatPoly> y_coeffs;
};

// Substitute X = 2^k in every Y-coefficient, clear denominators, evaluate
// at Y = 2^n over the integers, then divide back out. Any non-integral
// outcome is a hard failure: the tables only ever produce integers where
// they are asserted.
inline BigInt eval_bivariate_at(const std::vector<RatPoly>& y_coeffs_in_x, int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("eval_bivariate_at: negative n or k");
    BigRational X(pow2(static_cast<unsigned long>(k)));
    BigInt Y = pow2(static_cast<unsigned long>(n));

    std::vector<BigRational> c;
    c.reserve(y_coeffs_in_x.size());
    for (const auto& p : y_coeffs_in_x) c.push_back(p.eval(X));

    BigInt lcm(1);
    for (const auto& v : c) {
        BigInt den = v.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }

    BigInt acc(0), ypow(1);
    for (const auto& v : c) {
        BigRational scaled = v * BigRational(lcm);
        if (!is_integral(scaled))
            throw std::logic_error("eval_bivariate_at: denominator clearing failed");
        acc += scaled.get_num() * ypow;
        ypow *= Y;
    }

    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), lcm.get_mpz_t());
    if (r != 0)
        throw std::logic_error("closed form evaluated to a non-integer at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
    return q;
}

namespace detail {

inline std::vector<GammaFormula> build_gamma_general_table() {
    const BigRational f_tail = BigRational(checked_pow2_multiple(1466315, 13, "12012052480")) / 7 +
                               BigRational(checked_pow2_multiple(11373, 13, "93167616"));
    const BigRational g_tail = BigRational(checked_pow2_multiple(293263, 16, "19219283968")) / 21;

    std::vector<GammaFormula> t(8);
    for (int i = 0; i < 8; ++i) {
        t[static_cast<std::size_t>(i)].rank = i;
        t[static_cast<std::size_t>(i)].min_k = i + 1;
    }

    t[0].y_coeffs = {RatPoly{rat(1)}};

    t[1].y_coeffs = {RatPoly{rat(-3)}, RatPoly{rat(3)}};

    t[2].y_coeffs = {RatPoly{rat(18), rat(-2)},
                     RatPoly{rat(-25), rat(2)},
                     RatPoly{rat(7)}};

    t[3].y_coeffs = {RatPoly{rat(-176), rat(14)},
                     RatPoly{rat(294), rat(-21)},
                     RatPoly{rat(-133), rat(7)},
                     RatPoly{rat(15)}};

    t[4].y_coeffs = {RatPoly{rat(9440), rat(-468), rat(4)} / rat(3),
                     RatPoly{rat(-5744), rat(269), rat(-2)},
                     RatPoly{rat(19028), rat(-783), rat(4)} / rat(6),
                     RatPoly{rat(-1210), rat(35)} / rat(2),
                     RatPoly{rat(31)}};

    t[5].y_coeffs = {RatPoly{rat(-106752), rat(2960), rat(-20)},
                     RatPoly{rat(203872), rat(-5490), rat(35)},
                     RatPoly{rat(-247520), rat(6265), rat(-35)} / rat(2),
                     RatPoly{rat(29150), rat(-2565, 4), rat(5, 2)},
                     RatPoly{rat(-2573), rat(155, 4)},
                     RatPoly{rat(63)}};

    t[6].y_coeffs = {RatPoly{rat(-18483200, 21), rat(38816, 3), rat(-163, 3), rat(1, 21)} * rat(-8),
                     RatPoly{rat(-41276672), rat(597736), rat(-2437), rat(2)} / rat(3),
                     RatPoly{rat(8753120), rat(-368711, 3), rat(5649, 12), rat(-1, 3)},
                     RatPoly{rat(-382091648), rat(5026378), rat(-16723), rat(8)} / rat(168),
                     RatPoly{rat(748154, 3), rat(-22661, 8), rat(155, 24)},
                     RatPoly{rat(-10605), rat(651, 8)},
                     RatPoly{rat(127)}};

    // Rank 7, coefficient functions g, f, e, d, c, b, a by ascending Y power.
    t[7].y_coeffs = {RatPoly{-g_tail, rat(20798464, 3), rat(-48608, 3), rat(248, 21)},
                     RatPoly{f_tail, rat(-13600384), rat(31310), rat(-155, 7)},
                     RatPoly{rat(-3534612736, 3), rat(26162884, 3), rat(-233585, 12), rat(155, 12)},
                     RatPoly{rat(2247886880, 7), rat(-4605205, 2), rat(231105, 48), rat(-465, 168)},
                     RatPoly{rat(-817168432, 21), rat(6262403, 24), rat(-45229, 96), rat(31, 168)},
                     RatPoly{rat(2062014), rat(-190341, 16), rat(465, 32)},
                     RatPoly{rat(-43053), rat(2667, 16)},
                     RatPoly{rat(255)}};

    return t;
}

inline std::vector<RatPoly> build_gamma_k10_table() {
    std::vector<RatPoly> t(11);

    t[0] = RatPoly{rat(1)};
    t[1] = RatPoly{rat(-3), rat(3)};
    t[2] = RatPoly{rat(-2030), rat(2023), rat(7)};
    t[3] = RatPoly{rat(14160), rat(-21210), rat(7035), rat(15)};
    t[4] = RatPoly{rat(1241504), rat(-1827440), rat(568590), rat(17315), rat(31)};
    t[5] = RatPoly{rat(-18047232), rat(31282272), rat(-15266160), rat(1993950), rat(37107),
                   rat(63)};
    t[6] = RatPoly{rat(-52215808), rat(54302976), rat(18602976), rat(-24883824), rat(4120830),
                   rat(72723), rat(127)};
    t[7] = RatPoly{rat(1874657280), rat(-3062415360), rat(1210256640), rat(39863520),
                   rat(-67607280), rat(5117310), rat(127635), rat(255)};
    t[8] = RatPoly{BigRational(checked_pow2_multiple(-4445, 21, "-9321840640")),
                   BigRational(checked_pow2_multiple(242795, 16, "15911813120")),
                   BigRational(checked_pow2_multiple(-436135, 14, "-7145635840")),
                   rat(271514880),
                   rat(323250144),
                   rat(-38376240),
                   rat(-897890),
                   rat(171955),
                   rat(511)};
    t[9] = RatPoly{BigRational(checked_pow2_multiple(480, 25, "16106127360")),
                   BigRational(checked_pow2_multiple(-106680, 18, "-27965521920")),
                   BigRational(checked_pow2_multiple(200235, 16, "13122600960")),
                   rat(-783237120),
                   rat(-559464192),
                   rat(78214752),
                   rat(1798320),
                   rat(-517650),
                   rat(-1533),
                   rat(1023)};
    t[10] = RatPoly{BigRational(checked_pow2_multiple(-256, 25, "-8589934592")),
                    BigRational(checked_pow2_multiple(57344, 18, "15032385536")),
                    BigRational(checked_pow2_multiple(-27432, 18, "-7191134208")),
                    rat(494731264),
                    rat(299663360),
                    rat(-45028608),
                    rat(-1028192),
                    rat(345440),
                    rat(1022),
                    rat(-1023),
                    rat(0),
                    rat(1)};
    return t;
}

}

inline const std::vector<GammaFormula>& gamma_general_table() {
    static const std::vector<GammaFormula> table = detail::build_gamma_general_table();
    return table;
}

inline const GammaFormula& gamma_general_formula(int i) {
    if (i < 0 || i > 7)
        throw std::invalid_argument("gamma_general: rank must be in 0..7, got " +
                                    std::to_string(i));
    return gamma_general_table()[static_cast<std::size_t>(i)];
}

// The rank-i row with X = 2^k substituted: an exact polynomial in Y.
inline RatPoly gamma_general_at_k(int i, int k) {
    const GammaFormula& g = gamma_general_formula(i);
    if (k < g.min_k)
        throw std::domain_error("gamma_general: rank " + std::to_string(i) +
                                " formula not asserted for k=" + std::to_string(k) +
                                " (needs k >= " + std::to_string(g.min_k) + ")");
    BigRational X(pow2(static_cast<unsigned long>(k)));
    std::vector<BigRational> c;
    c.reserve(g.y_coeffs.size());
    for (const auto& p : g.y_coeffs) c.push_back(p.eval(X));
    return RatPoly(std::move(c));
}

inline BigInt gamma_general(int i, int n, int k) {
    const GammaFormula& g = gamma_general_formula(i);
    if (n < 0) throw std::invalid_argument("gamma_general: negative n");
    if (k < g.min_k)
        throw std::domain_error("gamma_general: rank " + std::to_string(i) +
                                " formula not asserted for k=" + std::to_string(k) +
                                " (needs k >= " + std::to_string(g.min_k) + ")");
    return eval_bivariate_at(g.y_coeffs, n, k);
}

inline const std::vector<RatPoly>& gamma_k10_table() {
    static const std::vector<RatPoly> table = detail::build_gamma_k10_table();
    return table;
}

inline const RatPoly& gamma_k10_poly(int i) {
    if (i < 0 || i > 10)
        throw std::invalid_argument("gamma_k10: rank must be in 0..10, got " + std::to_string(i));
    return gamma_k10_table()[static_cast<std::size_t>(i)];
}

inline BigInt gamma_k10(int i, int n) {
    if (n < 0) throw std::invalid_argument("gamma_k10: negative n");
    return to_integer(gamma_k10_poly(i).eval(BigRational(pow2(static_cast<unsigned long>(n)))));
}

// Rank-7 special cases: fixed small n as polynomials in X, fixed k in {8,9}
// as polynomials in Y.

inline const RatPoly& gamma7_n4_in_x() {
    static const RatPoly p{rat(-121896960), rat(13332480), rat(-416640), rat(3720)};
    return p;
}

inline const RatPoly& gamma7_n5_in_x() {
    static const RatPoly p = RatPoly{BigRational(checked_pow2_multiple(311, 13, "2547712")),
                                     BigRational(-checked_pow2_multiple(917, 7, "117376")),
                                     rat(1148), rat(1)} *
                             rat(115320);
    return p;
}

inline const RatPoly& gamma7_k8_in_y() {
    static const RatPoly p{rat(-4128768), rat(7913472), rat(-4617984), rat(758880),
                           rat(105648),  rat(-31122),  rat(-381),     rat(255)};
    return p;
}

inline const RatPoly& gamma7_k9_in_y() {
    static const RatPoly p{rat(-27983872), rat(81543168), rat(-82168576), rat(32840160),
                           rat(-4053808),  rat(-219618),  rat(42291),     rat(255)};
    return p;
}

// Rank-7 count for n <= 5 at width k. The two cubics in X factor as
// 3720(X - 16)(X - 32)(X - 64) and 115320(X - 32)(X - 64)(X + 1244): their
// roots supply the forced zeros at k < 7, so each row is asserted exactly
// from its smallest root on and refused below it, where it goes negative.
inline BigInt gamma7_special_n(int n, int k) {
    if (k < 1) throw std::invalid_argument("gamma7_special_n: k must be >= 1");
    if (n < 0 || n > 5)
        throw std::domain_error("gamma7_special_n: no fixed-n expression for n=" +
                                std::to_string(n));
    if (n <= 3) return BigInt(0);
    if (k < n)
        throw std::domain_error("gamma7_special_n: the n=" + std::to_string(n) +
                                " expression is not asserted for k=" + std::to_string(k));
    const RatPoly& p = (n == 4) ? gamma7_n4_in_x() : gamma7_n5_in_x();
    return to_integer(p.eval(BigRational(pow2(static_cast<unsigned long>(k)))));
}

inline const RatPoly& gamma7_special_k(int k) {
    if (k == 8) return gamma7_k8_in_y();
    if (k == 9) return gamma7_k9_in_y();
    throw std::domain_error("gamma7_special_k: no fixed-k expression for k=" + std::to_string(k));
}

// The rank-7 general form grouped by X power instead: x_coeffs[d] is the
// coefficient of X^d as a polynomial in Y. An independent transcription of
// the same bivariate polynomial, used as a cross-check.
inline const std::array<RatPoly, 4>& gamma7_x_major() {
    static const std::array<RatPoly, 4> brackets = [] {
        std::array<RatPoly, 4> b;
        b[3] = RatPoly{rat(64), rat(-120), rat(70), rat(-15), rat(1)} * rat(31, 168);
        b[2] = RatPoly{rat(-1555456), rat(3005760), rat(-1868680), rat(462210), rat(-45229),
                       rat(1395)} /
               rat(96);
        b[1] = RatPoly{rat(332775424), rat(-652818432), rat(418606144), rat(-110524920),
                       rat(12524806), rat(-571023), rat(8001)} /
               rat(48);
        b[0] = RatPoly{BigRational(-checked_pow2_multiple(293263, 16, "19219283968")),
                       BigRational(checked_pow2_multiple(4637778, 13, "37992677376")),
                       BigRational(-checked_pow2_multiple(96649567, 8, "24742289152")),
                       rat(6743660640), rat(-817168432), rat(43302294), rat(-904113),
                       rat(5355)} /
               rat(21);
        return b;
    }();
    return brackets;
}

// Whether a full rank distribution at (n, k) is available from the tables:
// either k = 10, or every rank 0..2n sits inside the general table's
// validity range.
inline bool closedform_covers(int n, int k) {
    if (n < 0 || k < 1) return false;
    if (k == 10) return true;
    return 2 * n <= 7 && k >= 2 * n + 1;
}

inline RankDistribution closedform_distribution(int n, int k) {
    if (!closedform_covers(n, k))
        throw std::domain_error("closedform_distribution: no complete table for n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
    RankDistribution dist;
    dist.n = n;
    dist.k = k;
    int max_rank = std::min(2 * n, k);
    dist.counts.reserve(static_cast<std::size_t>(max_rank) + 1);
    for (int i = 0; i <= max_rank; ++i)
        dist.counts.push_back(k == 10 ? gamma_k10(i, n) : gamma_general(i, n, k));
    return dist;
}

}
