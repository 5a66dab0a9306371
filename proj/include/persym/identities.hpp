#pragma once

// Weighted power sums over rank distributions, the closed-form right-hand
// sides they must equal, the solution-count formula they imply, and the
// adjudication of two conflicting printed transcriptions of the q=4, k=10
// solution count.
//
// Everything here is exact rational arithmetic. The identities are exact;
// a tolerance would only mask transcription mistakes.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "census.hpp"
#include "closedform.hpp"
#include "poly.hpp"

namespace persym {

enum class GammaSource { Census, ClosedForm };

inline const char* to_string(GammaSource s) {
    return s == GammaSource::Census ? "census" : "closedform";
}

/// Sum_i gamma_i * 2^{weight_exponent * i}, exact; negative exponents allowed.
inline BigRational moment(const RankDistribution& dist, int weight_exponent) {
    BigRational acc(0);
    for (std::size_t i = 0; i < dist.counts.size(); ++i)
        acc += BigRational(dist.counts[i]) *
               pow2q(static_cast<long>(weight_exponent) * static_cast<long>(i));
    return acc;
}

// Expected values of the unweighted, 2^{-i}-weighted and 2^{-2i}-weighted
// sums. Exponents go negative for small n, so these are rationals.

inline BigRational tuple_count_expected(int n, int k) {
    return pow2q(static_cast<long>(k + 1) * n);
}

inline BigRational first_moment_expected(int n, int k) {
    long N = n, K = k;
    return pow2q(N + K * (N - 1)) + pow2q((K - 1) * N) - pow2q((K - 1) * N - K);
}

inline BigRational second_moment_expected(int n, int k) {
    long N = n, K = k;
    BigInt w1 = 3 * (pow2(static_cast<unsigned long>(K)) - 1);
    BigInt w2 = 6 * (pow2(static_cast<unsigned long>(K - 1)) - 1);
    BigRational acc = pow2q(N + K * (N - 2));
    acc += BigRational(w1) * pow2q(-N + K * (N - 2));
    acc += BigRational(w2) * pow2q(-2 * N + K * (N - 2));
    acc += pow2q(-3 * N + K * N);
    acc -= BigRational(6) * pow2q(N * (K - 3) - K);
    acc += BigRational(8) * pow2q(-3 * N + K * (N - 2));
    return acc;
}

struct MomentCheck {
    std::string name;
    BigRational lhs;
    BigRational rhs;
    bool pass = false;
};

struct MomentReport {
    int n = 0;
    int k = 0;
    GammaSource source = GammaSource::Census;
    std::vector<MomentCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Checks every weighted-sum identity available at (n, k) against the named
/// gamma source. The k = 10 identities keep their independently stated
/// right-hand sides so that agreement with the general ones is itself a
/// checked fact, not an assumption.
inline MomentReport verify_moments(int n, int k, GammaSource source, int workers = 1,
                                   bool force = false) {
    RankDistribution dist = source == GammaSource::Census ? census(n, k, workers, force)
                                                          : closedform_distribution(n, k);
    MomentReport rep;
    rep.n = n;
    rep.k = k;
    rep.source = source;

    auto add = [&rep](std::string name, BigRational lhs, BigRational rhs) {
        bool pass = lhs == rhs;
        rep.checks.push_back(MomentCheck{std::move(name), std::move(lhs), std::move(rhs), pass});
    };

    long N = n, K = k;
    add("tuple-count", moment(dist, 0), tuple_count_expected(n, k));
    add("first-moment", moment(dist, -1), first_moment_expected(n, k));
    add("second-moment", moment(dist, -2), second_moment_expected(n, k));
    add("q1-solution-count", pow2q(K - (K - 1) * N) * moment(dist, -1),
        BigRational(pow2(static_cast<unsigned long>(2 * n)) +
                    pow2(static_cast<unsigned long>(k)) - 1));

    if (k == 10) {
        add("k10-tuple-count", moment(dist, 0), pow2q(11 * N));
        add("k10-first-moment", pow2q(10) * moment(dist, -1),
            pow2q(11 * N) + BigRational(1023) * pow2q(9 * N));
        add("k10-second-moment", pow2q(20) * moment(dist, -2),
            pow2q(11 * N) + BigRational(3069) * pow2q(9 * N) +
                BigRational(3066) * pow2q(8 * N) + BigRational(1042440) * pow2q(7 * N));
    }
    return rep;
}

/// Number of solutions of the q-column bilinear system predicted by a rank
/// distribution: 2^{q(2n+k)-(k+1)n} * Sum_i gamma_i * 2^{-iq}. The rational
/// expression must clear to an integer; a remainder signals inconsistent
/// gammas and throws.
inline BigInt r_qnk(int q, int n, int k, const RankDistribution& gammas) {
    if (q < 1) throw std::invalid_argument("r_qnk: q must be >= 1");
    if (gammas.n != n || gammas.k != k)
        throw std::invalid_argument("r_qnk: distribution is for (n=" +
                                    std::to_string(gammas.n) + ", k=" +
                                    std::to_string(gammas.k) + "), not (n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) + ")");
    long N = n, K = k, Q = q;
    return to_integer(pow2q(Q * (2 * N + K) - (K + 1) * N) * moment(gammas, -q));
}

/// q = 1 in closed form: 2^{2n} + 2^k - 1.
inline BigInt r1_expected(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("r1_expected: negative n or k");
    return pow2(static_cast<unsigned long>(2 * n)) + pow2(static_cast<unsigned long>(k)) - 1;
}

/// The q = 4, k = 10 solution count as an exact polynomial in Y = 2^n,
/// recomputed from the k = 10 table: Sum_i gamma_i(Y) * 2^{40-4i} must be
/// divisible by Y^3, and the quotient is the count.
inline const RatPoly& r4_k10_polynomial() {
    static const RatPoly poly = [] {
        RatPoly acc;
        for (int i = 0; i <= 10; ++i)
            acc = acc + gamma_k10_poly(i) *
                            BigRational(pow2(static_cast<unsigned long>(40 - 4 * i)));
        for (int d = 0; d < 3; ++d)
            if (acc.coeff(d) != 0)
                throw std::logic_error("r4_k10_polynomial: scaled sum not divisible by Y^3");
        std::vector<BigRational> c;
        c.reserve(static_cast<std::size_t>(acc.degree() - 2));
        for (int d = 3; d <= acc.degree(); ++d) c.push_back(acc.coeff(d));
        return RatPoly(std::move(c));
    }();
    return poly;
}

struct TranscriptionCheck {
    std::string name;
    std::string detail;
    bool pass = false;
};

/// Outcome of recomputing the q=4, k=10 count and testing both printed
/// digit variants against it.
struct TranscriptionReport {
    RatPoly resolved;                 // solution count as a polynomial in Y = 2^n
    BigInt resolved_y2_coeff;         // its Y^2 coefficient
    BigInt resolved_gamma7_y5_coeff;  // the rank-7 row's Y^5 coefficient
    std::vector<TranscriptionCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Two printed transcriptions of the same quantity conflict: the Y^2
/// coefficient of the q=4, k=10 count appears both as 670888385*2^8 and,
/// via the rank-7 table row, as the value implied by a Y^5 entry of
/// 5117310 (printed elsewhere as 51117310). Recompute from the table and
/// decide which digits survive. Anchors: the three evaluated reference
/// values 587*2^31, 6361*2^28, 1552553*2^21.
inline TranscriptionReport adjudicate_r4_transcriptions() {
    TranscriptionReport rep;
    rep.resolved = r4_k10_polynomial();
    rep.resolved_y2_coeff = to_integer(rep.resolved.coeff(2));
    rep.resolved_gamma7_y5_coeff = to_integer(gamma_k10_poly(7).coeff(5));

    const BigInt short_y2 = BigInt(67088385) * pow2(8);
    const BigInt long_y2 = BigInt("670888385") * pow2(8);
    const BigInt y5_short("5117310");
    const BigInt y5_long("51117310");
    // The rank-7 row enters the Y^3-scaled sum with weight 2^{40-28}, so a
    // Y^5 change of delta shifts the count's Y^2 coefficient by delta*2^12.
    const BigInt y2_implied_by_long_y5 = rep.resolved_y2_coeff + (y5_long - y5_short) * pow2(12);

    const BigInt anchor1 = BigInt(587) * pow2(31);
    const BigInt anchor2 = BigInt(6361) * pow2(28);
    const BigInt anchor3 = BigInt(1552553) * pow2(21);

    auto add = [&rep](std::string name, bool pass, std::string detail) {
        rep.checks.push_back(TranscriptionCheck{std::move(name), std::move(detail), pass});
    };

    add("n1-anchor", rep.resolved.eval(BigRational(2)) == BigRational(anchor1),
        "count at n=1 is " + to_integer(rep.resolved.eval(BigRational(2))).get_str() +
            ", anchor 587*2^31 = " + anchor1.get_str());
    add("n2-anchor", rep.resolved.eval(BigRational(4)) == BigRational(anchor2),
        "count at n=2 is " + to_integer(rep.resolved.eval(BigRational(4))).get_str() +
            ", anchor 6361*2^28 = " + anchor2.get_str());
    add("n3-anchor", rep.resolved.eval(BigRational(8)) == BigRational(anchor3),
        "count at n=3 is " + to_integer(rep.resolved.eval(BigRational(8))).get_str() +
            ", anchor 1552553*2^21 = " + anchor3.get_str());
    add("y2-coefficient-is-67088385*2^8", rep.resolved_y2_coeff == short_y2,
        "recomputed Y^2 coefficient " + rep.resolved_y2_coeff.get_str() +
            " vs 67088385*2^8 = " + short_y2.get_str());
    add("extra-zero-variant-rejected", rep.resolved_y2_coeff != long_y2,
        "670888385*2^8 = " + long_y2.get_str() + " does not match the recomputed " +
            rep.resolved_y2_coeff.get_str());
    add("extra-one-variant-rejected",
        rep.resolved_gamma7_y5_coeff == y5_short && y2_implied_by_long_y5 != short_y2,
        "a rank-7 Y^5 entry of 51117310 would force the Y^2 coefficient to " +
            y2_implied_by_long_y5.get_str() + ", breaking the anchors");
    add("variants-mutually-inconsistent", y2_implied_by_long_y5 != long_y2,
        "even combined, 51117310 implies Y^2 = " + y2_implied_by_long_y5.get_str() +
            " while the other variant prints " + long_y2.get_str());

    return rep;
}

}
