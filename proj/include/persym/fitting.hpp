#pragma once

// Interpolation fits reproducing the closed-form tables from their raw
// inputs, with exact rational linear algebra throughout.
//
// fit_gamma7 recovers the rank-7 coefficient functions a(k)..g(k) from the
// fixed-n and fixed-k special rows alone. fit_k10_high_ranks recovers the
// k = 10 rows for ranks 8..10 from the three weighted-sum identities and
// the general table rows 0..7, matching coefficients of every power of
// Y = 2^n. Both systems are overdetermined; consistency is part of the
// result, and an inconsistency names the equation that fails.

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "closedform.hpp"
#include "poly.hpp"

namespace persym {

struct RationalLinearSystem {
    std::vector<std::vector<BigRational>> lhs;
    std::vector<BigRational> rhs;
    std::vector<std::string> row_labels;  // empty, or one label per row
};

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<BigRational> solution;  // populated only when Unique
    int rank = 0;
    std::string failing_equation;  // populated only when Inconsistent
};

/// Gauss-Jordan elimination over exact rationals. Never approximates:
/// the outcome is a unique solution, a rank deficiency, or the label of a
/// contradictory equation.
inline SolveResult solve_exact(const RationalLinearSystem& sys) {
    const std::size_t m = sys.lhs.size();
    const std::size_t cols = m == 0 ? 0 : sys.lhs[0].size();
    if (sys.rhs.size() != m)
        throw std::invalid_argument("solve_exact: lhs/rhs row count mismatch");
    if (!sys.row_labels.empty() && sys.row_labels.size() != m)
        throw std::invalid_argument("solve_exact: label count mismatch");
    for (const auto& row : sys.lhs)
        if (row.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

    auto a = sys.lhs;
    auto b = sys.rhs;
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i)
        labels[i] = sys.row_labels.empty() ? "row " + std::to_string(i) : sys.row_labels[i];

    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        std::swap(labels[p], labels[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            BigRational f = a[i][c] / a[r][c];
            for (std::size_t c2 = c; c2 < cols; ++c2) a[i][c2] -= f * a[r][c2];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    SolveResult res;
    res.rank = static_cast<int>(r);
    for (std::size_t i = r; i < m; ++i) {
        if (b[i] != 0) {
            res.status = SolveStatus::Inconsistent;
            res.failing_equation = labels[i];
            return res;
        }
    }
    if (r < cols) {
        res.status = SolveStatus::Underdetermined;
        return res;
    }
    res.status = SolveStatus::Unique;
    res.solution.assign(cols, BigRational(0));
    for (std::size_t i = 0; i < r; ++i) res.solution[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return res;
}

/// The rank-7 coefficient functions recovered by interpolation, each a
/// polynomial in X = 2^k, plus the assembled bivariate form (index = power
/// of Y = 2^n).
struct Gamma7Fit {
    RatPoly alpha_x, beta_x, gamma_x;
    RatPoly a_x, b_x, c_x, d_x, e_x, f_x, g_x;
    std::vector<RatPoly> assembled_y_coeffs;
};

/// Fits the rank-7 row from its raw special cases. The count vanishes for
/// n <= 3, so it factors as (Y-1)(Y-2)(Y-4)(Y-8) times a cubic with
/// leading coefficient 255 and unknown lower coefficient functions
/// alpha(k), beta(k), gamma(k):
///   - alpha is affine in X, pinned by the Y^6 coefficients at k = 8, 9;
///   - the n = 4 and n = 5 rows constrain 256a+16b+g and 1024a+32b+g,
///     solved per X-degree as exact 3x3 systems;
///   - a(k)..g(k) then follow by expanding the quartic factor.
/// Every fitted degree the inputs did not pin is verified against the
/// fixed-k rows; a mismatch throws, since it can only mean a transcription
/// error in the inputs.
inline Gamma7Fit fit_gamma7() {
    const RatPoly quartic{rat(64), rat(-120), rat(70), rat(-15), rat(1)};  // (Y-1)(Y-2)(Y-4)(Y-8)

    // a(k) = a*X + b through its two fixed-k values.
    RationalLinearSystem affine;
    affine.lhs = {{rat(256), rat(1)}, {rat(512), rat(1)}};
    affine.rhs = {gamma7_k8_in_y().coeff(6), gamma7_k9_in_y().coeff(6)};
    affine.row_labels = {"a(8)", "a(9)"};
    SolveResult sa = solve_exact(affine);
    if (sa.status != SolveStatus::Unique)
        throw std::logic_error("fit_gamma7: affine system for a(k) is degenerate");
    const RatPoly a_fit{sa.solution[1], sa.solution[0]};
    const RatPoly alpha = a_fit + RatPoly::constant(rat(3825));

    // Substituting Y = 2^4 and Y = 2^5 into the factored form and dividing
    // by the quartic's value turns the fixed-n rows into two affine
    // constraints on (alpha, beta, gamma) as polynomials in X.
    const BigRational q16 = quartic.eval(rat(16));
    const BigRational q32 = quartic.eval(rat(32));
    const RatPoly rhs_n4 =
        gamma7_n4_in_x() / q16 - RatPoly::constant(rat(255) * rat(4096));   // 255 * 16^3
    const RatPoly rhs_n5 =
        gamma7_n5_in_x() / q32 - RatPoly::constant(rat(255) * rat(32768));  // 255 * 32^3

    std::vector<BigRational> beta_c, gamma_c;
    int top = std::max({alpha.degree(), rhs_n4.degree(), rhs_n5.degree()});
    for (int d = 0; d <= top; ++d) {
        RationalLinearSystem sys;
        sys.lhs = {{rat(1), rat(0), rat(0)},
                   {rat(256), rat(16), rat(1)},
                   {rat(1024), rat(32), rat(1)}};
        sys.rhs = {alpha.coeff(d), rhs_n4.coeff(d), rhs_n5.coeff(d)};
        sys.row_labels = {"alpha:X^" + std::to_string(d), "n4-row:X^" + std::to_string(d),
                          "n5-row:X^" + std::to_string(d)};
        SolveResult s = solve_exact(sys);
        if (s.status != SolveStatus::Unique)
            throw std::logic_error("fit_gamma7: degree-" + std::to_string(d) +
                                   " system is degenerate");
        beta_c.push_back(s.solution[1]);
        gamma_c.push_back(s.solution[2]);
    }
    const RatPoly beta(std::move(beta_c));
    const RatPoly gamma(std::move(gamma_c));

    Gamma7Fit fit;
    fit.alpha_x = alpha;
    fit.beta_x = beta;
    fit.gamma_x = gamma;
    fit.a_x = a_fit;
    fit.b_x = beta - rat(15) * alpha + RatPoly::constant(rat(17850));
    fit.c_x = gamma - rat(15) * beta + rat(70) * alpha - RatPoly::constant(rat(30600));
    fit.d_x = rat(-15) * gamma + rat(70) * beta - rat(120) * alpha + RatPoly::constant(rat(16320));
    fit.e_x = rat(70) * gamma - rat(120) * beta + rat(64) * alpha;
    fit.f_x = rat(-120) * gamma + rat(64) * beta;
    fit.g_x = rat(64) * gamma;

    const std::vector<RatPoly> cubic = {gamma, beta, alpha, RatPoly::constant(rat(255))};
    fit.assembled_y_coeffs.assign(8, RatPoly());
    for (int dq = 0; dq <= 4; ++dq)
        for (int dc = 0; dc <= 3; ++dc)
            fit.assembled_y_coeffs[static_cast<std::size_t>(dq + dc)] =
                fit.assembled_y_coeffs[static_cast<std::size_t>(dq + dc)] +
                cubic[static_cast<std::size_t>(dc)] * quartic.coeff(dq);

    // Cross-check the degrees the fit never consumed: at X = 2^8 and 2^9
    // the assembled form must reproduce the fixed-k rows in full.
    for (int k : {8, 9}) {
        const RatPoly& expected = k == 8 ? gamma7_k8_in_y() : gamma7_k9_in_y();
        std::vector<BigRational> at_k;
        for (const auto& cf : fit.assembled_y_coeffs)
            at_k.push_back(cf.eval(BigRational(pow2(static_cast<unsigned long>(k)))));
        if (RatPoly(std::move(at_k)) != expected)
            throw std::logic_error("fit_gamma7: assembled form contradicts the fixed-k row at k=" +
                                   std::to_string(k));
    }
    return fit;
}

/// The k = 10 rows for ranks 8..10 recovered from the weighted-sum
/// identities, plus the shape of the linear system that produced them.
struct K10HighRankFit {
    std::array<RatPoly, 3> rows;  // ranks 8, 9, 10, pinned heads included
    SolveStatus status = SolveStatus::Inconsistent;
    bool consistent = false;
    int equation_count = 0;
    int unknown_count = 0;
    int system_rank = 0;
    std::string failing_equation;
};

/// Matches coefficients of Y^0..Y^11 in the three identities
///   sum_i w_l(i) * gamma_i(Y) = rhs_l(Y),  w in {1, 2^{10-i}, 2^{20-2i}},
/// with ranks 0..7 taken from the general table at X = 2^10 and the three
/// high ranks as ansatz polynomials with pinned heads (511*Y^8; 1023*Y^9;
/// Y^11 - 1023*Y^9 with no Y^10 term). 36 equations, 26 unknowns.
inline K10HighRankFit fit_k10_high_ranks() {
    std::array<RatPoly, 8> known;
    for (int i = 0; i <= 7; ++i) known[static_cast<std::size_t>(i)] = gamma_general_at_k(i, 10);

    const std::array<RatPoly, 3> pinned = {
        RatPoly{rat(511)}.shifted(8),
        RatPoly{rat(1023)}.shifted(9),
        RatPoly{rat(1)}.shifted(11) - RatPoly{rat(1023)}.shifted(9),
    };
    const std::array<int, 3> max_unknown_deg = {7, 8, 8};
    const std::array<int, 3> base_index = {0, 8, 17};

    auto weight = [](int l, int i) -> BigRational {
        if (l == 0) return BigRational(1);
        if (l == 1) return pow2q(10 - i);
        return pow2q(20 - 2 * i);
    };
    const std::array<RatPoly, 3> rhs_poly = {
        RatPoly{rat(1)}.shifted(11),
        RatPoly{rat(1)}.shifted(11) + RatPoly{rat(1023)}.shifted(9),
        RatPoly{rat(1)}.shifted(11) + RatPoly{rat(3069)}.shifted(9) +
            RatPoly{rat(3066)}.shifted(8) + RatPoly{rat(1042440)}.shifted(7),
    };
    const std::array<std::string, 3> identity_name = {"unweighted-sum", "weight-2^(10-i)",
                                                      "weight-2^(20-2i)"};

    K10HighRankFit fit;
    fit.unknown_count = 26;

    RationalLinearSystem sys;
    for (int l = 0; l < 3; ++l) {
        for (int m = 0; m <= 11; ++m) {
            std::vector<BigRational> row(26, BigRational(0));
            BigRational rhs = rhs_poly[static_cast<std::size_t>(l)].coeff(m);
            for (int i = 0; i <= 7; ++i)
                rhs -= weight(l, i) * known[static_cast<std::size_t>(i)].coeff(m);
            for (int h = 0; h < 3; ++h) {
                int rank = 8 + h;
                rhs -= weight(l, rank) * pinned[static_cast<std::size_t>(h)].coeff(m);
                if (m <= max_unknown_deg[static_cast<std::size_t>(h)])
                    row[static_cast<std::size_t>(base_index[static_cast<std::size_t>(h)] + m)] =
                        weight(l, rank);
            }
            sys.lhs.push_back(std::move(row));
            sys.rhs.push_back(std::move(rhs));
            sys.row_labels.push_back(identity_name[static_cast<std::size_t>(l)] + ":Y^" +
                                     std::to_string(m));
        }
    }
    fit.equation_count = static_cast<int>(sys.lhs.size());

    SolveResult res = solve_exact(sys);
    fit.status = res.status;
    fit.system_rank = res.rank;
    fit.failing_equation = res.failing_equation;
    fit.consistent = res.status == SolveStatus::Unique;
    if (!fit.consistent) return fit;

    for (int h = 0; h < 3; ++h) {
        std::vector<BigRational> c;
        for (int m = 0; m <= max_unknown_deg[static_cast<std::size_t>(h)]; ++m)
            c.push_back(res.solution[static_cast<std::size_t>(
                base_index[static_cast<std::size_t>(h)] + m)]);
        fit.rows[static_cast<std::size_t>(h)] =
            RatPoly(std::move(c)) + pinned[static_cast<std::size_t>(h)];
    }
    return fit;
}

}
