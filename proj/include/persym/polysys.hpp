#pragma once

// Solution counting for the degree-bounded bilinear system
//
//   sum_{i=1..q} Y_i * U_j^{(i)} = 0   for j = 1..n,
//   deg Y_i <= k-1, deg U_j^{(i)} <= 1,
//
// by two independent routes: full enumeration of every assignment, and
// marginalization over the U side. Fixing all U's makes the map Y -> result
// coefficients linear over F_2 with input dimension qk and output dimension
// n(k+1) (a product Y*U reaches degree k, so each equation contributes k+1
// output coordinates), so the Y solutions number 2^{qk - rank}.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bigint.hpp"
#include "census.hpp"
#include "gf2.hpp"

namespace persym {

/// Polynomial over F_2, bit d = coefficient of T^d. The degree bound is the
/// largest degree the value is allowed to use, not its actual degree.
struct F2Poly {
    word bits = 0;
    int bound = 0;

    F2Poly() = default;
    F2Poly(word bits_, int bound_) : bits(bits_), bound(bound_) {
        if (bound_ < 0 || bound_ > 63) throw std::invalid_argument("F2Poly: bound must be in 0..63");
        if (bound_ < 63 && (bits_ >> (bound_ + 1)) != 0)
            throw std::invalid_argument("F2Poly: coefficient above the degree bound");
    }

    bool operator==(const F2Poly&) const = default;
};

/// Carry-less product over F_2.
inline F2Poly poly_mul(const F2Poly& a, const F2Poly& b) {
    if (a.bound + b.bound > 63) throw std::invalid_argument("poly_mul: product bound exceeds 63");
    word acc = 0;
    for (word rest = a.bits; rest != 0; rest &= rest - 1) {
        int d = std::countr_zero(rest);
        acc ^= b.bits << d;
    }
    return F2Poly(acc, a.bound + b.bound);
}

namespace detail {

inline void check_polysys_args(int q, int n, int k) {
    if (q < 1) throw std::invalid_argument("count_solutions: q must be >= 1");
    if (n < 0) throw std::invalid_argument("count_solutions: negative n");
    if (k < 1) throw std::invalid_argument("count_solutions: k must be >= 1");
}

}

/// Enumerates every assignment of the q Y's and the qn U's and tests the n
/// equations directly. Assignment word layout: bits [i*k, i*k+k) hold Y_i,
/// followed by two bits per (j, i) pair for U_j^{(i)}.
inline BigInt count_solutions_bruteforce(int q, int n, int k) {
    detail::check_polysys_args(q, n, k);
    long total_bits = static_cast<long>(q) * (k + 2 * n);
    if (total_bits > 26)
        throw BudgetError("count_solutions_bruteforce q=" + std::to_string(q) + " n=" +
                              std::to_string(n) + " k=" + std::to_string(k) + ": q(k+2n)=" +
                              std::to_string(total_bits) + " exceeds the enumeration budget of 26",
                          pow2(static_cast<unsigned long>(total_bits)));

    const std::uint64_t limit = std::uint64_t{1} << total_bits;
    const int u_base = q * k;
    const word ymask = (k == 64) ? ~word{0} : ((word{1} << k) - 1);
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < limit; ++a) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            word acc = 0;
            for (int i = 0; i < q; ++i) {
                word y = (a >> (i * k)) & ymask;
                word u = (a >> (u_base + 2 * (j * q + i))) & 3;
                if (u & 1) acc ^= y;
                if (u & 2) acc ^= y << 1;
            }
            ok = acc == 0;
        }
        if (ok) ++count;
    }
    return BigInt(static_cast<unsigned long>(count));
}

namespace detail {

// Rank of the fixed-U linear map, computed from its transpose: one row per
// output coordinate (equation j, result degree e), as a functional on the
// packed Y bits. With stripe masks carrying the constant and T coefficients
// of U_j^{(i)} at bit i*k, the (j, e) row is
//   (e <= k-1 ? mask0_j << e : 0) ^ (e >= 1 ? mask1_j << (e-1) : 0).
inline int marginal_rank(std::uint64_t u_assignment, int q, int n, int k) {
    EchelonBasis basis(q * k);
    for (int j = 0; j < n; ++j) {
        word mask0 = 0, mask1 = 0;
        for (int i = 0; i < q; ++i) {
            word u = (u_assignment >> (2 * (j * q + i))) & 3;
            mask0 |= (u & 1) << (i * k);
            mask1 |= ((u >> 1) & 1) << (i * k);
        }
        for (int e = 0; e <= k; ++e) {
            word row = 0;
            if (e <= k - 1) row ^= mask0 << e;
            if (e >= 1) row ^= mask1 << (e - 1);
            basis.insert(row);
        }
    }
    return basis.size();
}

}

/// Sums 2^{qk - rank(M_U)} over all 2^{2nq} U-assignments.
inline BigInt count_solutions_marginalized(int q, int n, int k, int workers = 1) {
    detail::check_polysys_args(q, n, k);
    if (workers < 1) throw std::invalid_argument("count_solutions: workers must be >= 1");
    long u_bits = 2L * n * q;
    if (u_bits > 26)
        throw BudgetError("count_solutions_marginalized q=" + std::to_string(q) + " n=" +
                              std::to_string(n) + " k=" + std::to_string(k) + ": 2nq=" +
                              std::to_string(u_bits) + " exceeds the marginalization budget of 26",
                          pow2(static_cast<unsigned long>(u_bits)));
    if (static_cast<long>(q) * k > 64)
        throw BudgetError("count_solutions_marginalized q=" + std::to_string(q) + " k=" +
                              std::to_string(k) + ": qk exceeds the 64-bit Y space",
                          pow2(static_cast<unsigned long>(u_bits)));

    const std::uint64_t limit = std::uint64_t{1} << u_bits;
    using Hist = std::array<std::uint64_t, 65>;

    auto run = [q, n, k](std::uint64_t from, std::uint64_t to, Hist& hist) {
        for (std::uint64_t u = from; u < to; ++u) ++hist[detail::marginal_rank(u, q, n, k)];
    };

    Hist total{};
    if (workers == 1 || limit < static_cast<std::uint64_t>(2 * workers)) {
        run(0, limit, total);
    } else {
        std::uint64_t nw = static_cast<std::uint64_t>(workers);
        std::vector<Hist> parts(static_cast<std::size_t>(workers), Hist{});
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (std::uint64_t w = 0; w < nw; ++w)
            threads.emplace_back([&, w] {
                run(limit * w / nw, limit * (w + 1) / nw, parts[static_cast<std::size_t>(w)]);
            });
        for (auto& t : threads) t.join();
        for (const auto& part : parts)
            for (int r = 0; r <= 64; ++r) total[static_cast<std::size_t>(r)] += part[static_cast<std::size_t>(r)];
    }

    BigInt acc(0);
    for (int r = 0; r <= 64; ++r)
        if (total[static_cast<std::size_t>(r)] != 0)
            acc += BigInt(static_cast<unsigned long>(total[static_cast<std::size_t>(r)])) *
                   pow2(static_cast<unsigned long>(q * k - r));
    return acc;
}

}
