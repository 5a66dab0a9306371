#pragma once

// Characters on truncated Laurent tails and the exponential sum they build.
//
// A tail stores the coefficients a_1..a_m of t = sum_{i>=1} a_i T^{-i}; only
// depth k+1 matters here because the sum is constant once coefficients past
// a_{k+1} are dropped. The base character looks at a_1 alone. The sum f is
// evaluated term by term, one character product per assignment, never via
// the rank identity it is later checked against.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "census.hpp"
#include "polysys.hpp"

namespace persym {

/// Coefficients a_1..a_depth of a Laurent tail, bit i-1 = a_i.
struct LaurentTail {
    word bits = 0;
    int depth = 1;

    LaurentTail() = default;
    LaurentTail(word bits_, int depth_) : bits(bits_), depth(depth_) {
        if (depth_ < 1 || depth_ > 64)
            throw std::invalid_argument("LaurentTail: depth must be in 1..64");
        if (depth_ < 64 && (bits_ >> depth_) != 0)
            throw std::invalid_argument("LaurentTail: coefficient beyond depth");
    }

    bool operator==(const LaurentTail&) const = default;
};

/// +1 if the T^{-1} coefficient is 0, else -1.
inline int e_char(const LaurentTail& t) { return (t.bits & 1) ? -1 : 1; }

/// Product of e_char over the tails: +1 iff the T^{-1} coefficients sum to 0.
inline int psi_char(const std::vector<LaurentTail>& ts) {
    int parity = 0;
    for (const auto& t : ts) parity ^= static_cast<int>(t.bits & 1);
    return parity ? -1 : 1;
}

/// The T^{-1} coefficient of t*p: sum_d p_d * a_{d+1} over F_2. Every
/// monomial T^d of p must see a stored coefficient a_{d+1}.
inline int residue_coeff(const LaurentTail& t, const F2Poly& p) {
    if (p.bound >= t.depth)
        throw std::invalid_argument("residue_coeff: polynomial degree bound " +
                                    std::to_string(p.bound) + " needs tail depth > " +
                                    std::to_string(p.bound));
    return static_cast<int>(std::popcount(t.bits & p.bits) & 1U);
}

/// The exponential sum: over all Y with deg Y <= k-1 and all U_1..U_n with
/// deg U_j <= 1, sum the products prod_j E(t_j * Y * U_j). 2^{k+2n} terms.
inline std::int64_t f_k_bruteforce(const std::vector<LaurentTail>& ts, int k) {
    if (k < 1 || k > 62) throw std::invalid_argument("f_k_bruteforce: k must be in 1..62");
    const int n = static_cast<int>(ts.size());
    for (const auto& t : ts)
        if (t.depth < k + 1)
            throw std::invalid_argument("f_k_bruteforce: tails must have depth >= k+1");
    if (k + 2 * n > 24)
        throw BudgetError("f_k_bruteforce n=" + std::to_string(n) + " k=" + std::to_string(k) +
                              ": k+2n=" + std::to_string(k + 2 * n) +
                              " exceeds the term budget of 24",
                          pow2(static_cast<unsigned long>(k + 2 * n)));

    // Products Y*U_j live below degree k+1; only the first k+1 tail
    // coefficients can matter.
    const word tail_mask = (word{1} << (k + 1)) - 1;
    std::vector<word> tbits;
    tbits.reserve(ts.size());
    for (const auto& t : ts) tbits.push_back(t.bits & tail_mask);

    std::int64_t acc = 0;
    const word ylimit = word{1} << k;
    const std::uint64_t ulimit = std::uint64_t{1} << (2 * n);
    for (word y = 0; y < ylimit; ++y) {
        for (std::uint64_t us = 0; us < ulimit; ++us) {
            unsigned parity = 0;
            for (int j = 0; j < n; ++j) {
                word u = (us >> (2 * j)) & 3;
                word yu = ((u & 1) ? y : 0) ^ ((u & 2) ? (y << 1) : 0);
                parity ^= std::popcount(tbits[static_cast<std::size_t>(j)] & yu) & 1U;
            }
            acc += parity ? -1 : 1;
        }
    }
    return acc;
}

}
