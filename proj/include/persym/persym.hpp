#pragma once

// The doubled-row block matrix family and its defining coefficient tuples.
//
// A tuple fixes n blocks of k+1 bits alpha_1..alpha_{k+1}. Block j expands
// into two matrix rows, (alpha_1 .. alpha_k) and its shift
// (alpha_2 .. alpha_{k+1}); the blocks stack into a 2n x k matrix over
// GF(2). Tuples pack little-endian: bit (j-1)*(k+1) + (i-1) of the index
// holds alpha_i of block j.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "gf2.hpp"

namespace persym {

class CoeffTuple {
public:
    // All-zero tuple with n blocks over width k. n = 0 is allowed and
    // yields the empty 0 x k matrix.
    CoeffTuple(int n, int k) : n_(n), k_(k) {
        if (n < 0) throw std::invalid_argument("CoeffTuple: negative block count");
        if (k < 1 || k > kMaxCols)
            throw std::invalid_argument("CoeffTuple: k must be in 1..64");
        bits_.assign(static_cast<std::size_t>(n) * (k + 1), false);
    }

    static CoeffTuple from_bits(int n, int k, std::vector<bool> bits) {
        CoeffTuple t(n, k);
        if (bits.size() != t.bits_.size())
            throw std::invalid_argument("CoeffTuple: expected exactly n*(k+1) bits, got " +
                                        std::to_string(bits.size()));
        t.bits_ = std::move(bits);
        return t;
    }

    int blocks() const { return n_; }
    int cols() const { return k_; }
    const std::vector<bool>& bits() const { return bits_; }

    // alpha_i of block j; 1 <= j <= n, 1 <= i <= k+1.
    bool coeff(int j, int i) const { return bits_[bit_index(j, i)]; }
    void set_coeff(int j, int i, bool v) { bits_[bit_index(j, i)] = v; }

    bool operator==(const CoeffTuple&) const = default;

private:
    std::size_t bit_index(int j, int i) const {
        if (j < 1 || j > n_ || i < 1 || i > k_ + 1)
            throw std::out_of_range("CoeffTuple: coefficient index");
        return static_cast<std::size_t>(j - 1) * (k_ + 1) + (i - 1);
    }

    int n_, k_;
    std::vector<bool> bits_;
};

// Both rows of one block from its packed k+1 coefficient bits; requires
// k <= 63 so the packed value fits one word.
inline std::pair<word, word> block_rows(word packed, int k) {
    if (k < 1 || k > 63) throw std::invalid_argument("block_rows: k must be in 1..63");
    if ((packed >> (k + 1)) != 0)
        throw std::invalid_argument("block_rows: packed value has bits beyond k+1");
    word mask = (word(1) << k) - 1;
    return {packed & mask, packed >> 1};
}

inline GF2Matrix build_matrix(const CoeffTuple& t) {
    int n = t.blocks(), k = t.cols();
    GF2Matrix m(2 * n, k);
    for (int j = 1; j <= n; ++j) {
        word top = 0, bottom = 0;
        for (int c = 0; c < k; ++c) {
            if (t.coeff(j, c + 1)) top |= word(1) << c;
            if (t.coeff(j, c + 2)) bottom |= word(1) << c;
        }
        m.set_row(2 * j - 2, top);
        m.set_row(2 * j - 1, bottom);
    }
    return m;
}

inline CoeffTuple tuple_from_index(const BigInt& idx, int n, int k) {
    CoeffTuple t(n, k);
    std::size_t nbits = static_cast<std::size_t>(n) * (k + 1);
    if (idx < 0 || idx >= pow2(nbits))
        throw std::invalid_argument("tuple_from_index: index out of range for n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    std::vector<bool> bits(nbits, false);
    for (std::size_t b = 0; b < nbits; ++b)
        bits[b] = mpz_tstbit(idx.get_mpz_t(), b) != 0;
    return CoeffTuple::from_bits(n, k, std::move(bits));
}

inline BigInt index_of(const CoeffTuple& t) {
    BigInt idx = 0;
    const auto& bits = t.bits();
    for (std::size_t b = 0; b < bits.size(); ++b)
        if (bits[b]) mpz_setbit(idx.get_mpz_t(), b);
    return idx;
}

}
