#pragma once

// Exact arithmetic helpers on top of GMP. Everything in this project is
// integer or rational; no floating point is used anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace persym {

using BigInt = mpz_class;
using BigRational = mpq_class;

// 2^e for e >= 0.
inline BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// 2^e as an exact rational; e may be negative.
inline BigRational pow2q(long e) {
    if (e >= 0) return BigRational(pow2(static_cast<unsigned long>(e)));
    BigRational r(BigInt(1), pow2(static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

inline BigRational rat(long num, long den = 1) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const BigRational& q) { return q.get_den() == 1; }

// Exact conversion; a nontrivial denominator is a hard failure.
inline BigInt to_integer(const BigRational& q) {
    if (!is_integral(q))
        throw std::domain_error("expected an integer, got " + q.get_str());
    return q.get_num();
}

// c * 2^m, double-entry checked against a redundant decimal transcription.
inline BigInt checked_pow2_multiple(long c, unsigned long m, const char* decimal) {
    BigInt v = BigInt(c) * pow2(m);
    if (v != BigInt(decimal))
        throw std::logic_error(std::string("constant transcription mismatch: ") +
                               std::to_string(c) + "*2^" + std::to_string(m) +
                               " != " + decimal);
    return v;
}

}
