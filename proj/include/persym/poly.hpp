#pragma once

// Dense univariate polynomials with exact rational coefficients. Used both
// for polynomials in X = 2^k (coefficient functions of k) and in Y = 2^n
// (rank-count polynomials of n); the variable is purely positional.

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace persym {

class RatPoly {
public:
    RatPoly() = default;

    RatPoly(std::initializer_list<BigRational> coeffs_low_to_high)
        : c_(coeffs_low_to_high) {
        normalize();
    }

    explicit RatPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static RatPoly constant(const BigRational& v) { return RatPoly({v}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigRational& coeff(int d) const {
        static const BigRational zero(0);
        if (d < 0) throw std::out_of_range("RatPoly: negative degree");
        return d >= static_cast<int>(c_.size()) ? zero : c_[static_cast<std::size_t>(d)];
    }

    BigRational eval(const BigRational& x) const {
        BigRational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    RatPoly operator+(const RatPoly& o) const {
        std::vector<BigRational> r(std::max(c_.size(), o.c_.size()), BigRational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RatPoly(std::move(r));
    }

    RatPoly operator-(const RatPoly& o) const { return *this + (-o); }

    RatPoly operator-() const {
        std::vector<BigRational> r(c_);
        for (auto& v : r) v = -v;
        return RatPoly(std::move(r));
    }

    RatPoly operator*(const RatPoly& o) const {
        if (is_zero() || o.is_zero()) return RatPoly();
        std::vector<BigRational> r(c_.size() + o.c_.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RatPoly(std::move(r));
    }

    RatPoly operator*(const BigRational& s) const {
        std::vector<BigRational> r(c_);
        for (auto& v : r) v *= s;
        return RatPoly(std::move(r));
    }

    RatPoly operator/(const BigRational& s) const {
        if (s == 0) throw std::invalid_argument("RatPoly: division by zero");
        std::vector<BigRational> r(c_);
        for (auto& v : r) v /= s;
        return RatPoly(std::move(r));
    }

    // Multiply by x^sh.
    RatPoly shifted(int sh) const {
        if (sh < 0) throw std::invalid_argument("RatPoly: negative shift");
        if (is_zero()) return RatPoly();
        std::vector<BigRational> r(static_cast<std::size_t>(sh), BigRational(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return RatPoly(std::move(r));
    }

    bool operator==(const RatPoly&) const = default;

    // Coefficients low to high as exact "p/q" strings.
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(v.get_str());
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigRational> c_;
};

inline RatPoly operator*(const BigRational& s, const RatPoly& p) { return p * s; }

}
