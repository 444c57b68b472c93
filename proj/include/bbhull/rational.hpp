#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "bbhull/errors.hpp"

namespace bbhull {

using Integer = mpz_class;

/// Exact rational number backed by GMP.
///
/// The value is always kept in lowest terms with a positive denominator, so
/// two rationals are equal iff their numerators and denominators are equal.
/// Division by zero throws ArithmeticError instead of trapping.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) {  // NOLINT: implicit on purpose, integers are rationals
        if constexpr (std::is_signed_v<T>) {
            value_ = static_cast<long>(v);
        } else {
            value_ = static_cast<unsigned long>(v);
        }
    }

    Rational(const Integer& v) : value_(v) {}  // NOLINT
    Rational(const Integer& num, const Integer& den);

    /// Parses "p" or "p/q" with an optional leading '-'.
    static Rational parse(std::string_view text);

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const;

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Bit length of numerator plus denominator; used as pivot heuristic.
    std::size_t bit_size() const;

    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    Rational operator-() const;
    Rational abs() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

}  // namespace bbhull
