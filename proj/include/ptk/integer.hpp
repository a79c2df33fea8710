#pragma once

/**
 * @file integer.hpp
 * @brief Arbitrary-precision integers and rationals.
 *
 * Thin value types over GMP. Decimal strings are the canonical
 * serialization; `Integer(to_string(x)) == x` for every x.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ptk {

class Integer {
public:
    Integer() = default;
    Integer(long value) : value_(value) {}          // NOLINT(implicit)
    Integer(int value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
    explicit Integer(const mpz_class& value) : value_(value) {}

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static Integer from_string(std::string_view text);

    std::string to_string() const { return value_.get_str(10); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return value_ == 1; }
    bool fits_long() const { return value_.fits_slong_p(); }
    long to_long() const;
    std::size_t bit_length() const;

    const mpz_class& mpz() const { return value_; }

    Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
    Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
    Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ + b.value_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ - b.value_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ * b.value_)); }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.value_)); }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Integer& x);

Integer abs(const Integer& x);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);

/// Exact quotient; throws std::domain_error when b does not divide a.
Integer divexact(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);

/// Truncating quotient and remainder (C semantics).
Integer tdiv_q(const Integer& a, const Integer& b);
/// Least nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);
/// Residue of a modulo m in (-m/2, m/2].
Integer mod_symmetric(const Integer& a, const Integer& m);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Integer invert_mod(const Integer& a, const Integer& m);

/// p-adic valuation of a nonzero integer; throws for zero.
int valuation(const Integer& a, const Integer& p);
/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& a);
bool is_probable_prime(const Integer& a);
bool is_prime(std::uint64_t n);

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}          // NOLINT(implicit)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
    Rational(const Integer& value) : value_(value.mpz()) {}  // NOLINT(implicit)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Accepts "a" or "a/b" in decimal.
    static Rational from_string(std::string_view text);
    std::string to_string() const { return value_.get_str(10); }

    Integer numerator() const { return Integer(value_.get_num()); }
    Integer denominator() const { return Integer(value_.get_den()); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    const mpq_class& mpq() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace ptk
