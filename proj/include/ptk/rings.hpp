#pragma once

/**
 * @file rings.hpp
 * @brief Coefficient rings for the polynomial engine.
 *
 * A ring is a small descriptor object that knows how to build and combine
 * its elements. Elements themselves are plain values. The descriptor carries
 * whatever context the arithmetic needs (a modulus, an adjoined square), so
 * one polynomial template serves Z, Q, F_p, Z/m, and quadratic extensions.
 */

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ptk/integer.hpp"

namespace ptk {

template <class R>
concept CoefficientRing = std::copy_constructible<R> && requires(
    const R& r, const typename R::value_type& a, const typename R::value_type& b, long n) {
    typename R::value_type;
    { r.zero() } -> std::convertible_to<typename R::value_type>;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
    { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
    { r.sub(a, b) } -> std::convertible_to<typename R::value_type>;
    { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
    { r.neg(a) } -> std::convertible_to<typename R::value_type>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.equal(a, b) } -> std::convertible_to<bool>;
    { r == r } -> std::convertible_to<bool>;
};

/// Rings where units can be inverted (`inv` throws for non-units).
template <class R>
concept InvertibleRing = CoefficientRing<R> && requires(const R& r, const typename R::value_type& a) {
    { r.inv(a) } -> std::convertible_to<typename R::value_type>;
};

/// Rings with a notion of exact division (integral domains like Z).
template <class R>
concept ExactDivisionRing = CoefficientRing<R> && requires(
    const R& r, const typename R::value_type& a, const typename R::value_type& b) {
    { r.divexact(a, b) } -> std::convertible_to<typename R::value_type>;
};

struct IntegerRing {
    using value_type = Integer;
    Integer zero() const { return Integer(0); }
    Integer one() const { return Integer(1); }
    Integer from_int(long n) const { return Integer(n); }
    Integer add(const Integer& a, const Integer& b) const { return a + b; }
    Integer sub(const Integer& a, const Integer& b) const { return a - b; }
    Integer mul(const Integer& a, const Integer& b) const { return a * b; }
    Integer neg(const Integer& a) const { return -a; }
    bool is_zero(const Integer& a) const { return a.is_zero(); }
    bool equal(const Integer& a, const Integer& b) const { return a == b; }
    Integer divexact(const Integer& a, const Integer& b) const { return ptk::divexact(a, b); }
    std::string format(const Integer& a) const { return a.to_string(); }
    int sign(const Integer& a) const { return a.sign(); }
    friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

struct RationalField {
    using value_type = Rational;
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational neg(const Rational& a) const { return -a; }
    Rational inv(const Rational& a) const { return Rational(1) / a; }
    bool is_zero(const Rational& a) const { return a.is_zero(); }
    bool equal(const Rational& a, const Rational& b) const { return a == b; }
    std::string format(const Rational& a) const { return a.to_string(); }
    int sign(const Rational& a) const { return a.sign(); }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Element of F_p: a residue in [0, p).
struct Residue {
    std::uint32_t value = 0;
    friend bool operator==(Residue, Residue) = default;
};

/// The prime field F_p for a word-sized prime p.
class PrimeField {
public:
    using value_type = Residue;

    /// Throws std::invalid_argument when p is not prime.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Residue zero() const { return {0}; }
    Residue one() const { return {1}; }
    Residue from_int(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }
    Residue from_integer(const Integer& n) const;
    Residue add(Residue a, Residue b) const {
        std::uint64_t s = std::uint64_t{a.value} + b.value;
        return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
    }
    Residue sub(Residue a, Residue b) const {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }
    Residue mul(Residue a, Residue b) const {
        return {static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % p_)};
    }
    Residue neg(Residue a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
    Residue inv(Residue a) const;
    Residue pow(Residue a, std::uint64_t e) const;
    bool is_zero(Residue a) const { return a.value == 0; }
    bool equal(Residue a, Residue b) const { return a == b; }
    std::string format(Residue a) const { return std::to_string(a.value); }
    int sign(Residue a) const { return a.value == 0 ? 0 : 1; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

/// Z/mZ for an arbitrary modulus m >= 2; used for Hensel lifting.
class IntegerModRing {
public:
    using value_type = Integer;

    explicit IntegerModRing(Integer m);

    const Integer& modulus() const { return m_; }

    Integer zero() const { return Integer(0); }
    Integer one() const { return Integer(1); }
    Integer from_int(long n) const { return ptk::mod(Integer(n), m_); }
    Integer reduce(const Integer& a) const { return ptk::mod(a, m_); }
    Integer add(const Integer& a, const Integer& b) const { return reduce(a + b); }
    Integer sub(const Integer& a, const Integer& b) const { return reduce(a - b); }
    Integer mul(const Integer& a, const Integer& b) const { return reduce(a * b); }
    Integer neg(const Integer& a) const { return reduce(-a); }
    Integer inv(const Integer& a) const { return invert_mod(a, m_); }
    bool is_zero(const Integer& a) const { return a.is_zero(); }
    bool equal(const Integer& a, const Integer& b) const { return a == b; }
    std::string format(const Integer& a) const { return a.to_string(); }
    int sign(const Integer& a) const { return a.is_zero() ? 0 : 1; }

    friend bool operator==(const IntegerModRing& a, const IntegerModRing& b) { return a.m_ == b.m_; }

private:
    Integer m_;
};

}  // namespace ptk
