#include "ptk/integer.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ptk {

namespace {

bool is_decimal(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

}  // namespace

Integer Integer::from_string(std::string_view text) {
    if (!is_decimal(text)) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    if (text[0] == '+') text.remove_prefix(1);
    return Integer(mpz_class(std::string(text), 10));
}

long Integer::to_long() const {
    if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + to_string());
    return value_.get_si();
}

std::size_t Integer::bit_length() const {
    if (is_zero()) return 0;
    return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

Integer abs(const Integer& x) { return Integer(mpz_class(::abs(x.mpz()))); }

Integer gcd(const Integer& a, const Integer& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Integer(r);
}

Integer lcm(const Integer& a, const Integer& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Integer(r);
}

Integer pow(const Integer& base, unsigned long exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
    return Integer(r);
}

Integer divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!divides(b, a)) {
        throw std::domain_error("inexact division: " + a.to_string() + " / " + b.to_string());
    }
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Integer(r);
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return mpz_divisible_p(a.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

Integer tdiv_q(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    mpz_class r;
    mpz_tdiv_q(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Integer(r);
}

Integer mod(const Integer& a, const Integer& m) {
    if (m.sign() <= 0) throw std::domain_error("modulus must be positive");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t());
    return Integer(r);
}

Integer mod_symmetric(const Integer& a, const Integer& m) {
    Integer r = mod(a, m);
    if (r * Integer(2) > m) r -= m;
    return r;
}

Integer invert_mod(const Integer& a, const Integer& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t()) == 0) {
        throw std::domain_error("not invertible: " + a.to_string() + " mod " + m.to_string());
    }
    return Integer(r);
}

int valuation(const Integer& a, const Integer& p) {
    if (a.is_zero()) throw std::domain_error("valuation of zero");
    mpz_class rest;
    return static_cast<int>(
        mpz_remove(rest.get_mpz_t(), a.mpz().get_mpz_t(), p.mpz().get_mpz_t()));
}

Integer isqrt(const Integer& a) {
    if (a.sign() < 0) throw std::domain_error("square root of a negative integer");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), a.mpz().get_mpz_t());
    return Integer(r);
}

bool is_probable_prime(const Integer& a) {
    return mpz_probab_prime_p(a.mpz().get_mpz_t(), 30) != 0;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    value_ = mpq_class(num.mpz(), den.mpz());
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::from_string(text));
    return Rational(Integer::from_string(text.substr(0, slash)),
                    Integer::from_string(text.substr(slash + 1)));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace ptk
