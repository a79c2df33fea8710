#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials body(x) * x^shift.
 *
 * The body has a nonzero constant term unless the element is zero, which
 * makes the representation unique. Exact division by a polynomial with a
 * nonzero constant term is ordinary polynomial division on the body.
 */

#include <stdexcept>
#include <utility>

#include "ptk/polynomial.hpp"

namespace ptk {

template <CoefficientRing R>
class LaurentPolynomial {
public:
    using value_type = typename R::value_type;

    LaurentPolynomial(Polynomial<R> body, int shift) : body_(std::move(body)), shift_(shift) { normalize(); }
    explicit LaurentPolynomial(Polynomial<R> body) : LaurentPolynomial(std::move(body), 0) {}

    const Polynomial<R>& body() const { return body_; }
    int shift() const { return shift_; }
    bool is_zero() const { return body_.is_zero(); }

    /// Lowest and highest exponents present; both 0 for the zero element.
    int low_degree() const { return shift_; }
    int high_degree() const { return is_zero() ? 0 : shift_ + body_.degree(); }

    value_type coeff(int j) const { return body_.coeff(j - shift_); }

    /// Coefficient of x^j equals that of x^-j for every j.
    bool is_palindromic() const {
        if (is_zero()) return true;
        if (low_degree() != -high_degree()) return false;
        const R& ring = body_.ring();
        for (int j = 0; j <= high_degree(); ++j) {
            if (!ring.equal(coeff(j), coeff(-j))) return false;
        }
        return true;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        const int s = std::min(a.shift_, b.shift_);
        return LaurentPolynomial(a.body_.shift(a.shift_ - s) + b.body_.shift(b.shift_ - s), s);
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        const int s = std::min(a.shift_, b.shift_);
        return LaurentPolynomial(a.body_.shift(a.shift_ - s) - b.body_.shift(b.shift_ - s), s);
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return LaurentPolynomial(a.body_ * b.body_, a.shift_ + b.shift_);
    }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.shift_ == b.shift_ && a.body_ == b.body_;
    }

private:
    void normalize() {
        if (body_.is_zero()) {
            shift_ = 0;
            return;
        }
        int k = 0;
        const R& ring = body_.ring();
        while (ring.is_zero(body_.coeffs()[static_cast<std::size_t>(k)])) ++k;
        if (k > 0) {
            std::vector<value_type> cs(body_.coeffs().begin() + k, body_.coeffs().end());
            body_ = Polynomial<R>(ring, std::move(cs), body_.var());
            shift_ += k;
        }
    }

    Polynomial<R> body_;
    int shift_ = 0;
};

/// f(x + 1/x) as a Laurent polynomial in x; always palindromic.
template <CoefficientRing R>
LaurentPolynomial<R> substitute_symmetric(const Polynomial<R>& f, const std::string& var = "x") {
    const R& ring = f.ring();
    if (f.is_zero()) return LaurentPolynomial<R>(Polynomial<R>(ring, var), 0);
    const int d = f.degree();
    // x^d * f(x + 1/x) = sum_i c_i (x^2 + 1)^i x^(d - i)
    const auto x2p1 = Polynomial<R>::from_ints(ring, {1, 0, 1}, var);
    Polynomial<R> acc(ring, var);
    Polynomial<R> power = Polynomial<R>::constant(ring, ring.one(), var);
    for (int i = 0; i <= d; ++i) {
        acc += power.scale(f.coeffs()[static_cast<std::size_t>(i)]).shift(d - i);
        power = power * x2p1;
    }
    return LaurentPolynomial<R>(acc, -d);
}

}  // namespace ptk
