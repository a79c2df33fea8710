#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a pluggable coefficient ring.
 *
 * Coefficients are stored in ascending degree; the leading (last) coefficient
 * is nonzero unless the polynomial is zero, which is the empty vector. The
 * variable name is a label for printing and serialization only: equality and
 * arithmetic ignore it.
 */

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptk/rings.hpp"

namespace ptk {

template <CoefficientRing R>
class Polynomial {
public:
    using ring_type = R;
    using value_type = typename R::value_type;

    explicit Polynomial(R ring, std::string var = "x") : ring_(std::move(ring)), var_(std::move(var)) {}

    Polynomial(R ring, std::vector<value_type> coeffs, std::string var = "x")
        : ring_(std::move(ring)), var_(std::move(var)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(const R& ring, const value_type& c, std::string var = "x") {
        return Polynomial(ring, std::vector<value_type>{c}, std::move(var));
    }

    static Polynomial monomial(const R& ring, const value_type& c, int k, std::string var = "x") {
        if (k < 0) throw std::invalid_argument("negative exponent in monomial");
        std::vector<value_type> cs(static_cast<std::size_t>(k) + 1, ring.zero());
        cs.back() = c;
        return Polynomial(ring, std::move(cs), std::move(var));
    }

    /// The polynomial x in the given variable.
    static Polynomial variable(const R& ring, std::string var = "x") {
        return monomial(ring, ring.one(), 1, std::move(var));
    }

    /// Builds from small integer coefficients, ascending degree.
    static Polynomial from_ints(const R& ring, const std::vector<long>& cs, std::string var = "x") {
        std::vector<value_type> out;
        out.reserve(cs.size());
        for (long c : cs) out.push_back(ring.from_int(c));
        return Polynomial(ring, std::move(out), std::move(var));
    }

    const R& ring() const { return ring_; }
    const std::string& var() const { return var_; }
    const std::vector<value_type>& coeffs() const { return coeffs_; }

    Polynomial with_var(std::string var) const {
        Polynomial r = *this;
        r.var_ = std::move(var);
        return r;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && ring_.equal(coeffs_[0], ring_.one()); }

    value_type coeff(int i) const {
        if (i < 0 || i > degree()) return ring_.zero();
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const value_type& lc() const {
        if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_.zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = ring_.add(coeffs_[i], o.coeffs_[i]);
        adopt_var(o);
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_.zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = ring_.sub(coeffs_[i], o.coeffs_[i]);
        adopt_var(o);
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& c : r.coeffs_) c = r.ring_.neg(c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.ring_, a.is_constant() && !b.is_constant() ? b.var_ : a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        const R& ring = a.ring_;
        std::vector<value_type> out(a.coeffs_.size() + b.coeffs_.size() - 1, ring.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (ring.is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] = ring.add(out[i + j], ring.mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        r.coeffs_ = std::move(out);
        r.trim();
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Multiplies every coefficient by c.
    Polynomial scale(const value_type& c) const {
        Polynomial r = *this;
        for (auto& x : r.coeffs_) x = ring_.mul(x, c);
        r.trim();
        return r;
    }

    /// Multiplies by x^k.
    Polynomial shift(int k) const {
        if (is_zero() || k == 0) return *this;
        if (k < 0) throw std::invalid_argument("negative shift");
        Polynomial r = *this;
        r.coeffs_.insert(r.coeffs_.begin(), static_cast<std::size_t>(k), ring_.zero());
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (!a.ring_.equal(a.coeffs_[i], b.coeffs_[i])) return false;
        }
        return true;
    }

private:
    void trim() {
        while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    void adopt_var(const Polynomial& o) {
        if (is_constant() || var_.empty()) var_ = o.var_;
    }

    R ring_;
    std::string var_;
    std::vector<value_type> coeffs_;
};

using ZPoly = Polynomial<IntegerRing>;
using QPoly = Polynomial<RationalField>;
using FpPoly = Polynomial<PrimeField>;
using ZmPoly = Polynomial<IntegerModRing>;

/// Ring of polynomials over R, so polynomials can themselves be coefficients.
template <CoefficientRing R>
struct PolynomialRing {
    using value_type = Polynomial<R>;
    R base;
    std::string var = "x";

    value_type zero() const { return value_type(base, var); }
    value_type one() const { return value_type::constant(base, base.one(), var); }
    value_type from_int(long n) const { return value_type::constant(base, base.from_int(n), var); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) { return a.base == b.base; }
};

// ---------------------------------------------------------------------------
// Generic operations
// ---------------------------------------------------------------------------

/// Formal derivative.
template <CoefficientRing R>
Polynomial<R> derivative(const Polynomial<R>& f) {
    const R& ring = f.ring();
    std::vector<typename R::value_type> out;
    for (int i = 1; i <= f.degree(); ++i) {
        out.push_back(ring.mul(ring.from_int(i), f.coeffs()[static_cast<std::size_t>(i)]));
    }
    return Polynomial<R>(ring, std::move(out), f.var());
}

/// Horner evaluation at a point of the coefficient ring.
template <CoefficientRing R>
typename R::value_type eval(const Polynomial<R>& f, const typename R::value_type& x) {
    const R& ring = f.ring();
    auto acc = ring.zero();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = ring.add(ring.mul(acc, x), *it);
    return acc;
}

/// Horner evaluation in an extension ring S; `embed` maps coefficients into S.
template <CoefficientRing R, CoefficientRing S, class Embed>
typename S::value_type eval_in(const Polynomial<R>& f, const S& target, const typename S::value_type& x,
                               Embed embed) {
    auto acc = target.zero();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = target.add(target.mul(acc, x), embed(*it));
    }
    return acc;
}

/// Applies a coefficient map, producing a polynomial over another ring.
template <CoefficientRing S, CoefficientRing R, class Map>
Polynomial<S> map_coeffs(const Polynomial<R>& f, const S& target, Map map) {
    std::vector<typename S::value_type> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(map(c));
    return Polynomial<S>(target, std::move(out), f.var());
}

template <CoefficientRing R>
Polynomial<R> pow(const Polynomial<R>& f, unsigned k) {
    Polynomial<R> result = Polynomial<R>::constant(f.ring(), f.ring().one(), f.var());
    Polynomial<R> base = f;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

/**
 * Division with remainder: f = q*g + r, deg r < deg g.
 *
 * Needs only that lc(g) is a unit, so it also works over Z/m for monic
 * divisors. Throws std::domain_error for g = 0.
 */
template <InvertibleRing R>
std::pair<Polynomial<R>, Polynomial<R>> divrem(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    const R& ring = f.ring();
    if (f.degree() < g.degree()) return {Polynomial<R>(ring, f.var()), f};
    const auto lc_inv = ring.inv(g.lc());
    std::vector<typename R::value_type> rem = f.coeffs();
    const int dg = g.degree();
    std::vector<typename R::value_type> quot(static_cast<std::size_t>(f.degree() - dg + 1), ring.zero());
    for (int i = f.degree(); i >= dg; --i) {
        const auto& top = rem[static_cast<std::size_t>(i)];
        if (ring.is_zero(top)) continue;
        const auto c = ring.mul(top, lc_inv);
        quot[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - dg + j)];
            slot = ring.sub(slot, ring.mul(c, g.coeffs()[static_cast<std::size_t>(j)]));
        }
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Polynomial<R>(ring, std::move(quot), f.var()), Polynomial<R>(ring, std::move(rem), f.var())};
}

template <InvertibleRing R>
Polynomial<R> rem(const Polynomial<R>& f, const Polynomial<R>& g) {
    return divrem(f, g).second;
}

/// Quotient of an exact division; throws std::domain_error on a nonzero remainder.
template <InvertibleRing R>
Polynomial<R> divexact(const Polynomial<R>& f, const Polynomial<R>& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

template <InvertibleRing R>
Polynomial<R> make_monic(const Polynomial<R>& f) {
    if (f.is_zero()) return f;
    return f.scale(f.ring().inv(f.lc()));
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <InvertibleRing R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
    while (!b.is_zero()) {
        Polynomial<R> r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <CoefficientRing R>
struct ExtendedGcd {
    Polynomial<R> gcd;
    Polynomial<R> s;  ///< s*a + t*b = gcd
    Polynomial<R> t;
};

/// Extended Euclid over a field; the gcd is monic.
template <InvertibleRing R>
ExtendedGcd<R> xgcd(const Polynomial<R>& a, const Polynomial<R>& b) {
    const R& ring = a.ring();
    Polynomial<R> r0 = a, r1 = b;
    Polynomial<R> s0 = Polynomial<R>::constant(ring, ring.one(), a.var()), s1(ring, a.var());
    Polynomial<R> t0(ring, a.var()), t1 = Polynomial<R>::constant(ring, ring.one(), a.var());
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const auto inv = ring.inv(r0.lc());
    return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

template <InvertibleRing R>
Polynomial<R> mulmod(const Polynomial<R>& a, const Polynomial<R>& b, const Polynomial<R>& m) {
    return rem(a * b, m);
}

/// base^e mod m for an arbitrary-precision exponent e >= 0.
template <InvertibleRing R>
Polynomial<R> powmod(const Polynomial<R>& base, const Integer& e, const Polynomial<R>& m) {
    if (e.sign() < 0) throw std::invalid_argument("negative exponent");
    const R& ring = base.ring();
    Polynomial<R> result = rem(Polynomial<R>::constant(ring, ring.one(), base.var()), m);
    Polynomial<R> b = rem(base, m);
    const std::size_t bits = e.bit_length();
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.mpz().get_mpz_t(), i)) result = mulmod(result, b, m);
    }
    return result;
}

template <CoefficientRing R>
struct PseudoDivision {
    Polynomial<R> quotient;
    Polynomial<R> remainder;
    typename R::value_type scale;
};

/**
 * Pseudo-division over an integral domain.
 *
 * scale = lc(g)^(deg f - deg g + 1), and scale*f = q*g + r with
 * deg r < deg g. When deg f < deg g the scale is 1 and r = f.
 */
template <CoefficientRing R>
PseudoDivision<R> pseudo_divrem(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (g.is_zero()) throw std::domain_error("pseudo-division by the zero polynomial");
    const R& ring = f.ring();
    if (f.degree() < g.degree()) return {Polynomial<R>(ring, f.var()), f, ring.one()};
    const int dg = g.degree();
    const int steps = f.degree() - dg + 1;
    const auto& lcg = g.lc();
    std::vector<typename R::value_type> rem = f.coeffs();
    std::vector<typename R::value_type> quot(static_cast<std::size_t>(steps), ring.zero());
    for (int i = f.degree(); i >= dg; --i) {
        const auto top = rem[static_cast<std::size_t>(i)];
        for (auto& c : quot) c = ring.mul(c, lcg);
        for (int j = 0; j < i; ++j) rem[static_cast<std::size_t>(j)] = ring.mul(rem[static_cast<std::size_t>(j)], lcg);
        rem[static_cast<std::size_t>(i)] = ring.zero();
        quot[static_cast<std::size_t>(i - dg)] = top;
        if (ring.is_zero(top)) continue;
        for (int j = 0; j < dg; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - dg + j)];
            slot = ring.sub(slot, ring.mul(top, g.coeffs()[static_cast<std::size_t>(j)]));
        }
    }
    rem.resize(static_cast<std::size_t>(dg));
    auto scale = ring.one();
    for (int i = 0; i < steps; ++i) scale = ring.mul(scale, lcg);
    return {Polynomial<R>(ring, std::move(quot), f.var()), Polynomial<R>(ring, std::move(rem), f.var()), scale};
}

/**
 * den^deg(f) * f(num/den): substitution of a rational function with the
 * denominator cleared. The result is a polynomial in the variable of num.
 */
template <CoefficientRing R>
Polynomial<R> substitute_rational(const Polynomial<R>& f, const Polynomial<R>& num, const Polynomial<R>& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator in substitution");
    const R& ring = f.ring();
    const std::string& var = num.is_constant() ? den.var() : num.var();
    Polynomial<R> acc(ring, var);
    if (f.is_zero()) return acc;
    const int d = f.degree();
    // Horner in the homogenized form: acc = acc*num + c_i*den^(d-i).
    Polynomial<R> den_pow = Polynomial<R>::constant(ring, ring.one(), var);
    std::vector<Polynomial<R>> den_powers;
    den_powers.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        den_powers.push_back(den_pow);
        den_pow = den_pow * den;
    }
    for (int i = d; i >= 0; --i) {
        acc = acc * num + den_powers[static_cast<std::size_t>(d - i)].scale(f.coeffs()[static_cast<std::size_t>(i)]);
    }
    return acc.with_var(var);
}

/// Composition f(g).
template <CoefficientRing R>
Polynomial<R> compose(const Polynomial<R>& f, const Polynomial<R>& g) {
    const R& ring = f.ring();
    Polynomial<R> acc(ring, g.var());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * g + Polynomial<R>::constant(ring, *it, g.var());
    }
    return acc.with_var(g.var());
}

}  // namespace ptk
