#pragma once

/**
 * @file quad_ext.hpp
 * @brief Quadratic extensions R[sqrt(D)] = R[t]/(t^2 - D).
 *
 * Elements are pairs (a, b) standing for a + b*sqrt(D). D is any element of
 * the base ring, so the same code covers Z[sqrt(3)] and F_3[v][b] with
 * b^2 = (v^2-1)(v^2-v-1).
 */

#include <ostream>
#include <utility>

#include "ptk/rings.hpp"

namespace ptk {

template <class V>
struct QuadElem {
    V a;  ///< rational ("pure") part
    V b;  ///< coefficient of sqrt(D)
};

template <CoefficientRing R>
class QuadRing {
public:
    using base_value = typename R::value_type;
    using value_type = QuadElem<base_value>;

    QuadRing(R base, base_value d) : base_(std::move(base)), d_(std::move(d)) {}

    const R& base() const { return base_; }
    const base_value& adjoined_square() const { return d_; }

    value_type make(base_value a, base_value b) const { return {std::move(a), std::move(b)}; }
    value_type embed(const base_value& a) const { return {a, base_.zero()}; }
    /// The element sqrt(D) itself.
    value_type root() const { return {base_.zero(), base_.one()}; }

    value_type zero() const { return {base_.zero(), base_.zero()}; }
    value_type one() const { return {base_.one(), base_.zero()}; }
    value_type from_int(long n) const { return {base_.from_int(n), base_.zero()}; }
    value_type add(const value_type& x, const value_type& y) const {
        return {base_.add(x.a, y.a), base_.add(x.b, y.b)};
    }
    value_type sub(const value_type& x, const value_type& y) const {
        return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)};
    }
    value_type neg(const value_type& x) const { return {base_.neg(x.a), base_.neg(x.b)}; }
    value_type mul(const value_type& x, const value_type& y) const {
        return {base_.add(base_.mul(x.a, y.a), base_.mul(base_.mul(x.b, y.b), d_)),
                base_.add(base_.mul(x.a, y.b), base_.mul(x.b, y.a))};
    }
    /// a + b*sqrt(D) -> a - b*sqrt(D).
    value_type conj(const value_type& x) const { return {x.a, base_.neg(x.b)}; }
    /// x * conj(x) = a^2 - b^2 D, an element of the base ring.
    base_value norm(const value_type& x) const {
        return base_.sub(base_.mul(x.a, x.a), base_.mul(base_.mul(x.b, x.b), d_));
    }
    bool is_zero(const value_type& x) const { return base_.is_zero(x.a) && base_.is_zero(x.b); }
    bool equal(const value_type& x, const value_type& y) const {
        return base_.equal(x.a, y.a) && base_.equal(x.b, y.b);
    }

    friend bool operator==(const QuadRing& x, const QuadRing& y) {
        return x.base_ == y.base_ && x.base_.equal(x.d_, y.d_);
    }

private:
    R base_;
    base_value d_;
};

/// Binary exponentiation in the extension ring; quad_pow(x, 0) = 1.
template <CoefficientRing R>
typename QuadRing<R>::value_type quad_pow(const QuadRing<R>& ring, typename QuadRing<R>::value_type x,
                                          unsigned long k) {
    auto result = ring.one();
    while (k > 0) {
        if (k & 1UL) result = ring.mul(result, x);
        k >>= 1UL;
        if (k > 0) x = ring.mul(x, x);
    }
    return result;
}

inline std::ostream& operator<<(std::ostream& os, const QuadElem<Integer>& x) {
    return os << x.a << (x.b.sign() < 0 ? " - " : " + ") << abs(x.b) << "*sqrt(D)";
}

}  // namespace ptk
