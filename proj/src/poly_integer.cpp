#include "ptk/poly_integer.hpp"

#include <stdexcept>

namespace ptk {

namespace {

const IntegerRing kZ{};

ZPoly divide_by_scalar(const ZPoly& f, const Integer& c) {
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) out.push_back(ptk::divexact(x, c));
    return ZPoly(kZ, std::move(out), f.var());
}

bool odd(int n) { return (n & 1) != 0; }

}  // namespace

Integer content(const ZPoly& f) {
    Integer g(0);
    for (const auto& c : f.coeffs()) {
        g = ptk::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

ZPoly normalize_sign(const ZPoly& f) {
    if (!f.is_zero() && f.lc().sign() < 0) return -f;
    return f;
}

ZPoly primitive_part(const ZPoly& f) {
    if (f.is_zero()) return f;
    return normalize_sign(divide_by_scalar(f, content(f)));
}

ZPoly gcd(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    if (g.is_zero()) return normalize_sign(f);
    if (f.is_zero()) return normalize_sign(g);
    ZPoly a = f, b = g;
    if (b.degree() > a.degree()) std::swap(a, b);
    const Integer d = ptk::gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    Integer gg(1), h(1);
    while (true) {
        const int delta = a.degree() - b.degree();
        auto pd = pseudo_divrem(a, b);
        if (pd.remainder.is_zero()) break;
        if (pd.remainder.degree() == 0) {
            b = ZPoly::constant(kZ, Integer(1), f.var());
            break;
        }
        a = b;
        b = divide_by_scalar(pd.remainder, gg * pow(h, static_cast<unsigned long>(delta)));
        gg = a.lc();
        if (delta == 0) {
            // h^(1-0) g^0 = h
        } else {
            h = ptk::divexact(pow(gg, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
        }
    }
    return primitive_part(b).scale(d).with_var(f.var());
}

Integer resultant(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of the zero polynomial");
    if (f.degree() == 0) return pow(f.lc(), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return pow(g.lc(), static_cast<unsigned long>(f.degree()));

    ZPoly a = f, b = g;
    const Integer ca = content(a), cb = content(b);
    a = divide_by_scalar(a, ca);
    b = divide_by_scalar(b, cb);
    const Integer t = pow(ca, static_cast<unsigned long>(g.degree())) * pow(cb, static_cast<unsigned long>(f.degree()));
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (odd(a.degree()) && odd(b.degree())) s = -s;
    }
    Integer gg(1), h(1);
    while (true) {
        const int delta = a.degree() - b.degree();
        if (odd(a.degree()) && odd(b.degree())) s = -s;
        auto pd = pseudo_divrem(a, b);
        a = b;
        b = divide_by_scalar(pd.remainder, gg * pow(h, static_cast<unsigned long>(delta)));
        gg = a.lc();
        if (delta > 0) {
            h = ptk::divexact(pow(gg, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.degree() <= 0) break;
    }
    if (b.is_zero()) return Integer(0);
    const int da = a.degree();
    const Integer last = ptk::divexact(pow(b.lc(), static_cast<unsigned long>(da)),
                                       da >= 1 ? pow(h, static_cast<unsigned long>(da - 1)) : Integer(1));
    // da == 0 cannot happen: a is the previous divisor with degree >= 1.
    return Integer(s) * t * last;
}

Integer discriminant(const ZPoly& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
    const int d = f.degree();
    Integer r = ptk::divexact(resultant(f, derivative(f)), f.lc());
    if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
    return r;
}

std::optional<ZPoly> try_divide(const ZPoly& f, const ZPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (f.is_zero()) return ZPoly(kZ, f.var());
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<Integer> rem = f.coeffs();
    const int dg = g.degree();
    std::vector<Integer> quot(static_cast<std::size_t>(f.degree() - dg + 1), Integer(0));
    const Integer& lcg = g.lc();
    for (int i = f.degree(); i >= dg; --i) {
        const Integer top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        if (!divides(lcg, top)) return std::nullopt;
        const Integer c = ptk::divexact(top, lcg);
        quot[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(i - dg + j)] -= c * g.coeffs()[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < dg; ++j) {
        if (!rem[static_cast<std::size_t>(j)].is_zero()) return std::nullopt;
    }
    return ZPoly(kZ, std::move(quot), f.var());
}

ZPoly divexact(const ZPoly& f, const ZPoly& g) {
    auto q = try_divide(f, g);
    if (!q) throw std::domain_error("polynomial division over Z is not exact");
    return *q;
}

FpPoly reduce_mod(const ZPoly& f, std::uint32_t p) {
    const PrimeField field(p);
    return map_coeffs(f, field, [&](const Integer& c) { return field.from_integer(c); });
}

ZmPoly reduce_mod(const ZPoly& f, const IntegerModRing& ring) {
    return map_coeffs(f, ring, [&](const Integer& c) { return ring.reduce(c); });
}

ZPoly lift_symmetric(const FpPoly& f) {
    const Integer p(static_cast<long>(f.ring().modulus()));
    return map_coeffs(f, kZ, [&](Residue r) { return mod_symmetric(Integer(static_cast<long>(r.value)), p); });
}

ZPoly lift_symmetric(const ZmPoly& f) {
    const Integer& m = f.ring().modulus();
    return map_coeffs(f, kZ, [&](const Integer& c) { return mod_symmetric(c, m); });
}

ZPoly lift_nonnegative(const ZmPoly& f) {
    return map_coeffs(f, kZ, [](const Integer& c) { return c; });
}

ZPoly lift_nonnegative(const FpPoly& f) {
    return map_coeffs(f, kZ, [](Residue r) { return Integer(static_cast<long>(r.value)); });
}

Integer max_norm(const ZPoly& f) {
    Integer m(0);
    for (const auto& c : f.coeffs()) {
        if (abs(c) > m) m = abs(c);
    }
    return m;
}

Integer norm2_ceil(const ZPoly& f) {
    Integer s(0);
    for (const auto& c : f.coeffs()) s += c * c;
    Integer r = isqrt(s);
    if (r * r < s) r += Integer(1);
    return r;
}

ZPoly clear_denominators(const QPoly& f) {
    Integer l(1);
    for (const auto& c : f.coeffs()) l = lcm(l, c.denominator());
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.numerator() * ptk::divexact(l, c.denominator()));
    return primitive_part(ZPoly(kZ, std::move(out), f.var()));
}

ZPoly to_integer_poly(const std::vector<long>& ascending, const std::string& var) {
    return ZPoly::from_ints(kZ, ascending, var);
}

}  // namespace ptk
