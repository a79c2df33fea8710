"""Pins the reciprocal constants c(n) with v^(2-n) p_(6-n)(2/v) = c p_n(v), and
the sign s(n) with g_n = s v p_n mod 3, by direct sympy expansion.

usage: python3 derive_pretzel_constants.py OUT.json
"""
import json
import sys

from sympy import Poly, cancel, expand, sqrt, symbols

from derive_family_golden import p

v, b = symbols("v b")


def reciprocal_constant(n):
    lhs = expand(cancel(v ** (2 - n) * p(6 - n).subs(v, 2 / v)))
    c = cancel(lhs / p(n))
    assert c.is_Integer, (n, c)
    return int(c)


def g_sign(n):
    k = (1 - n) // 2
    a = v**2 + v - 1
    d = (v**2 - 1) * (v**2 - v - 1)
    bracket = expand((a + b) ** k - (a - b) ** k - (a + b) ** (k + 2) + (a - b) ** (k + 2))
    # odd in b: divide by b, then replace b^2 by d
    g = expand(cancel(bracket / b))
    g = expand(g.subs(b, sqrt(d)))
    gp = Poly(g, v, modulus=3)
    vp = Poly(v * p(n), v, modulus=3)
    if gp == vp:
        return 1
    if gp == -vp:
        return -1
    return 0


def main():
    ns = list(range(-1, -50, -2))
    doc = {
        "reciprocal_constant": {str(n): str(reciprocal_constant(n)) for n in (-1, -3, -5, -7, -49)},
        "g_sign": {str(n): g_sign(n) for n in ns if n % 3 != 0},
    }
    with open(sys.argv[1], "w") as fh:
        fh.write(json.dumps(doc, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
