"""Pins derived family members (p_n, q_n beyond the listed base cases) by
expanding the recurrences with sympy, independently of the C++ generators.

usage: python3 derive_family_golden.py GOLDEN_DIR
"""
import json
import os
import sys

from sympy import Poly, expand, symbols

v, w = symbols("v w")

P = {
    -1: v**3 + 2 * v**2 + v + 1,
    -3: -(v**5 + 3 * v**4 + 4 * v**3 + 5 * v**2 + 4 * v + 2),
    7: -(v**3 + 2 * v**2 + 8 * v + 8),
    9: v**5 + 4 * v**4 + 10 * v**3 + 16 * v**2 + 24 * v + 16,
}
Q = {
    -1: w**3 - w**2 + 2 * w - 7,
    -3: w**5 - 2 * w**4 - 2 * w**3 + 5 * w**2 + 3 * w - 9,
    -5: w**7 - 2 * w**6 - 4 * w**5 + 8 * w**4 + 4 * w**3 - 7 * w**2 + 2 * w - 7,
}


def p(n):
    if n not in P:
        near, far = (p(n + 2), p(n + 4)) if n < 0 else (p(n - 2), p(n - 4))
        P[n] = expand(-((v**2 + v + 2) * near + v**2 * far))
    return P[n]


def q(n):
    if n not in Q:
        Q[n] = expand((w**2 - 1) * (q(n + 2) - q(n + 4)) + q(n + 6))
    return Q[n]


def canonical(expr, var):
    coeffs = [str(int(c)) for c in reversed(Poly(expr, var).all_coeffs())]
    return json.dumps({"var": str(var), "coeffs": coeffs}, separators=(",", ":"))


def main():
    out = sys.argv[1]
    derived = [("p", n) for n in (-5, -7, -49, 11, 13)] + [("q", n) for n in (-7, -9, -49)]
    for fam, n in derived:
        text = canonical(p(n), v) if fam == "p" else canonical(q(n), w)
        with open(os.path.join(out, f"{fam}_{n}.poly"), "w") as fh:
            fh.write(text + "\n")


if __name__ == "__main__":
    main()
