"""Slow independent re-implementations used as test oracles.

Nothing here shares evaluation code with the package: brackets come from
a plain dict lookup, signs from sympy, linear algebra from sympy.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

import sympy


def coefficient(kind: str, two_ell: int, m: int) -> int:
    """Evaluate the printed coefficient formula with sympy's (-1)**exponent."""
    ell = sympy.Rational(two_ell, 2)
    half = sympy.Rational(1, 2)
    L = two_ell
    table = {
        "I": (m + ell + half, L - m),
        "Icheck": (m, L - m),
        "alpha": (m + ell - half, L - 1 - m),
        "beta": (m + ell + half, L - 2 - m),
        "alphacheck": (m + 1, L - 1 - m),
        "betacheck": (m, L - 2 - m),
    }
    expo, top = table[kind]
    value = sympy.Integer(-1) ** expo * factorial(top) * factorial(m)
    assert value.is_integer, value
    return int(value)


def dense_bracket(alg):
    """A plain function [a, b] -> {g: c} built only from the raw table."""
    raw = {}
    for (a, b), v in alg.table.items():
        raw[(a, b)] = dict(v.items())

    def br(a, b):
        if (a, b) in raw:
            return dict(raw[(a, b)])
        if (b, a) in raw:
            s = -((-1) ** (a.parity * b.parity))
            return {g: s * c for g, c in raw[(b, a)].items()}
        return {}
    return br


def _br_vec(br, x, vec):
    out = {}
    for y, cy in vec.items():
        for g, c in br(x, y).items():
            out[g] = out.get(g, 0) + cy * c
    return {g: c for g, c in out.items() if c}


def naive_jacobi(alg) -> dict:
    """Every unordered triple with its residual, checked without pruning."""
    br = dense_bracket(alg)
    gens = alg.generators
    bad = {}
    for a, b, c in combinations_with_replacement(gens, 3):
        pa, pb, pc = a.parity, b.parity, c.parity
        acc = {}
        for sgn, x, y, z in (((-1) ** (pa * pc), a, b, c),
                             ((-1) ** (pb * pa), b, c, a),
                             ((-1) ** (pc * pb), c, a, b)):
            for g, v in _br_vec(br, x, br(y, z)).items():
                acc[g] = acc.get(g, 0) + sgn * v
        acc = {g: v for g, v in acc.items() if v}
        if acc:
            bad[(a, b, c)] = acc
    return bad


def sympy_rank(rows, ncols) -> int:
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator)
                          for x in r] for r in rows]).rank()


def sympy_nullity(rows, ncols) -> int:
    return ncols - sympy_rank(rows, ncols)
