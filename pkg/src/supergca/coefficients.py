"""Structure-constant coefficient functions of the central extensions.

All six are signed products of two factorials.  ``I``, ``alpha`` and
``beta`` belong to the mass extension (2l odd); the ``check`` variants to
the exotic extension (2l even).
"""
from __future__ import annotations

import enum
from math import factorial

from .core import AlgebraError


class CoefficientKind(enum.Enum):
    I = "I"
    ICHECK = "Icheck"
    ALPHA = "alpha"
    BETA = "beta"
    ALPHACHECK = "alphacheck"
    BETACHECK = "betacheck"


_MASS = {CoefficientKind.I, CoefficientKind.ALPHA, CoefficientKind.BETA}

# top index of m, as an offset from 2l
_TOP = {
    CoefficientKind.I: 0, CoefficientKind.ICHECK: 0,
    CoefficientKind.ALPHA: 1, CoefficientKind.ALPHACHECK: 1,
    CoefficientKind.BETA: 2, CoefficientKind.BETACHECK: 2,
}


def coeff(kind: CoefficientKind | str, two_ell: int, m: int) -> int:
    """Evaluate one coefficient at spin l = two_ell/2 and index m."""
    kind = CoefficientKind(kind)
    odd = two_ell % 2 == 1
    if (kind in _MASS) != odd:
        need = "odd" if kind in _MASS else "even"
        raise AlgebraError(f"{kind.value} needs 2l {need}, got 2l = {two_ell}")
    top = two_ell - _TOP[kind]
    if not 0 <= m <= top:
        raise AlgebraError(f"{kind.value}_{m} out of range 0..{top}")
    mag = factorial(top - m) * factorial(m)
    # exponents written in units of 2l so no half-integers appear
    if kind is CoefficientKind.I or kind is CoefficientKind.BETA:
        e = m + (two_ell + 1) // 2          # m + l + 1/2
    elif kind is CoefficientKind.ALPHA:
        e = m + (two_ell - 1) // 2          # m + l - 1/2
    elif kind is CoefficientKind.ALPHACHECK:
        e = m + 1
    else:
        e = m
    return -mag if e % 2 else mag
