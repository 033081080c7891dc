"""Bracket tables of the bosonic and super Galilean conformal algebras.

Each builder writes the defining relations as printed, in whichever
orientation they are stated; :class:`~supergca.core.Superalgebra` folds
them into one canonical orientation per pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coefficients import coeff
from .core import (
    CENTRAL_NAMES, AlgebraError, C, Central, CentralM, CentralTheta, D, Element, Family,
    Generator, H, J, M, P, Q, Qbar, Qstar, R, S, Sbar, Sstar, Superalgebra,
    X, Xbar,
)


def eps(i: int, j: int) -> int:
    if (i, j) == (1, 2):
        return 1
    if (i, j) == (2, 1):
        return -1
    return 0


def delta(i: int, j: int) -> int:
    return 1 if i == j else 0


@dataclass(frozen=True)
class BuildSpec:
    family: Family
    d: int
    two_ell: int
    central: Central = Central.NONE

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "central", Central(self.central))
        check_spec(self.family, self.d, self.two_ell, self.central)

    def build(self) -> Superalgebra:
        return build(self.family, self.d, self.two_ell, self.central)


def check_spec(family: Family, d: int, two_ell: int, central: Central) -> None:
    family, central = Family(family), Central(central)
    if d < 1:
        raise AlgebraError(f"d must be positive, got {d}")
    if two_ell < 1:
        raise AlgebraError(f"2l must be positive, got {two_ell}")
    if family is Family.EXOTIC and d != 2:
        raise AlgebraError("exotic super requires d = 2")
    if central is Central.MASS and two_ell % 2 == 0:
        raise AlgebraError("mass central extension requires 2l odd")
    if central is Central.EXOTIC:
        if d != 2:
            raise AlgebraError("exotic central extension requires d = 2")
        if two_ell % 2:
            raise AlgebraError("exotic central extension requires 2l even")


class _Relations:
    """Accumulates printed brackets; coefficients of repeated terms add."""

    def __init__(self):
        self.rel: dict[tuple[Generator, Generator], dict[Generator, object]] = {}

    def add(self, a: Generator, b: Generator, *terms) -> None:
        # terms: (coefficient, generator-or-None) pairs; None means "out of range"
        row = self.rel.setdefault((a, b), {})
        for c, g in terms:
            if c and g is not None:
                row[g] = row.get(g, 0) + c


class _Index:
    """Index ranges for one (d, 2l) and range-checked generator lookup."""

    def __init__(self, d: int, two_ell: int):
        self.d, self.L = d, two_ell
        self.sp = range(1, d + 1)

    def P(self, n, i):
        return P(n, i) if 0 <= n <= self.L else None

    def X(self, n, i):
        return X(n, i) if 0 <= n <= self.L - 1 else None

    def Xbar(self, n, i):
        return Xbar(n, i) if 0 <= n <= self.L - 1 else None

    def J(self, n, i):
        return J(n, i) if 0 <= n <= self.L - 2 else None

    def M(self, i, j):
        # returns (sign, generator) for M_ij with M_ji = -M_ij
        if i == j:
            return 0, None
        return (1, M(i, j)) if i < j else (-1, M(j, i))


def _rotation_terms(ix: _Index, i, j, k, make):
    # [M_ij, V_k] = -delta_ik V_j + delta_jk V_i
    return [(-delta(i, k), make(j)), (delta(j, k), make(i))]


def _base(rel: _Relations, ix: _Index) -> list[Generator]:
    L, sp = ix.L, ix.sp
    rel.add(D, H, (2, H))
    rel.add(D, C, (-2, C))
    rel.add(C, H, (1, D))
    ms = [M(i, j) for i, j in combinations(sp, 2)]
    for a in ms:
        for b in ms:
            i, j = a.indices
            k, l = b.indices
            terms = []
            for c, (p, q) in ((-delta(i, k), (j, l)), (-delta(j, l), (i, k)),
                              (delta(i, l), (j, k)), (delta(j, k), (i, l))):
                s, g = ix.M(p, q)
                terms.append((c * s, g))
            rel.add(a, b, *terms)
    for n in range(L + 1):
        for i in sp:
            p = P(n, i)
            rel.add(H, p, (-n, ix.P(n - 1, i)))
            rel.add(D, p, (L - 2 * n, p))
            rel.add(C, p, (L - n, ix.P(n + 1, i)))
            for m in ms:
                a, b = m.indices
                rel.add(m, p, *_rotation_terms(ix, a, b, i, lambda q: P(n, q)))
    return ms


def _ideal_central(rel: _Relations, ix: _Index, central: Central, pair_kind: str) -> Generator | None:
    """Central terms of the abelian ideal.

    ``pair_kind`` selects the fermionic partner bracket: ``"xxbar"``
    (standard super), ``"xx"`` (exotic super and N=1) or ``""`` (bosonic).
    """
    if central is Central.NONE:
        return None
    L, sp = ix.L, ix.sp
    mass = central is Central.MASS
    z = CentralM if mass else CentralTheta
    tensor = delta if mass else eps
    kI, ka, kb = ("I", "alpha", "beta") if mass else ("Icheck", "alphacheck", "betacheck")
    for m in range(L + 1):
        for i in sp:
            for j in sp:
                rel.add(P(m, i), P(L - m, j), (tensor(i, j) * coeff(kI, L, m), z))
    if pair_kind:
        partner = Xbar if pair_kind == "xxbar" else X
        for m in range(L):
            for i in sp:
                for j in sp:
                    rel.add(X(m, i), partner(L - 1 - m, j), (tensor(i, j) * coeff(ka, L, m), z))
    if pair_kind == "xxbar":
        for m in range(L - 1):
            for i in sp:
                for j in sp:
                    rel.add(J(m, i), J(L - 2 - m, j), (tensor(i, j) * coeff(kb, L, m), z))
    return z


def _generators(ix: _Index, ms, head: list[Generator], fermions: list[str],
                with_j: bool, z: Generator | None) -> list[Generator]:
    L, sp = ix.L, ix.sp
    gens = [D, H, C] + head + ms
    gens += [P(n, i) for n in range(L + 1) for i in sp]
    for name in fermions:
        gens += [Generator(name, (n, i)) for n in range(L) for i in sp]
    if with_j:
        gens += [J(n, i) for n in range(L - 1) for i in sp]
    if z is not None:
        gens.append(z)
    return gens


def _finish(gens, rel, family, d, two_ell, central) -> Superalgebra:
    return Superalgebra(gens, {k: Element(v) for k, v in rel.rel.items()},
                        d=d, two_ell=two_ell, family=family, central=central)


def build_gca(d: int, two_ell: int, central: Central = Central.NONE) -> Superalgebra:
    """Bosonic GCA(d, l) with an optional mass or exotic central extension."""
    central = Central(central)
    check_spec(Family.GCA, d, two_ell, central)
    ix, rel = _Index(d, two_ell), _Relations()
    ms = _base(rel, ix)
    z = _ideal_central(rel, ix, central, "")
    return _finish(_generators(ix, ms, [], [], False, z), rel, Family.GCA, d, two_ell, central)


def _odd_sl2(rel: _Relations, q, s) -> None:
    # shared boson-fermion brackets of one supercharge pair (q, s)
    rel.add(H, s, (-1, q))
    rel.add(C, q, (1, s))
    rel.add(D, s, (-1, s))
    rel.add(D, q, (1, q))


def _fermion_partner_moves(rel: _Relations, ix: _Index, family_x, rotate=True) -> None:
    # [H, X], [D, X], [C, X] and, if rotate, [M, X] for one fermionic partner family
    L, sp = ix.L, ix.sp
    ms = [M(i, j) for i, j in combinations(sp, 2)] if rotate else []
    for n in range(L):
        for i in sp:
            x = family_x(n, i)
            rel.add(H, x, (-n, family_x(n - 1, i) if n >= 1 else None))
            rel.add(D, x, (L - 2 * n - 1, x))
            rel.add(C, x, (L - n - 1, family_x(n + 1, i) if n + 1 <= L - 1 else None))
            for m in ms:
                a, b = m.indices
                rel.add(m, x, *_rotation_terms(ix, a, b, i, lambda k: family_x(n, k)))


def build_standard_super(d: int, two_ell: int, central: Central = Central.NONE) -> Superalgebra:
    """N=2 standard super-GCA (generators Q, Qbar, S, Sbar, R, X, Xbar, J)."""
    central = Central(central)
    check_spec(Family.STANDARD, d, two_ell, central)
    ix, rel = _Index(d, two_ell), _Relations()
    L, sp = ix.L, ix.sp
    ms = _base(rel, ix)

    rel.add(Q, Qbar, (2, H))
    rel.add(S, Sbar, (2, C))
    rel.add(Q, Sbar, (1, D), (1, R))
    rel.add(Qbar, S, (1, D), (-1, R))
    for n in range(L):
        for i in sp:
            rel.add(Q, Xbar(n, i), (-1, P(n, i)), (-n, ix.J(n - 1, i)))
            rel.add(Qbar, X(n, i), (-1, P(n, i)), (n, ix.J(n - 1, i)))
            rel.add(S, Xbar(n, i), (-1, P(n + 1, i)), (-(n - L + 1), ix.J(n, i)))
            rel.add(Sbar, X(n, i), (-1, P(n + 1, i)), (n - L + 1, ix.J(n, i)))

    _odd_sl2(rel, Q, S)
    _odd_sl2(rel, Qbar, Sbar)
    _fermion_partner_moves(rel, ix, ix.X)
    _fermion_partner_moves(rel, ix, ix.Xbar)
    rel.add(R, Q, (-1, Q))
    rel.add(R, Qbar, (1, Qbar))
    rel.add(R, S, (-1, S))
    rel.add(R, Sbar, (1, Sbar))
    for n in range(L):
        for i in sp:
            rel.add(R, X(n, i), (-1, X(n, i)))
            rel.add(R, Xbar(n, i), (1, Xbar(n, i)))
    for n in range(L + 1):
        for i in sp:
            p = P(n, i)
            rel.add(Q, p, (n, ix.X(n - 1, i)))
            rel.add(Qbar, p, (n, ix.Xbar(n - 1, i)))
            rel.add(S, p, (-(L - n), ix.X(n, i)))
            rel.add(Sbar, p, (-(L - n), ix.Xbar(n, i)))
    for n in range(L - 1):
        for i in sp:
            j = J(n, i)
            rel.add(Q, j, (-1, X(n, i)))
            rel.add(Qbar, j, (1, Xbar(n, i)))
            rel.add(S, j, (-1, X(n + 1, i)))
            rel.add(Sbar, j, (1, Xbar(n + 1, i)))
            rel.add(H, j, (-n, ix.J(n - 1, i)))
            rel.add(D, j, (L - 2 * n - 2, j))
            rel.add(C, j, (L - n - 2, ix.J(n + 1, i)))
            for m in ms:
                a, b = m.indices
                rel.add(m, j, *_rotation_terms(ix, a, b, i, lambda k: J(n, k)))

    z = _ideal_central(rel, ix, central, "xxbar")
    gens = _generators(ix, ms, [R, Q, Qbar, S, Sbar], ["X", "Xbar"], True, z)
    return _finish(gens, rel, Family.STANDARD, d, two_ell, central)


def build_exotic_super(two_ell: int, central: Central = Central.NONE, d: int = 2) -> Superalgebra:
    """N=2 exotic super-GCA on d = 2 (generators Q, Qstar, S, Sstar, R, X)."""
    central = Central(central)
    check_spec(Family.EXOTIC, d, two_ell, central)
    ix, rel = _Index(2, two_ell), _Relations()
    L, sp = ix.L, ix.sp
    ms = _base(rel, ix)
    m12 = ms[0]

    rel.add(Q, Q, (2, H))
    rel.add(Qstar, Qstar, (2, H))
    rel.add(S, S, (2, C))
    rel.add(Sstar, Sstar, (2, C))
    rel.add(Q, S, (1, D))
    rel.add(Qstar, Sstar, (1, D))
    rel.add(Q, Sstar, (-1, m12), (1, R))
    rel.add(Qstar, S, (1, m12), (-1, R))
    for n in range(L):
        for i in sp:
            x = X(n, i)
            rel.add(Q, x, (-1, P(n, i)))
            rel.add(Qstar, x, *[(eps(i, k), P(n, k)) for k in sp])
            rel.add(S, x, (-1, P(n + 1, i)))
            rel.add(Sstar, x, *[(eps(i, k), P(n + 1, k)) for k in sp])

    _odd_sl2(rel, Q, S)
    _odd_sl2(rel, Qstar, Sstar)
    # M12 does not act on X in this family
    _fermion_partner_moves(rel, ix, ix.X, rotate=False)
    for n in range(L):
        for i in sp:
            rel.add(R, X(n, i), *[((L + 1) * eps(i, k), X(n, k)) for k in sp])
    rel.add(m12, S, (1, Sstar))
    rel.add(m12, Sstar, (-1, S))
    rel.add(m12, Q, (1, Qstar))
    rel.add(m12, Qstar, (-1, Q))
    rel.add(R, S, (2, Sstar))
    rel.add(R, Sstar, (-2, S))
    rel.add(R, Q, (2, Qstar))
    rel.add(R, Qstar, (-2, Q))
    for n in range(L + 1):
        for i in sp:
            p = P(n, i)
            rel.add(Q, p, (n, ix.X(n - 1, i)))
            rel.add(Qstar, p, *[(n * eps(i, k), ix.X(n - 1, k)) for k in sp])
            rel.add(S, p, (-(L - n), ix.X(n, i)))
            rel.add(Sstar, p, *[(-(L - n) * eps(i, k), ix.X(n, k)) for k in sp])
            rel.add(R, p, *[((L - 1) * eps(i, k), P(n, k)) for k in sp])

    z = _ideal_central(rel, ix, central, "xx")
    gens = _generators(ix, ms, [R, Q, Qstar, S, Sstar], ["X"], False, z)
    return _finish(gens, rel, Family.EXOTIC, 2, two_ell, central)


def build_n1_super(d: int, two_ell: int, central: Central = Central.NONE) -> Superalgebra:
    """N=1 super-GCA (generators Q, S, X)."""
    central = Central(central)
    check_spec(Family.N1, d, two_ell, central)
    ix, rel = _Index(d, two_ell), _Relations()
    L, sp = ix.L, ix.sp
    ms = _base(rel, ix)

    rel.add(Q, Q, (2, H))
    rel.add(S, S, (2, C))
    rel.add(Q, S, (1, D))
    for n in range(L):
        for i in sp:
            rel.add(Q, X(n, i), (-1, P(n, i)))
            rel.add(S, X(n, i), (-1, P(n + 1, i)))
    _odd_sl2(rel, Q, S)
    _fermion_partner_moves(rel, ix, ix.X)
    for n in range(L + 1):
        for i in sp:
            rel.add(Q, P(n, i), (n, ix.X(n - 1, i)))
            rel.add(S, P(n, i), (-(L - n), ix.X(n, i)))

    z = _ideal_central(rel, ix, central, "xx")
    gens = _generators(ix, ms, [Q, S], ["X"], False, z)
    return _finish(gens, rel, Family.N1, d, two_ell, central)


def build(family: Family | str, d: int, two_ell: int,
          central: Central | str = Central.NONE) -> Superalgebra:
    family, central = Family(family), Central(central)
    check_spec(family, d, two_ell, central)
    if family is Family.GCA:
        return build_gca(d, two_ell, central)
    if family is Family.STANDARD:
        return build_standard_super(d, two_ell, central)
    if family is Family.EXOTIC:
        return build_exotic_super(two_ell, central, d)
    return build_n1_super(d, two_ell, central)


def legal_specs(max_d: int = 3, max_two_ell: int = 6) -> list[BuildSpec]:
    """Every legal (family, d, 2l, central) up to the given sizes."""
    out = []
    for family in Family:
        for d in range(1, max_d + 1):
            for L in range(1, max_two_ell + 1):
                for central in Central:
                    try:
                        out.append(BuildSpec(family, d, L, central))
                    except AlgebraError:
                        pass
    return out


def d_weight(g: Generator, two_ell: int):
    """Eigenvalue of ad D on a built-in generator."""
    name, L = g.name, two_ell
    if name in ("H",):
        return 2
    if name == "C":
        return -2
    if name in ("Q", "Qbar", "Qstar"):
        return 1
    if name in ("S", "Sbar", "Sstar"):
        return -1
    if name == "P":
        return L - 2 * g.indices[0]
    if name in ("X", "Xbar"):
        return L - 2 * g.indices[0] - 1
    if name == "J":
        return L - 2 * g.indices[0] - 2
    return 0


def d_weights(alg: Superalgebra) -> dict[Generator, int]:
    return {g: d_weight(g, alg.two_ell) for g in alg.generators}


def r_charges(alg: Superalgebra) -> dict[Generator, int]:
    """R-charges of the standard super-GCA (ad R is diagonal there)."""
    charge = {"Q": -1, "S": -1, "X": -1, "Qbar": 1, "Sbar": 1, "Xbar": 1}
    return {g: charge.get(g.name, 0) for g in alg.generators}


def ideal_generators(alg: Superalgebra) -> list[Generator]:
    return [g for g in alg.generators if g.name in ("P", "X", "Xbar", "J")]


def named_subalgebras(alg: Superalgebra) -> dict[str, list[Generator]]:
    """Subsets that close under the bracket in every built-in family.

    ``"sl2"`` is D, H, C; ``"finite"`` adds the rest of the non-ideal part
    (R, the supercharges and rotations); ``"ideal"`` is the P, X, Xbar, J
    sector together with any central generator.
    """
    ideal = set(ideal_generators(alg))
    central = [g for g in alg.generators if g.name in CENTRAL_NAMES]
    return {
        "sl2": [D, H, C],
        "finite": [g for g in alg.generators if g not in ideal and g not in central],
        "ideal": [g for g in alg.generators if g in ideal] + central,
    }
