"""Extra central terms on the d = 1 standard super-GCA and their removal.

The candidate central terms sit in seven brackets::

    [D, P^n] += alpha^n     [H, P^n] += beta^n     [C, P^n] += gamma^n
    {Q, Xbar^n} += c1^n     {Qbar, X^n} += c1bar^n
    {S, Xbar^n} += c2^n     {Sbar, X^n} += c2bar^n

Each unknown is added to the table as its own formal central generator,
so the generic Jacobi verifier produces the constraint system directly:
every nonzero residual is a linear form in the unknowns.  Solutions are
then absorbed by shifting P^n by a multiple of the central charge.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .builders import build
from .core import (
    AlgebraError, C, Central, D, Element, Family, Generator, H, P, Q, Qbar, S,
    Sbar, Superalgebra, X, Xbar, jacobi_residuals, verify_super_jacobi,
)
from .linalg import nullspace, rank, solve

UNKNOWNS = ("alpha", "beta", "gamma", "c1", "c1bar", "c2", "c2bar")
K = Generator("K")


def _slots(two_ell: int):
    # (unknown family, n, bracket pair)
    L = two_ell
    out = []
    for name, left in (("alpha", D), ("beta", H), ("gamma", C)):
        out += [(name, n, (left, P(n, 1))) for n in range(L + 1)]
    for name, left, right in (("c1", Q, Xbar), ("c1bar", Qbar, X), ("c2", S, Xbar), ("c2bar", Sbar, X)):
        out += [(name, n, (left, right(n, 1))) for n in range(L)]
    return out


@dataclass(frozen=True)
class CentralAnsatz:
    """Values of every unknown, keyed by ``(family, n)``."""

    two_ell: int
    values: dict[tuple[str, int], Fraction]

    @classmethod
    def from_vector(cls, two_ell: int, vec) -> CentralAnsatz:
        keys = unknown_keys(two_ell)
        return cls(two_ell, {k: Fraction(v) for k, v in zip(keys, vec)})

    def __getitem__(self, key) -> Fraction:
        return self.values.get(key, Fraction(0))

    def vector(self) -> list[Fraction]:
        return [self[k] for k in unknown_keys(self.two_ell)]


def unknown_keys(two_ell: int) -> list[tuple[str, int]]:
    return [(name, n) for name, n, _ in _slots(two_ell)]


def unknown_generator(name: str, n: int) -> Generator:
    return Generator(name, (n,), odd=False)


def base_algebra(two_ell: int, family: Family = Family.STANDARD) -> Superalgebra:
    if Family(family) is not Family.STANDARD:
        raise AlgebraError("the central-term ansatz is set up for the standard super family only")
    return build(Family.STANDARD, 1, two_ell, Central.NONE)


def _extend(base: Superalgebra, extra: list[Generator], contributions) -> Superalgebra:
    table = dict(base.table)
    for pair, g, c in contributions:
        old = table.get(pair, Element())
        table[pair] = old + Element.of(g, c)
    return base.replace_table(table, list(base.generators) + extra)


def ansatz_algebra(two_ell: int) -> Superalgebra:
    """Base algebra with one formal central generator per unknown."""
    base = base_algebra(two_ell)
    slots = _slots(two_ell)
    gens = [unknown_generator(name, n) for name, n, _ in slots]
    return _extend(base, gens, [(pair, g, 1) for (_, _, pair), g in zip(slots, gens)])


def install(ansatz: CentralAnsatz) -> Superalgebra:
    """Base algebra with the ansatz values as actual central terms along K."""
    base = base_algebra(ansatz.two_ell)
    contrib = [(pair, K, ansatz[(name, n)]) for name, n, pair in _slots(ansatz.two_ell)]
    return _extend(base, [K], [c for c in contrib if c[2]])


def build_constraints(two_ell: int) -> tuple[list[list[Fraction]], list[tuple[str, int]]]:
    """Linear constraints on the unknowns from every super Jacobi triple.

    Returns the deduplicated, sorted rows and the column labels.
    """
    alg = ansatz_algebra(two_ell)
    keys = unknown_keys(two_ell)
    col = {alg.index[unknown_generator(*k)]: j for j, k in enumerate(keys)}
    rows = set()
    for triple, res in jacobi_residuals(alg).items():
        stray = set(res) - set(col)
        if stray:
            raise AlgebraError(f"Jacobi fails off the center at {triple}")
        row = [Fraction(0)] * len(keys)
        for g, c in res.items():
            row[col[g]] = Fraction(c)
        # normalize so equal constraints coincide
        lead = next(x for x in row if x)
        rows.add(tuple(x / lead for x in row))
    return [list(r) for r in sorted(rows)], keys


@dataclass
class Redefinition:
    """Shift g -> g + shift[g] * K that removes the central terms.

    ``method`` is ``"p-shift"`` when only the P^n move (closed form) and
    ``"general"`` when the shift came from solving the coboundary system.
    """

    two_ell: int
    shift: dict[Generator, Fraction]
    method: str = "p-shift"


def p_shift(ansatz: CentralAnsatz) -> Redefinition:
    """a^n = alpha^n / (2(l - n)); at n = l (2l even) a^l = gamma^{l-1} / (l + 1)."""
    L = ansatz.two_ell
    ell = Fraction(L, 2)
    shift = {}
    for n in range(L + 1):
        if 2 * n == L:
            a = ansatz[("gamma", n - 1)] / (ell + 1)
        else:
            a = ansatz[("alpha", n)] / (2 * (ell - n))
        if a:
            shift[P(n, 1)] = a
    return Redefinition(L, shift)


def general_shift(ansatz: CentralAnsatz) -> Redefinition | None:
    """Solve t(a, b) = sum_g c_g(a, b) f(g) over all even generators g.

    Here [a, b] = sum_g c_g g + t(a, b) K.  Returns None when the central
    terms are not a coboundary.
    """
    alg = install(ansatz)
    even = [g for g in alg.generators if g.parity == 0 and g != K]
    col = {g: j for j, g in enumerate(even)}
    rows, rhs = [], []
    for v in alg.table.values():
        row = [Fraction(0)] * len(even)
        for g, c in v.items():
            if g in col:
                row[col[g]] = Fraction(c)
        rows.append(row)
        rhs.append(Fraction(v.coefficient(K)))
    x = solve(rows, rhs, len(even))
    if x is None:
        return None
    return Redefinition(ansatz.two_ell, {g: a for g, a in zip(even, x) if a}, "general")


def apply_shift(alg: Superalgebra, red: Redefinition) -> Superalgebra:
    """Rewrite the table in the basis g' = g + shift[g] K.

    Brackets do not see a central shift, so only results change: every g
    on a right-hand side becomes g' - shift[g] K.  K is dropped from the
    generator list when no bracket produces it any more.
    """
    table = {}
    for pair, v in alg.table.items():
        out = v
        for g, c in v.items():
            if g in red.shift:
                out = out - Element.of(K, c * red.shift[g])
        table[pair] = out
    gens = list(alg.generators)
    if K in gens and not any(K in v for v in table.values()):
        gens.remove(K)
    return alg.replace_table({p: v for p, v in table.items() if v}, gens)


def absorbs(ansatz: CentralAnsatz, red: Redefinition) -> bool:
    """True when the shifted algebra equals the untouched one exactly."""
    return apply_shift(install(ansatz), red) == base_algebra(ansatz.two_ell)


@dataclass
class TrivialityCertificate:
    two_ell: int
    rows: int
    cols: int
    rank: int
    nullspace: list[list[Fraction]]
    redefinitions: list[Redefinition | None]
    jacobi_clean: bool
    verdict: str

    @property
    def nullity(self) -> int:
        return len(self.nullspace)

    @property
    def needs_general_shift(self) -> bool:
        """Some solution is not removed by moving the P^n alone."""
        return any(r is not None and r.method != "p-shift" for r in self.redefinitions)


def solve_and_certify(two_ell: int, family: Family = Family.STANDARD) -> TrivialityCertificate:
    """Solve the constraints and absorb every basis solution by a shift.

    Each basis solution first tries the closed-form P-shift; if that does
    not reproduce the untouched algebra, the general coboundary system is
    solved.  The verdict is ``"trivial"`` only when every solution is
    absorbed and every extended algebra passes super Jacobi.
    """
    base_algebra(two_ell, family)
    rows, keys = build_constraints(two_ell)
    basis = nullspace(rows, len(keys))
    reds: list[Redefinition | None] = []
    clean = True
    for vec in basis:
        ansatz = CentralAnsatz.from_vector(two_ell, vec)
        clean = clean and verify_super_jacobi(install(ansatz)).empty
        red = p_shift(ansatz)
        if not absorbs(ansatz, red):
            red = general_shift(ansatz)
            if red is not None and not absorbs(ansatz, red):
                red = None
        reds.append(red)
    trivial = clean and all(r is not None for r in reds)
    return TrivialityCertificate(
        two_ell=two_ell, rows=len(rows), cols=len(keys), rank=rank(rows, len(keys)),
        nullspace=basis, redefinitions=reds, jacobi_clean=clean,
        verdict="trivial" if trivial else "nontrivial")
