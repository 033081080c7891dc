"""Quadratic realizations of the N=2 super-GCAs in their own ideal.

Four cases are covered:

==========  ==========  ==========================
family      central     coefficients used
==========  ==========  ==========================
standard    mass        I, alpha, beta    (2l odd)
standard    exotic      Icheck, alphacheck, betacheck (2l even, d = 2)
exotic      mass        I, alpha          (2l odd, d = 2)
exotic      exotic      Icheck, alphacheck (2l even, d = 2)
==========  ==========  ==========================

Also here: the boson/fermion oscillator basis of the standard-mass ideal
and the bose-fermi Hamiltonian built from it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .builders import BuildSpec, build, eps
from .coefficients import coeff
from .core import (
    AlgebraError, Central, Family, Generator, Superalgebra, Violation,
    ViolationReport, rational, J, M, P, X, Xbar,
)
from .oscillator import IdealAlgebra, OscExpr, graded_commutator, linear_combination


@dataclass
class Realization:
    source: Superalgebra
    target: IdealAlgebra
    map: dict[Generator, OscExpr]

    def __call__(self, x) -> OscExpr:
        """Image of a generator or Element under the linear extension."""
        if isinstance(x, Generator):
            return self.map[x]
        return linear_combination(self.target, ((c, self.map[g]) for g, c in x.items()))


class _Builder:
    """Index-range-aware letter access and the sums used by the formulas."""

    def __init__(self, ideal: IdealAlgebra):
        self.ideal = ideal
        self.L = ideal.two_ell
        self.sp = range(1, ideal.d + 1)
        self.top = {"P": self.L, "X": self.L - 1, "Xbar": self.L - 1, "J": self.L - 2}

    def g(self, name, n, i) -> Generator | None:
        if 0 <= n <= self.top[name]:
            return Generator(name, (n, i))
        return None

    def pair(self, a, n, b, m, i, j) -> OscExpr:
        ga, gb = self.g(a, n, i), self.g(b, m, j)
        if ga is None or gb is None:
            return self.ideal.zero()
        return self.ideal.letter(ga) * self.ideal.letter(gb)

    def dot(self, a, n, b, m) -> OscExpr:
        # vector contraction a^(n) . b^(m)
        out = self.ideal.zero()
        for i in self.sp:
            out = out + self.pair(a, n, b, m, i, i)
        return out

    def edot(self, a, n, b, m) -> OscExpr:
        # sum_jk eps_jk a^(n)_j b^(m)_k
        out = self.ideal.zero()
        for j in self.sp:
            for k in self.sp:
                e = eps(j, k)
                if e:
                    out = out + e * self.pair(a, n, b, m, j, k)
        return out

    def lin(self, terms) -> OscExpr:
        return linear_combination(self.ideal, terms)


def _q(x) -> Fraction:
    return Fraction(x)


def _standard_mass(b: _Builder, src: Superalgebra) -> dict[Generator, OscExpr]:
    L, sp, lam = b.L, b.sp, b.ideal.lam
    I = lambda m: coeff("I", L, m)
    al = lambda m: coeff("alpha", L, m)
    be = lambda m: coeff("beta", L, m)
    ell = Fraction(L, 2)
    d = b.ideal.d
    mu1, half_mu1 = lam(-1), lam(-1) * Fraction(1, 2)
    r = {}
    r["H"] = half_mu1 * b.lin(
        [(_q(m) / I(m), b.dot("P", L - m, "P", m - 1)) for m in range(1, L + 1)]
        + [(2 * _q(m) / al(m), b.dot("X", L - 1 - m, "Xbar", m - 1)) for m in range(1, L)]
        + [(_q(m) / be(m), b.dot("J", L - 2 - m, "J", m - 1)) for m in range(1, L - 1)])
    r["D"] = mu1 * b.lin(
        [((m - ell) / I(m), b.dot("P", L - m, "P", m)) for m in range(L + 1)]
        + [(_q(2 * m + 1 - L) / al(m), b.dot("X", L - 1 - m, "Xbar", m)) for m in range(L)]
        + [((m + 1 - ell) / be(m), b.dot("J", L - 2 - m, "J", m)) for m in range(L - 1)])
    r["C"] = half_mu1 * b.lin(
        [(_q(m) / I(m), b.dot("P", L + 1 - m, "P", m)) for m in range(1, L + 1)]
        + [(2 * _q(m) / al(m), b.dot("X", L - m, "Xbar", m)) for m in range(1, L)]
        + [(_q(m) / be(m), b.dot("J", L - 1 - m, "J", m)) for m in range(1, L - 1)])
    for i in sp:
        for j in sp:
            if i < j:
                # the printed X^{(2l-1m)} is read as X^{(2l-1-m)}
                r[M(i, j)] = half_mu1 * b.lin(
                    [(_q(1) / I(m), b.pair("P", L - m, "P", m, i, j) - b.pair("P", L - m, "P", m, j, i))
                     for m in range(L + 1)]
                    + [(_q(2) / al(m), b.pair("X", L - 1 - m, "Xbar", m, i, j)
                        + b.pair("Xbar", m, "X", L - 1 - m, i, j)) for m in range(L)]
                    + [(_q(1) / be(m), b.pair("J", L - 2 - m, "J", m, i, j) - b.pair("J", L - 2 - m, "J", m, j, i))
                       for m in range(L - 1)])
    r["R"] = -mu1 * b.lin([(_q(1) / al(m), b.dot("X", L - 1 - m, "Xbar", m)) for m in range(L)]) \
        + b.ideal.scalar(ell * d)

    def charge(top_p, jshift, jcoef, partner):
        return -mu1 * b.lin(
            [(_q(m) / I(m), b.dot("P", top_p - m, partner, m - 1)
              + jcoef(m) * b.dot("J", top_p - jshift - m, partner, m - 1)) for m in range(1, L + 1)])

    r["Q"] = charge(L, 1, lambda m: L - m, "X")
    r["Qbar"] = charge(L, 1, lambda m: -(L - m), "Xbar")
    r["S"] = charge(L + 1, 1, lambda m: -(m - 1), "X")
    r["Sbar"] = charge(L + 1, 1, lambda m: m - 1, "Xbar")
    return r


def _standard_exotic(b: _Builder, src: Superalgebra) -> dict[Generator, OscExpr]:
    L, lam = b.L, b.ideal.lam
    I = lambda m: coeff("Icheck", L, m)
    al = lambda m: coeff("alphacheck", L, m)
    be = lambda m: coeff("betacheck", L, m)
    ell = Fraction(L, 2)
    th1 = lam(-1)
    r = {}
    r["H"] = th1 * Fraction(-1, 2) * b.lin(
        [(_q(m) / I(m), b.edot("P", L - m, "P", m - 1)) for m in range(1, L + 1)]
        + [(2 * _q(m) / al(m), b.edot("X", L - 1 - m, "Xbar", m - 1)) for m in range(1, L)]
        + [(_q(m) / be(m), b.edot("J", L - 2 - m, "J", m - 1)) for m in range(1, L - 1)])
    r["D"] = th1 * b.lin(
        [((ell - m) / I(m), b.edot("P", L - m, "P", m)) for m in range(L + 1)]
        + [(_q(L - 2 * m - 1) / al(m), b.edot("X", L - 1 - m, "Xbar", m)) for m in range(L)]
        # printed lower limit m=1 drops a nonzero m=0 term; the sum starts at 0
        + [((ell - m - 1) / be(m), b.edot("J", L - 2 - m, "J", m)) for m in range(L - 1)])
    r["C"] = th1 * Fraction(-1, 2) * b.lin(
        [(_q(m) / I(m), b.edot("P", L + 1 - m, "P", m)) for m in range(1, L + 1)]
        + [(2 * _q(m) / al(m), b.edot("X", L - m, "Xbar", m)) for m in range(1, L)]
        + [(_q(m) / be(m), b.edot("J", L - 1 - m, "J", m)) for m in range(1, L - 1)])
    r[M(1, 2)] = th1 * Fraction(1, 2) * b.lin(
        [(_q(1) / I(m), b.dot("P", L - m, "P", m)) for m in range(L + 1)]
        + [(_q(2) / al(m), b.dot("X", L - 1 - m, "Xbar", m)) for m in range(L)]
        + [(_q(1) / be(m), b.dot("J", L - 2 - m, "J", m)) for m in range(L - 1)])
    r["R"] = th1 * b.lin([(_q(1) / al(m), b.edot("X", L - 1 - m, "Xbar", m)) for m in range(L)]) \
        + b.ideal.scalar(L)

    def charge(top_p, jcoef, partner):
        return th1 * b.lin(
            [(_q(m) / I(m), b.edot("P", top_p - m, partner, m - 1)
              + jcoef(m) * b.edot("J", top_p - 1 - m, partner, m - 1)) for m in range(1, L + 1)])

    r["Q"] = charge(L, lambda m: L - m, "X")
    r["Qbar"] = charge(L, lambda m: -(L - m), "Xbar")
    r["S"] = charge(L + 1, lambda m: -(m - 1), "X")
    r["Sbar"] = charge(L + 1, lambda m: m - 1, "Xbar")
    return r


def _exotic_mass(b: _Builder, src: Superalgebra) -> dict[Generator, OscExpr]:
    L, lam = b.L, b.ideal.lam
    I = lambda m: coeff("I", L, m)
    al = lambda m: coeff("alpha", L, m)
    ell = Fraction(L, 2)
    mu1, half_mu1 = lam(-1), lam(-1) * Fraction(1, 2)
    r = {}
    r["H"] = half_mu1 * b.lin(
        [(_q(m) / I(m), b.dot("P", L - m, "P", m - 1)) for m in range(1, L + 1)]
        + [(_q(m) / al(m), b.dot("X", L - 1 - m, "X", m - 1)) for m in range(1, L)])
    r["D"] = mu1 * b.lin([((m - ell) / I(m), b.dot("P", L - m, "P", m)) for m in range(L + 1)]) \
        + half_mu1 * b.lin([(_q(2 * m + 1 - L) / al(m), b.dot("X", L - 1 - m, "X", m)) for m in range(L)])
    r["C"] = half_mu1 * b.lin(
        [(_q(m) / I(m), b.dot("P", L + 1 - m, "P", m)) for m in range(1, L + 1)]
        + [(_q(m) / al(m), b.dot("X", L - m, "X", m)) for m in range(1, L)])
    m12 = half_mu1 * b.lin([(_q(1) / I(m), b.edot("P", L - m, "P", m)) for m in range(L + 1)])
    r[M(1, 2)] = m12
    r["R"] = lam(-1) * Fraction(-(L + 1), 2) * b.lin(
        [(_q(1) / al(m), b.edot("X", L - 1 - m, "X", m)) for m in range(L)]) - (L - 1) * m12
    r["Q"] = -mu1 * b.lin([(_q(m) / I(m), b.dot("P", L - m, "X", m - 1)) for m in range(1, L + 1)])
    r["Qstar"] = -mu1 * b.lin([(_q(m) / I(m), b.edot("P", L - m, "X", m - 1)) for m in range(1, L + 1)])
    r["S"] = -mu1 * b.lin([(_q(m) / I(m), b.dot("P", L + 1 - m, "X", m - 1)) for m in range(1, L + 1)])
    r["Sstar"] = -mu1 * b.lin([(_q(m) / I(m), b.edot("P", L + 1 - m, "X", m - 1)) for m in range(1, L + 1)])
    return r


def _exotic_exotic(b: _Builder, src: Superalgebra) -> dict[Generator, OscExpr]:
    L, lam = b.L, b.ideal.lam
    I = lambda m: coeff("Icheck", L, m)
    al = lambda m: coeff("alphacheck", L, m)
    ell = Fraction(L, 2)
    th1 = lam(-1)
    r = {}
    r["H"] = th1 * Fraction(-1, 2) * b.lin(
        [(_q(m) / I(m), b.edot("P", L - m, "P", m - 1)) for m in range(1, L + 1)]
        + [(_q(m) / al(m), b.edot("X", L - 1 - m, "X", m - 1)) for m in range(1, L)])
    r["D"] = th1 * b.lin([((ell - m) / I(m), b.edot("P", L - m, "P", m)) for m in range(L + 1)]) \
        + th1 * Fraction(1, 2) * b.lin([(_q(L - 2 * m - 1) / al(m), b.edot("X", L - 1 - m, "X", m))
                                        for m in range(L)])
    r["C"] = th1 * Fraction(-1, 2) * b.lin(
        [(_q(m) / I(m), b.edot("P", L + 1 - m, "P", m)) for m in range(1, L + 1)]
        + [(_q(m) / al(m), b.edot("X", L - m, "X", m)) for m in range(1, L)])
    m12 = th1 * Fraction(1, 2) * b.lin([(_q(1) / I(m), b.dot("P", L - m, "P", m)) for m in range(L + 1)])
    r[M(1, 2)] = m12
    r["R"] = th1 * Fraction(-(L + 1), 2) * b.lin(
        [(_q(1) / al(m), b.dot("X", L - 1 - m, "X", m)) for m in range(L)]) - (L - 1) * m12
    r["Q"] = th1 * b.lin([(_q(m) / I(m), b.edot("P", L - m, "X", m - 1)) for m in range(1, L + 1)])
    r["Qstar"] = -th1 * b.lin([(_q(m) / I(m), b.dot("P", L - m, "X", m - 1)) for m in range(1, L + 1)])
    r["S"] = th1 * b.lin([(_q(m) / I(m), b.edot("P", L + 1 - m, "X", m - 1)) for m in range(1, L + 1)])
    r["Sstar"] = -th1 * b.lin([(_q(m) / I(m), b.dot("P", L + 1 - m, "X", m - 1)) for m in range(1, L + 1)])
    return r


_CASES = {
    (Family.STANDARD, Central.MASS): _standard_mass,
    (Family.STANDARD, Central.EXOTIC): _standard_exotic,
    (Family.EXOTIC, Central.MASS): _exotic_mass,
    (Family.EXOTIC, Central.EXOTIC): _exotic_exotic,
}


def realize(spec: BuildSpec | Superalgebra) -> Realization:
    """Build the realization map for one of the four centrally extended N=2 cases."""
    src = spec if isinstance(spec, Superalgebra) else spec.build()
    case = _CASES.get((src.family, src.central))
    if case is None:
        raise AlgebraError(
            f"no realization for family={src.family.value if src.family else None}, "
            f"central={src.central.value}")
    ideal = IdealAlgebra(src)
    b = _Builder(ideal)
    named = case(b, src)
    out: dict[Generator, OscExpr] = {}
    for g in src.generators:
        if g in ideal.index:
            out[g] = ideal.letter(g)
        elif g == ideal.central:
            out[g] = ideal.lam(1)
        elif g in named:
            out[g] = named[g]
        elif g.name in named:
            out[g] = named[g.name]
        else:
            raise AlgebraError(f"realization has no image for {g!r}")
    return Realization(src, ideal, out)


def verify_realization(r: Realization) -> ViolationReport:
    """Check graded_commutator(r(a), r(b)) = r([a, b]) on every pair a <= b."""
    src = r.source
    gens = src.generators
    out = []
    for k, a in enumerate(gens):
        for b in gens[k:]:
            lhs = graded_commutator(r.map[a], r.map[b])
            rhs = r(src.basis_bracket(a, b))
            res = lhs - rhs
            if res:
                out.append(Violation("realization", (a, b), res))
    return ViolationReport(out, src.index)


# ---------------------------------------------------------------------------
# oscillator basis and the bose-fermi Hamiltonian (standard super, mass)
# ---------------------------------------------------------------------------

@dataclass
class OscillatorBasis:
    ideal: IdealAlgebra
    bosons: dict[tuple[int, int], tuple[OscExpr, OscExpr]]
    fermions: dict[tuple[int, int], tuple[OscExpr, OscExpr]]
    fermion_sign_flipped: bool = False


def _standard_mass_ideal(two_ell: int, d: int) -> IdealAlgebra:
    if two_ell % 2 == 0:
        raise AlgebraError("the oscillator basis needs 2l odd (mass extension)")
    return IdealAlgebra(build(Family.STANDARD, d, two_ell, Central.MASS))


def build_oscillator_basis(two_ell: int, d: int, flip_fermion_sign: bool = False,
                           ideal: IdealAlgebra | None = None) -> OscillatorBasis:
    """Bosons b, b+ and fermions a, a+ indexed by (n, i), n = 1..2l.

    With ``flip_fermion_sign`` the annihilators a^(n) change sign, which
    turns the printed anticommutator {a, a+} = -1 into +1.
    """
    ideal = ideal or _standard_mass_ideal(two_ell, d)
    L = two_ell
    half = (L + 1) // 2          # l + 1/2
    rmu = ideal.lam(Fraction(-1, 2))
    bos, fer = {}, {}
    for i in range(1, d + 1):
        for n in range(1, L + 1):
            if n <= half:
                ann = ideal.letter(P(n - 1, i)) * rmu / coeff("I", L, n - 1)
                cre = ideal.letter(P(L - n + 1, i)) * rmu
            else:
                k = n - half - 1          # n - l - 3/2
                ann = ideal.letter(J(k, i)) * rmu / coeff("beta", L, k)
                cre = ideal.letter(J(L + half - 1 - n, i)) * rmu    # 3l - n - 1/2
            bos[(n, i)] = (ann, cre)
            s = 1 if flip_fermion_sign else -1
            fa = ideal.letter(Xbar(n - 1, i)) * rmu * Fraction(s, coeff("alpha", L, n - 1))
            fc = ideal.letter(X(L - n, i)) * rmu
            fer[(n, i)] = (fa, fc)
    return OscillatorBasis(ideal, bos, fer, flip_fermion_sign)


def canonical_relations(basis: OscillatorBasis) -> dict[str, dict]:
    """All pairwise (anti)commutators of the basis, keyed by kind and indices.

    Values are LaurentScalars when the result is a pure scalar; any
    non-scalar result is returned as the OscExpr itself.
    """
    out = {"bb+": {}, "bb": {}, "b+b+": {}, "aa+": {}, "aa": {}, "a+a+": {}}

    def val(e: OscExpr):
        return e.scalar_part() if e.degree() == 0 else e

    for (kind, pool) in (("b", basis.bosons), ("a", basis.fermions)):
        keys = sorted(pool)
        for x in keys:
            for y in keys:
                ax, cx = pool[x]
                ay, cy = pool[y]
                out[f"{kind}{kind}+"][(x, y)] = val(graded_commutator(ax, cy))
                out[f"{kind}{kind}"][(x, y)] = val(graded_commutator(ax, ay))
                out[f"{kind}+{kind}+"][(x, y)] = val(graded_commutator(cx, cy))
    return out


def fermion_sign(basis: OscillatorBasis) -> int:
    """The global s in {a^(m)_i, a+^(n)_j} = s delta delta; raises if none exists."""
    rel = canonical_relations(basis)
    seen = set()
    for (x, y), v in rel["aa+"].items():
        if x == y:
            seen.add(v)
        elif v:
            raise AlgebraError(f"off-diagonal anticommutator {x}, {y} = {v!r}")
    if len(seen) != 1:
        raise AlgebraError(f"no global sign: diagonal values {seen}")
    s = seen.pop()
    if s not in (1, -1):
        raise AlgebraError(f"diagonal anticommutator {s!r} is not +-1")
    return rational(s.coeffs.get(0, 0))


def build_bf_hamiltonian(two_ell: int, d: int, flip_fermion_sign: bool = False,
                         basis: OscillatorBasis | None = None) -> OscExpr:
    """The bose-fermi oscillator Hamiltonian, written back in ideal generators."""
    basis = basis or build_oscillator_basis(two_ell, d, flip_fermion_sign)
    L = two_ell
    ell = Fraction(L, 2)
    half = (L + 1) // 2
    ideal = basis.ideal
    terms = []
    for (n, i), (ann, cre) in basis.bosons.items():
        w = (ell - n + 1) if n <= half else (L - n + Fraction(1, 2))
        terms.append((w, cre * ann))
    for (n, i), (ann, cre) in basis.fermions.items():
        terms.append((-(ell - n + Fraction(1, 2)), cre * ann))
    return linear_combination(ideal, terms)


def hamiltonian_residual(two_ell: int, d: int, flip_fermion_sign: bool = False) -> OscExpr:
    """D_real + 2*Ham + l(l+1/2)d; zero exactly when the relation holds."""
    r = realize(build(Family.STANDARD, d, two_ell, Central.MASS))
    basis = build_oscillator_basis(two_ell, d, flip_fermion_sign, ideal=r.target)
    ham = build_bf_hamiltonian(two_ell, d, basis=basis)
    ell = Fraction(two_ell, 2)
    return r.map[Generator("D")] + 2 * ham + r.target.scalar(ell * (ell + Fraction(1, 2)) * d)


def hamiltonian_offset(two_ell: int, d: int) -> Fraction:
    """The exact constant c with D_real = -2*Ham - c.

    Raises if D_real + 2*Ham is not a pure scalar.
    """
    ell = Fraction(two_ell, 2)
    res = hamiltonian_residual(two_ell, d) - ell * (ell + Fraction(1, 2)) * d
    if res.degree() > 0:
        raise AlgebraError("D_real + 2*Ham is not a scalar")
    s = res.scalar_part()
    if not s.is_integral() or set(s.coeffs) - {0}:
        raise AlgebraError("D_real + 2*Ham depends on the central parameter")
    return -Fraction(s.coeffs.get(0, 0))
