"""Associative envelope of the centrally extended abelian ideal.

Once the central charge is replaced by a number, the ideal spanned by
P, X, Xbar and J is a Weyl-Clifford algebra.  Elements are stored as
normal-ordered words with coefficients that are Laurent polynomials in the
single central parameter (written ``lam`` below; it stands for mu or theta).
Exponents of ``lam`` are kept doubled so that ``lam**(1/2)`` is available
for the oscillator basis.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping

from .core import AlgebraError, Central, Generator, Superalgebra, rational

SPECIES = ("P", "X", "Xbar", "J")


class LaurentScalar:
    """Finite sum of c_k lam^k with k in (1/2)Z; keys are 2k."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self._c = {}
        for e, c in (coeffs or {}).items():
            c = rational(c)
            if c:
                self._c[int(e)] = c

    @classmethod
    def monomial(cls, c=1, twice_exp: int = 0) -> LaurentScalar:
        return cls({twice_exp: c})

    @property
    def coeffs(self) -> dict[int, int | Fraction]:
        return dict(self._c)

    def is_integral(self) -> bool:
        return all(e % 2 == 0 for e in self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, LaurentScalar):
            try:
                other = LaurentScalar({0: other})
            except TypeError:
                return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _as_scalar(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_as_scalar(other))

    def __mul__(self, other):
        other = _as_scalar(other)
        out: dict[int, object] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_scalar(other)
        if len(other._c) != 1:
            raise AlgebraError("division only by a monomial c*lam^k")
        (e, c), = other._c.items()
        return LaurentScalar({k - e: Fraction(v) / c for k, v in self._c.items()})

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            c = self._c[e]
            if e == 0:
                parts.append(f"{c}")
            else:
                k = e // 2 if e % 2 == 0 else f"{e}/2"
                parts.append(f"{c}*lam^{k}")
        return " + ".join(parts)


def _as_scalar(x) -> LaurentScalar:
    return x if isinstance(x, LaurentScalar) else LaurentScalar({0: x})


def _species_key(g: Generator):
    return (SPECIES.index(g.name), g.indices[0], g.indices[1])


class IdealAlgebra:
    """The ideal of a centrally extended algebra, as an associative algebra.

    The (anti)commutator of two ideal letters is read off the source
    algebra's table: it must be a multiple of the central generator, which
    becomes ``lam``.
    """

    def __init__(self, source: Superalgebra):
        if source.central is Central.NONE:
            raise AlgebraError("the ideal is commutative without a central extension")
        self.source = source
        self.d, self.two_ell, self.kind = source.d, source.two_ell, source.central
        self.central = next(g for g in source.generators if g.name.startswith("Central"))
        self.letters = sorted((g for g in source.generators if g.name in SPECIES),
                              key=_species_key)
        self.index = {g: k for k, g in enumerate(self.letters)}
        self.odd = [g.odd for g in self.letters]
        self.with_fermions = any(self.odd)
        self.contraction: dict[tuple[int, int], object] = {}
        for a, ga in enumerate(self.letters):
            for b, gb in enumerate(self.letters):
                v = source.basis_bracket(ga, gb)
                if set(v) - {self.central}:
                    raise AlgebraError(f"[{ga!r}, {gb!r}] leaves the center")
                c = v.coefficient(self.central)
                if c:
                    self.contraction[(a, b)] = c
        self._memo: dict[tuple[int, ...], dict] = {}

    def __eq__(self, other):
        return isinstance(other, IdealAlgebra) and self.source == other.source

    def __hash__(self):
        return id(self.source)

    # -- normal ordering ---------------------------------------------------

    def _reducible(self, w: tuple[int, ...]) -> list[int]:
        odd = self.odd
        return [k for k in range(len(w) - 1)
                if w[k] > w[k + 1] or (w[k] == w[k + 1] and odd[w[k]])]

    def _rewrite(self, w: tuple[int, ...], k: int, recurse) -> dict:
        a, b = w[k], w[k + 1]
        out: dict = {}
        if a == b:
            # f f = 1/2 {f, f}
            s = self.contraction.get((a, a), 0)
            if s:
                for (ww, e), c in recurse(w[:k] + w[k + 2:]).items():
                    key = (ww, e + 2)
                    out[key] = out.get(key, 0) + Fraction(s, 2) * c
            return {k_: v for k_, v in out.items() if v}
        sg = -1 if self.odd[a] and self.odd[b] else 1
        for key, c in recurse(w[:k] + (b, a) + w[k + 2:]).items():
            out[key] = out.get(key, 0) + sg * c
        s = self.contraction.get((a, b), 0)
        if s:
            for (ww, e), c in recurse(w[:k] + w[k + 2:]).items():
                key = (ww, e + 2)
                out[key] = out.get(key, 0) + s * c
        return {k_: rational(v) for k_, v in out.items() if v}

    def normal_form(self, w: tuple[int, ...]) -> dict:
        """Normal-ordered expansion of a word: ``{(word, 2*exp): coeff}``."""
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        red = self._reducible(w)
        res = {(w, 0): 1} if not red else self._rewrite(w, red[0], self.normal_form)
        self._memo[w] = res
        return res

    def normal_form_random(self, w: tuple[int, ...], rng: random.Random) -> dict:
        """Same result as :meth:`normal_form` reached by random rewrite choices."""
        red = self._reducible(w)
        if not red:
            return {(w, 0): 1}
        return self._rewrite(w, rng.choice(red), lambda u: self.normal_form_random(u, rng))

    # -- constructors -------------------------------------------------------

    def letter(self, g: Generator, coeff=1) -> OscExpr:
        if g not in self.index:
            raise AlgebraError(f"{g!r} is not an ideal generator")
        return OscExpr(self, {((self.index[g],), 0): coeff})

    def scalar(self, c=1, twice_exp: int = 0) -> OscExpr:
        return OscExpr(self, {((), twice_exp): c})

    def lam(self, k=1) -> OscExpr:
        """``lam**k`` as an expression; ``k`` may be a half-integer."""
        e2 = Fraction(k) * 2
        if e2.denominator != 1:
            raise AlgebraError("only half-integer powers of lam")
        return self.scalar(1, int(e2))

    def word(self, *gens: Generator) -> OscExpr:
        """Product of letters in the given order, normal-ordered."""
        out = self.scalar(1)
        for g in gens:
            out = out * self.letter(g)
        return out

    def zero(self) -> OscExpr:
        return OscExpr(self, {})


class OscExpr:
    """Normal-ordered noncommutative polynomial with Laurent coefficients."""

    __slots__ = ("ideal", "_t")

    def __init__(self, ideal: IdealAlgebra, terms: Mapping[tuple, object]):
        self.ideal = ideal
        self._t = {}
        for k, c in terms.items():
            c = rational(c)
            if c:
                self._t[k] = c

    # -- views ---------------------------------------------------------------

    def terms(self) -> dict[tuple[Generator, ...], LaurentScalar]:
        grouped: dict[tuple[int, ...], dict[int, object]] = {}
        for (w, e), c in self._t.items():
            grouped.setdefault(w, {})[e] = c
        L = self.ideal.letters
        return {tuple(L[k] for k in w): LaurentScalar(cs) for w, cs in grouped.items()}

    def raw(self) -> dict:
        return dict(self._t)

    def scalar_part(self) -> LaurentScalar:
        return LaurentScalar({e: c for (w, e), c in self._t.items() if not w})

    def degree(self) -> int:
        return max((len(w) for w, _ in self._t), default=0)

    def parity(self) -> int | None:
        """0 or 1 if every word has that fermion parity, else None (0 for zero)."""
        ps = {sum(self.ideal.odd[k] for k in w) % 2 for w, _ in self._t}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def is_integral(self) -> bool:
        return all(e % 2 == 0 for _, e in self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, OscExpr):
            return self.ideal is other.ideal and self._t == other._t
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> OscExpr:
        if isinstance(other, OscExpr):
            if other.ideal is not self.ideal:
                raise AlgebraError("expressions over different ideal algebras")
            return other
        if isinstance(other, LaurentScalar):
            return OscExpr(self.ideal, {((), e): c for e, c in other.coeffs.items()})
        return OscExpr(self.ideal, {((), 0): other})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._t)
        for k, c in other._t.items():
            out[k] = out.get(k, 0) + c
        return OscExpr(self.ideal, out)

    __radd__ = __add__

    def __neg__(self):
        return OscExpr(self.ideal, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return multiply(self, self._coerce(other))

    def __rmul__(self, other):
        return multiply(self._coerce(other), self)

    def __truediv__(self, other):
        if isinstance(other, OscExpr):
            other = other.scalar_part() if other.degree() == 0 else None
            if other is None:
                raise AlgebraError("division by a non-scalar expression")
        s = _as_scalar(other)
        if len(s.coeffs) != 1:
            raise AlgebraError("division only by a monomial c*lam^k")
        (e, c), = s.coeffs.items()
        return OscExpr(self.ideal, {(w, k - e): Fraction(v) / c for (w, k), v in self._t.items()})

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for w, sc in sorted(self.terms().items(), key=lambda t: (len(t[0]), [self.ideal.index[g] for g in t[0]])):
            body = "*".join(g.label for g in w) or "1"
            parts.append(f"({sc!r})*{body}" if w else f"({sc!r})")
        return " + ".join(parts)


def multiply(A: OscExpr, B: OscExpr) -> OscExpr:
    """Associative product, normal-ordered."""
    if A.ideal is not B.ideal:
        raise AlgebraError("expressions over different ideal algebras")
    ideal = A.ideal
    out: dict = {}
    for (w1, e1), c1 in A._t.items():
        for (w2, e2), c2 in B._t.items():
            f = c1 * c2
            for (w, e), c in ideal.normal_form(w1 + w2).items():
                key = (w, e1 + e2 + e)
                out[key] = out.get(key, 0) + f * c
    return OscExpr(ideal, out)


def graded_commutator(A: OscExpr, B: OscExpr) -> OscExpr:
    """AB - (-1)^{|A||B|} BA for expressions of definite parity."""
    pa, pb = A.parity(), B.parity()
    if pa is None or pb is None:
        raise AlgebraError("graded commutator needs expressions of definite parity")
    ab, ba = multiply(A, B), multiply(B, A)
    return ab + ba if pa and pb else ab - ba


def linear_combination(ideal: IdealAlgebra, items: Iterable[tuple[object, OscExpr]]) -> OscExpr:
    out: dict = {}
    for c, e in items:
        for k, v in e._t.items():
            out[k] = out.get(k, 0) + c * v
    return OscExpr(ideal, out)
