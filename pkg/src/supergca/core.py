"""Generators, elements, bracket tables and the generic verifiers.

Everything here works with exact rationals.  Coefficients are kept as
``int`` whenever they are integral and as :class:`fractions.Fraction`
otherwise; floats are rejected.
"""
from __future__ import annotations

import enum
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence


class AlgebraError(ValueError):
    """Raised for illegal specs, unknown generators and malformed input."""


def rational(x) -> int | Fraction:
    """Normalize an exact scalar: integral values become ``int``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return rational(Fraction(x))
    raise TypeError(f"inexact coefficient {x!r}")


# ---------------------------------------------------------------------------
# parameters and generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class HalfInt:
    """A half-integer stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value) -> HalfInt:
        q = Fraction(value)
        if (2 * q).denominator != 1:
            raise AlgebraError(f"{value!r} is not a half-integer")
        return cls(int(2 * q))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"


class Family(enum.Enum):
    GCA = "gca"
    STANDARD = "standard"
    EXOTIC = "exotic-super"
    N1 = "n1"


class Central(enum.Enum):
    NONE = "none"
    MASS = "mass"
    EXOTIC = "exotic"


ODD_NAMES = frozenset({"Q", "Qbar", "S", "Sbar", "Qstar", "Sstar", "X", "Xbar"})
CENTRAL_NAMES = frozenset({"CentralM", "CentralTheta"})


@dataclass(frozen=True)
class Generator:
    """A named basis symbol, e.g. ``Generator("P", (0, 1))`` for P^(0)_1.

    ``odd`` defaults from the name; it only needs to be given for names
    outside the built-in families.
    """

    name: str
    indices: tuple[int, ...] = ()
    odd: bool = field(default=None, compare=True)

    def __post_init__(self):
        idx = tuple(int(k) for k in self.indices)
        object.__setattr__(self, "indices", idx)
        if self.odd is None:
            object.__setattr__(self, "odd", self.name in ODD_NAMES)
        if self.name == "M" and len(idx) == 2 and not idx[0] < idx[1]:
            raise AlgebraError(f"M{idx} must be stored with i < j")

    @property
    def parity(self) -> int:
        return 1 if self.odd else 0

    @property
    def label(self) -> str:
        if not self.indices:
            return self.name
        return f"{self.name}({','.join(map(str, self.indices))})"

    def __repr__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, label: str, odd: bool | None = None) -> Generator:
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\(([-0-9, ]*)\))?", label.strip())
        if m is None:
            raise AlgebraError(f"cannot parse generator label {label!r}")
        name, idx = m.group(1), m.group(2)
        indices = tuple(int(s) for s in idx.split(",")) if idx else ()
        return cls(name, indices, odd)


D = Generator("D")
H = Generator("H")
C = Generator("C")
R = Generator("R")
Q = Generator("Q")
Qbar = Generator("Qbar")
S = Generator("S")
Sbar = Generator("Sbar")
Qstar = Generator("Qstar")
Sstar = Generator("Sstar")
CentralM = Generator("CentralM")
CentralTheta = Generator("CentralTheta")


def M(i: int, j: int) -> Generator:
    return Generator("M", (i, j))


def P(n: int, i: int) -> Generator:
    return Generator("P", (n, i))


def X(n: int, i: int) -> Generator:
    return Generator("X", (n, i))


def Xbar(n: int, i: int) -> Generator:
    return Generator("Xbar", (n, i))


def J(n: int, i: int) -> Generator:
    return Generator("J", (n, i))


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class Element:
    """Finite linear combination of generators with exact coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Generator, object] | None = None):
        clean = {}
        for g, c in (terms or {}).items():
            c = rational(c)
            if c:
                clean[g] = c
        self._terms = clean

    @classmethod
    def of(cls, g: Generator, coeff=1) -> Element:
        return cls({g: coeff})

    @property
    def terms(self) -> dict[Generator, int | Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, g: Generator) -> int | Fraction:
        return self._terms.get(g, 0)

    def support(self) -> frozenset[Generator]:
        return frozenset(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Generator):
            other = Element.of(other)
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, Element) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> Element:
        other = _as_element(other)
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, 0) + c
        return Element(out)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element({g: -c for g, c in self._terms.items()})

    def __sub__(self, other) -> Element:
        return self + (-_as_element(other))

    def __rsub__(self, other) -> Element:
        return _as_element(other) - self

    def __mul__(self, k) -> Element:
        k = rational(k)
        return Element({g: k * c for g, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for g, c in self._terms.items():
            if c == 1:
                parts.append(f"+ {g.label}")
            elif c == -1:
                parts.append(f"- {g.label}")
            elif c < 0:
                parts.append(f"- {-c}*{g.label}")
            else:
                parts.append(f"+ {c}*{g.label}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    if isinstance(x, Generator):
        return Element.of(x)
    if isinstance(x, int) and x == 0:
        return Element()
    raise TypeError(f"cannot use {x!r} as an Element")


def sign(p: int) -> int:
    return -1 if p & 1 else 1


# ---------------------------------------------------------------------------
# superalgebras
# ---------------------------------------------------------------------------

class Superalgebra:
    """Generator list plus a sparse graded bracket table.

    ``table`` maps ordered generator pairs to Elements.  On construction
    each pair is moved to its canonical orientation (earlier generator
    first); an entry whose two given orientations disagree keeps both, so
    that :func:`verify_antisymmetry` can report it.
    """

    def __init__(self, generators: Sequence[Generator],
                 table: Mapping[tuple[Generator, Generator], Element | Mapping],
                 *, d: int | None = None, two_ell: int | None = None,
                 family: Family | None = None, central: Central = Central.NONE):
        self.generators = tuple(generators)
        self.index = {g: k for k, g in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise AlgebraError("duplicate generator")
        self.d = d
        self.two_ell = two_ell
        self.family = family
        self.central = central
        raw: dict[tuple[Generator, Generator], Element] = {}
        for (a, b), v in table.items():
            v = v if isinstance(v, Element) else Element(v)
            for g in (a, b, *v):
                if g not in self.index:
                    raise AlgebraError(f"generator {g!r} is not in the algebra")
            if v:
                raw[(a, b)] = v
        canon: dict[tuple[Generator, Generator], Element] = {}
        for (a, b), v in raw.items():
            if self.index[a] <= self.index[b]:
                flipped = raw.get((b, a)) if a != b else None
                if flipped is None or flipped * (-sign(a.parity * b.parity)) == v:
                    canon[(a, b)] = v
                else:
                    canon[(a, b)] = v
                    canon[(b, a)] = flipped
            elif (b, a) not in raw:
                canon[(b, a)] = v * (-sign(a.parity * b.parity))
        self.table = canon

    @property
    def ell(self) -> HalfInt | None:
        return None if self.two_ell is None else HalfInt(self.two_ell)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Superalgebra)
                and self.generators == other.generators
                and self.table == other.table
                and (self.d, self.two_ell, self.family, self.central)
                == (other.d, other.two_ell, other.family, other.central))

    def __repr__(self) -> str:
        fam = self.family.value if self.family else "custom"
        return (f"Superalgebra({fam}, d={self.d}, 2l={self.two_ell}, "
                f"central={self.central.value}, dim={len(self.generators)})")

    def replace_table(self, table, generators=None) -> Superalgebra:
        return Superalgebra(self.generators if generators is None else generators,
                            table, d=self.d, two_ell=self.two_ell,
                            family=self.family, central=self.central)

    def basis_bracket(self, a: Generator, b: Generator) -> Element:
        if a not in self.index or b not in self.index:
            raise AlgebraError(f"unknown generator in [{a!r}, {b!r}]")
        v = self.table.get((a, b))
        if v is not None:
            return v
        v = self.table.get((b, a))
        if v is not None:
            return v * (-sign(a.parity * b.parity))
        return Element()

    @cached_property
    def parities(self) -> list[int]:
        return [g.parity for g in self.generators]

    @cached_property
    def _structure(self) -> list[dict[int, dict[int, int | Fraction]]]:
        """``st[a][b]`` is the index-keyed result of ``[a, b]``; zeros absent."""
        n = len(self.generators)
        st: list[dict[int, dict]] = [dict() for _ in range(n)]
        for a, b in self.table:
            for x, y in ((a, b), (b, a)):
                ix, iy = self.index[x], self.index[y]
                if iy in st[ix]:
                    continue
                v = self.basis_bracket(x, y)
                st[ix][iy] = {self.index[g]: c for g, c in v.items()}
        return st

    def to_element(self, vec: Mapping[int, object]) -> Element:
        return Element({self.generators[k]: c for k, c in vec.items()})


def bracket(alg: Superalgebra, x, y) -> Element:
    """Graded bilinear bracket of two Elements (or Generators)."""
    x, y = _as_element(x), _as_element(y)
    out: dict[Generator, object] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for g, c in alg.basis_bracket(a, b).items():
                out[g] = out.get(g, 0) + ca * cb * c
    return Element(out)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str
    witnesses: tuple[Generator, ...]
    residual: object

    def describe(self) -> str:
        w = ", ".join(g.label for g in self.witnesses)
        return f"{self.kind} ({w}): {self.residual!r}"


class ViolationReport:
    """Canonically sorted list of failed identities; empty iff all hold."""

    def __init__(self, entries: Iterable[Violation] = (), order: Mapping | None = None):
        entries = list(entries)
        if order is not None:
            def key(v):
                return (v.kind, tuple(order.get(g, len(order)) for g in v.witnesses))
        else:
            def key(v):
                return (v.kind, tuple(g.label for g in v.witnesses))
        self.entries = sorted(entries, key=key)

    @property
    def empty(self) -> bool:
        return not self.entries

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.entries)

    def __repr__(self) -> str:
        if not self.entries:
            return "ViolationReport(empty)"
        return "ViolationReport(\n  " + "\n  ".join(v.describe() for v in self.entries) + "\n)"


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def verify_antisymmetry(alg: Superalgebra) -> ViolationReport:
    """Check [a,b] + (-1)^{|a||b|}[b,a] = 0 on every stored pair."""
    out = []
    for (a, b), v in alg.table.items():
        if a == b:
            if not a.odd:
                out.append(Violation("antisymmetry", (a, a), v * 2))
            continue
        if alg.index[a] < alg.index[b] and (b, a) in alg.table:
            res = v + alg.table[(b, a)] * sign(a.parity * b.parity)
            if res:
                out.append(Violation("antisymmetry", (a, b), res))
    return ViolationReport(out, alg.index)


def _apply(st_x: dict, vec: dict, k: int, acc: dict) -> None:
    # acc += k * [x, vec] with st_x the structure row of x
    for y, cy in vec.items():
        row = st_x.get(y)
        if row:
            f = k * cy
            for g, c in row.items():
                acc[g] = acc.get(g, 0) + f * c


def _jacobi_residual(st, par, a: int, b: int, c: int) -> dict:
    acc: dict[int, object] = {}
    bc = st[b].get(c)
    if bc:
        _apply(st[a], bc, sign(par[a] * par[c]), acc)
    ca = st[c].get(a)
    if ca:
        _apply(st[b], ca, sign(par[b] * par[a]), acc)
    ab = st[a].get(b)
    if ab:
        _apply(st[c], ab, sign(par[c] * par[b]), acc)
    return {g: v for g, v in acc.items() if v}


def _jacobi_candidates(st) -> list[tuple[int, int, int]]:
    # a triple can only fail if some [x,[y,z]] is nonzero
    n = len(st)
    acting: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        for k in st[x]:
            acting[k].append(x)
    cand = set()
    for y in range(n):
        for z, row in st[y].items():
            if z < y:
                continue
            for k in row:
                for x in acting[k]:
                    cand.add(tuple(sorted((x, y, z))))
    return sorted(cand)


def _jacobi_chunk(args):
    st, par, triples = args
    out = []
    for t in triples:
        r = _jacobi_residual(st, par, *t)
        if r:
            out.append((t, r))
    return out


# below this many candidate triples a process pool costs more than it saves
PARALLEL_MIN_TRIPLES = 20000


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("SUPERGCA_MAX_WORKERS", "1")))
    except ValueError:
        return 1


def jacobi_residuals(alg: Superalgebra, workers: int | None = None) -> dict[tuple[int, int, int], dict]:
    """Index-keyed nonzero Jacobi residuals over all unordered triples."""
    st, par = alg._structure, alg.parities
    triples = _jacobi_candidates(st)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(triples) < PARALLEL_MIN_TRIPLES:
        found = _jacobi_chunk((st, par, triples))
    else:
        size = -(-len(triples) // workers)
        chunks = [(st, par, triples[k:k + size]) for k in range(0, len(triples), size)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            found = [item for part in ex.map(_jacobi_chunk, chunks) for item in part]
    return dict(found)


def jacobi_triple(alg: Superalgebra, a: Generator, b: Generator, c: Generator) -> Element:
    """Residual of the super Jacobi identity on one ordered triple."""
    i = alg.index
    return alg.to_element(_jacobi_residual(alg._structure, alg.parities, i[a], i[b], i[c]))


def verify_super_jacobi(alg: Superalgebra, workers: int | None = None) -> ViolationReport:
    """Check the graded cyclic identity on every unordered triple of basis generators."""
    gens = alg.generators
    out = [Violation("jacobi", (gens[a], gens[b], gens[c]), alg.to_element(r))
           for (a, b, c), r in jacobi_residuals(alg, workers).items()]
    return ViolationReport(out, alg.index)


def verify_weight_grading(alg: Superalgebra, grader: Generator,
                          weights: Mapping[Generator, object]) -> ViolationReport:
    """Check [grader, g] = w_g g for every generator g."""
    missing = [g for g in alg.generators if g not in weights]
    if missing:
        raise AlgebraError(f"no weight given for {missing[0]!r}")
    out = []
    for g in alg.generators:
        res = alg.basis_bracket(grader, g) - Element.of(g, weights[g])
        if res:
            out.append(Violation("grading", (grader, g), res))
    return ViolationReport(out, alg.index)


def verify_subalgebra_closure(alg: Superalgebra, subset: Sequence[Generator]) -> ViolationReport:
    """Report every bracket of two subset members that leaves their span."""
    span = set(subset)
    for g in span:
        if g not in alg.index:
            raise AlgebraError(f"generator {g!r} is not in the algebra")
    members = sorted(span, key=alg.index.__getitem__)
    out = []
    for k, a in enumerate(members):
        for b in members[k:]:
            v = alg.basis_bracket(a, b)
            esc = Element({g: c for g, c in v.items() if g not in span})
            if esc:
                out.append(Violation("closure", (a, b), esc))
    return ViolationReport(out, alg.index)


# ---------------------------------------------------------------------------
# structure-constant edits (for mutation testing and linting)
# ---------------------------------------------------------------------------

def structure_constants(alg: Superalgebra) -> list[tuple[Generator, Generator, Generator, int | Fraction]]:
    """Every stored nonzero constant as (left, right, result, coefficient)."""
    pos = alg.index
    out = []
    for (a, b), v in sorted(alg.table.items(), key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]])):
        for g, c in sorted(v.items(), key=lambda gc: pos[gc[0]]):
            out.append((a, b, g, c))
    return out


def with_constant(alg: Superalgebra, a: Generator, b: Generator, g: Generator, value) -> Superalgebra:
    """Copy of ``alg`` with the g-coefficient of the stored [a, b] set to ``value``.

    Only the stored orientation changes, so the edit stays antisymmetric.
    """
    if (a, b) not in alg.table and (b, a) in alg.table:
        raise AlgebraError(f"[{a!r}, {b!r}] is stored as [{b!r}, {a!r}]")
    table = dict(alg.table)
    old = table.get((a, b), Element())
    table[(a, b)] = old - Element.of(g, old.coefficient(g)) + Element.of(g, value)
    return alg.replace_table(table)
