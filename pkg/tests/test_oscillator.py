import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from supergca import AlgebraError, IdealAlgebra, LaurentScalar, build, graded_commutator, multiply
from supergca.core import P, X, Xbar

MASS_HALF = IdealAlgebra(build("standard", 1, 1, "mass"))
MASS_32 = IdealAlgebra(build("standard", 2, 3, "mass"))
EXOTIC_2 = IdealAlgebra(build("exotic-super", 2, 2, "exotic"))
N1_HALF = IdealAlgebra(build("n1", 1, 1, "mass"))


# --- LaurentScalar ------------------------------------------------------------

def test_laurent_arithmetic():
    a = LaurentScalar({2: 3, 0: 1})          # 3 lam + 1
    b = LaurentScalar.monomial(2, -2)        # 2 / lam
    assert (a * b).coeffs == {0: 6, -2: 2}
    assert (a * b / b) == a
    assert a - a == LaurentScalar() and not LaurentScalar({4: 0})
    assert LaurentScalar({1: 1}) * LaurentScalar({1: 1}) == LaurentScalar({2: 1})
    assert not LaurentScalar({1: 1}).is_integral()
    with pytest.raises(AlgebraError):
        a / a


def test_ideal_requires_center():
    with pytest.raises(AlgebraError):
        IdealAlgebra(build("standard", 1, 1))


def test_letter_order_is_species_then_level_then_index():
    labels = [g.name for g in MASS_32.letters]
    first = {name: labels.index(name) for name in ("P", "X", "Xbar", "J")}
    assert first["P"] < first["X"] < first["Xbar"] < first["J"]
    ps = [g for g in MASS_32.letters if g.name == "P"]
    assert ps == sorted(ps, key=lambda g: g.indices)


# --- products: printed examples -------------------------------------------------

def test_ordered_product_is_one_word():
    e = MASS_HALF.word(P(0, 1), P(1, 1))
    assert list(e.terms()) == [(P(0, 1), P(1, 1))]


def test_reordering_produces_central_term():
    e = MASS_HALF.word(P(1, 1), P(0, 1))
    assert e == MASS_HALF.word(P(0, 1), P(1, 1)) + MASS_HALF.lam(1)


def test_fermion_square_is_half_anticommutator():
    e = N1_HALF.word(X(0, 1), X(0, 1))
    assert e == N1_HALF.lam(1) * Fraction(1, 2)


def test_words_stay_fermion_multilinear():
    e = MASS_32.word(X(0, 1), Xbar(2, 1), X(0, 1), Xbar(2, 1), P(1, 2))
    for w in e.terms():
        odd = [g for g in w if g.odd]
        assert len(odd) == len(set(odd))


# --- algebraic laws on random words ---------------------------------------------

def _words(ideal, max_len=3):
    return st.lists(st.sampled_from(ideal.letters), min_size=0, max_size=max_len)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([MASS_32, EXOTIC_2, N1_HALF]), st.data())
def test_associativity(ideal, data):
    a, b, c = (ideal.word(*data.draw(_words(ideal))) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([MASS_32, EXOTIC_2]), st.data(), st.integers(0, 10**6))
def test_normal_ordering_is_confluent(ideal, data, seed):
    w = tuple(ideal.index[g] for g in data.draw(_words(ideal, 6)))
    assert ideal.normal_form_random(w, random.Random(seed)) == ideal.normal_form(w)


def _homogeneous(ideal, data):
    gens = data.draw(_words(ideal, 2))
    return ideal.word(*gens) * data.draw(st.integers(-2, 2).filter(bool))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([MASS_32, EXOTIC_2, N1_HALF]), st.data())
def test_graded_commutator_satisfies_super_jacobi(ideal, data):
    a, b, c = (_homogeneous(ideal, data) for _ in range(3))
    pa, pb, pc = a.parity(), b.parity(), c.parity()
    s = lambda p, q: -1 if p and q else 1
    total = (s(pa, pc) * graded_commutator(a, graded_commutator(b, c))
             + s(pb, pa) * graded_commutator(b, graded_commutator(c, a))
             + s(pc, pb) * graded_commutator(c, graded_commutator(a, b)))
    assert total == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([MASS_32, EXOTIC_2]), st.data())
def test_commutator_parity_and_degree(ideal, data):
    a, b = _homogeneous(ideal, data), _homogeneous(ideal, data)
    c = graded_commutator(a, b)
    assert c.parity() == (a.parity() + b.parity()) % 2 or not c
    if a.degree() <= 2 and b.degree() <= 2:
        assert c.degree() <= 2


@settings(max_examples=40, deadline=None)
@given(st.data(), st.integers(-3, 3))
def test_scalars_are_central(data, k):
    a = _homogeneous(MASS_32, data)
    assert graded_commutator(MASS_32.lam(k), a) == 0


def test_indefinite_parity_is_rejected():
    mixed = MASS_HALF.letter(P(0, 1)) + MASS_HALF.letter(X(0, 1))
    with pytest.raises(AlgebraError):
        graded_commutator(mixed, mixed)


def test_mixing_ideals_is_rejected():
    with pytest.raises(AlgebraError):
        multiply(MASS_HALF.letter(P(0, 1)), N1_HALF.letter(P(0, 1)))


# --- independent representation oracles --------------------------------------

def _at(expr, mu):
    """Evaluate Laurent coefficients at lam = mu (integral exponents only)."""
    out = {}
    for w, sc in expr.terms().items():
        out[w] = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
                     * sympy.Integer(mu) ** sympy.Rational(e, 2) for e, c in sc.coeffs.items())
    return out


@pytest.mark.parametrize("seed", range(8))
def test_boson_products_match_differential_operators(seed):
    # [P0, P1] = -lam is realized by P0 = -lam d/dx, P1 = x on polynomials
    x, lam = sympy.symbols("x lam")
    f = sympy.Function("f")(x)
    op = {P(0, 1): lambda g: -lam * sympy.diff(g, x), P(1, 1): lambda g: x * g}
    rng = random.Random(seed)
    word = [rng.choice([P(0, 1), P(1, 1)]) for _ in range(5)]

    def apply(w, g):
        for letter in reversed(w):
            g = op[letter](g)
        return g

    lhs = apply(word, f)
    rhs = 0
    for w, sc in MASS_HALF.word(*word).terms().items():
        coef = sum(c * lam ** Fraction(e, 2) for e, c in sc.coeffs.items())
        rhs += coef * apply(w, f)
    assert sympy.expand(lhs - rhs) == 0


@pytest.mark.parametrize("seed", range(8))
def test_fermion_products_match_matrices(seed):
    # {X, Xbar} = lam with X^2 = Xbar^2 = 0: 2x2 matrices at lam = 3
    mu = 3
    mat = {X(0, 1): sympy.Matrix([[0, mu], [0, 0]]), Xbar(0, 1): sympy.Matrix([[0, 0], [1, 0]])}
    rng = random.Random(seed)
    word = [rng.choice(list(mat)) for _ in range(5)]
    lhs = sympy.eye(2)
    for g in word:
        lhs = lhs * mat[g]
    rhs = sympy.zeros(2)
    for w, c in _at(MASS_HALF.word(*word), mu).items():
        m = sympy.eye(2)
        for g in w:
            m = m * mat[g]
        rhs += c * m
    assert lhs == rhs
