from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import sympy_rank
from supergca import AlgebraError, build, build_constraints, solve_and_certify, verify_super_jacobi
from supergca.cohomology import (
    CentralAnsatz, absorbs, p_shift, apply_shift, base_algebra, general_shift, install,
    unknown_keys, _slots,
)
from supergca.core import P
from supergca.linalg import nullspace, rank, rref, solve


# --- exact linear algebra ----------------------------------------------------

def test_rref_and_nullspace_small():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    red, piv = rref(rows, 3)
    assert piv == [0, 1] and rank(rows, 3) == 2
    (v,) = nullspace(rows, 3)
    assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)
    assert solve(rows, [1, 2, 0], 3) is not None
    assert solve(rows, [1, 3, 0], 3) is None


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_sympy(rows):
    assert rank(rows, 4) == sympy_rank(rows, 4)
    for v in nullspace(rows, 4):
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


# --- constraint system ----------------------------------------------------------

def test_unknown_count_at_lowest_level():
    assert len(unknown_keys(1)) == 2 + 2 + 2 + 1 + 1 + 1 + 1 == 10


def _hand_rows(L, boundary=False):
    """The hand-written relations among the unknowns, one row per instance.

    The fermionic relations come from the triples (H, Q, Xbar^n) and
    (C, S, Xbar^(n-1)), so they only hold for 1 <= n <= 2l - 1 unless
    ``boundary`` asks for the out-of-range instances too.
    """
    keys = unknown_keys(L)
    col = {k: j for j, k in enumerate(keys)}
    ell = Fraction(L, 2)
    rows = []

    def add(*terms):
        r = [Fraction(0)] * len(keys)
        for key, c in terms:
            if key in col:
                r[col[key]] += Fraction(c)
        if any(r):
            rows.append(r)

    for n in range(L + 1):
        add((("alpha", n - 1), n), (("beta", n), 2 * (ell - n + 1)))
        add((("alpha", n + 1), L - n), (("gamma", n), -2 * (ell - n - 1)))
        add((("alpha", n), 1), (("beta", n + 1), L - n), (("gamma", n - 1), n))
        if boundary or 1 <= n <= L - 1:
            add((("beta", n), 1), (("c1", n - 1), -n))
            add((("beta", n), 1), (("c1bar", n - 1), -n))
            add((("gamma", n), 1), (("c2", n), L - n))
            add((("gamma", n), 1), (("c2bar", n), L - n))
    return rows


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5])
def test_hand_relations_follow_from_generated_constraints(L):
    rows, keys = build_constraints(L)
    hand = _hand_rows(L)
    assert hand
    assert sympy_rank(rows + hand, len(keys)) == sympy_rank(rows, len(keys)) == rank(rows, len(keys))


def test_boundary_fermion_relations_fail_only_at_level_one():
    for L in (1, 3, 4, 5):
        rows, keys = build_constraints(L)
        assert sympy_rank(rows + _hand_rows(L, boundary=True), len(keys)) == rank(rows, len(keys))
    rows, keys = build_constraints(2)
    assert sympy_rank(rows + _hand_rows(2, boundary=True), len(keys)) > rank(rows, len(keys))


@pytest.mark.parametrize("L", [2, 4, 6])
def test_middle_alpha_is_forced_to_zero(L):
    rows, keys = build_constraints(L)
    j = keys.index(("alpha", L // 2))
    assert all(v[j] == 0 for v in nullspace(rows, len(keys)))


def _coboundary_dimension(L):
    """Rank of g -> shift maps whose central terms stay inside the ansatz slots."""
    alg = base_algebra(L)
    even = [g for g in alg.generators if not g.odd]
    slots = {pair for _, _, pair in _slots(L)}
    slot_rows, other_rows = [], []
    for a in alg.generators:
        for b in alg.generators:
            if alg.index[a] > alg.index[b]:
                continue
            v = alg.basis_bracket(a, b)
            r = [v.coefficient(g) for g in even]
            (slot_rows if (a, b) in slots else other_rows).append(r)
    keep = sympy.Matrix(other_rows).nullspace() if other_rows else sympy.eye(len(even)).columnspace()
    if not keep:
        return 0
    return (sympy.Matrix(slot_rows) * sympy.Matrix.hstack(*keep)).rank()


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5])
def test_nullity_equals_coboundary_dimension(L):
    cert = solve_and_certify(L)
    assert cert.nullity == _coboundary_dimension(L)
    rows, keys = build_constraints(L)
    assert cert.nullity == len(keys) - sympy_rank(rows, len(keys))


# --- certificates -----------------------------------------------------------------

@pytest.mark.parametrize("L", [1, 2, 3, 4, 5, 6])
def test_every_solution_is_absorbed(L):
    cert = solve_and_certify(L)
    assert cert.verdict == "trivial" and cert.jacobi_clean
    for vec, red in zip(cert.nullspace, cert.redefinitions):
        ansatz = CentralAnsatz.from_vector(L, vec)
        assert apply_shift(install(ansatz), red) == build("standard", 1, L)


def test_odd_levels_use_only_p_shifts():
    for L in (1, 3, 5):
        assert not solve_and_certify(L).needs_general_shift


def test_level_one_needs_a_j_shift():
    cert = solve_and_certify(2)
    assert cert.needs_general_shift
    moved = {g.name for r in cert.redefinitions for g in r.shift}
    assert moved == {"P", "J"}


def test_special_shift_at_middle_index():
    L = 4
    ansatz = CentralAnsatz(L, {("gamma", 1): Fraction(3)})
    red = p_shift(ansatz)
    assert red.shift == {P(2, 1): Fraction(1)}


def test_zero_ansatz():
    for L in (1, 2):
        zero = CentralAnsatz(L, {})
        red = p_shift(zero)
        assert red.shift == {}
        assert apply_shift(install(zero), red) == build("standard", 1, L)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([1, 2, 3, 4]), st.data())
def test_random_solutions_are_absorbed(L, data):
    basis = solve_and_certify(L).nullspace
    coeffs = [data.draw(st.fractions(-3, 3, max_denominator=3)) for _ in basis]
    vec = [sum(c * v[j] for c, v in zip(coeffs, basis)) for j in range(len(basis[0]))]
    ansatz = CentralAnsatz.from_vector(L, vec)
    red = p_shift(ansatz)
    if not absorbs(ansatz, red):
        red = general_shift(ansatz)
    assert red is not None and absorbs(ansatz, red)
    assert verify_super_jacobi(install(ansatz)).empty


def test_non_solution_is_not_a_coboundary():
    ansatz = CentralAnsatz(3, {("beta", 1): Fraction(1)})
    assert verify_super_jacobi(install(ansatz))
    assert general_shift(ansatz) is None


def test_only_the_standard_family_is_set_up():
    with pytest.raises(AlgebraError):
        solve_and_certify(2, family="exotic-super")
