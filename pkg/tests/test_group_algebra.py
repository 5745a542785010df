import random
from fractions import Fraction

import pytest

from runalg.combinatorics import permutations, run_stats
from runalg.descent_algebra import DescentElement
from runalg.group_algebra import (
    GAElement,
    NotInDescentAlgebra,
    OracleTooLarge,
    compose,
    ga_product,
    ga_sum_over,
    inverse,
    lift,
    project_to_descent_basis,
)
from runalg.run_algebras import build_P, build_P_oracle, build_W, build_W_oracle


def omega_perm(n):
    return tuple(range(n, 0, -1))


def test_composition_convention():
    # (αβ)(u) = α(β(u)); ω on the right reverses, on the left complements
    w = (2, 4, 1, 3)
    assert compose(w, omega_perm(4)) == w[::-1]
    assert compose(omega_perm(4), w) == tuple(5 - x for x in w)
    assert compose(w, inverse(w)) == (1, 2, 3, 4)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_omega_squared(n):
    w = GAElement.from_perm(omega_perm(n))
    assert w * w == GAElement.identity(n)


def test_identity_is_unit(rng):
    x = GAElement(4, {p: Fraction(rng.randint(-3, 3), 2) for p in permutations(4) if rng.random() < 0.4})
    e = GAElement.identity(4)
    assert e * x == x == x * e


def test_associativity(rng):
    def rand(n):
        return GAElement(n, {p: rng.randint(-2, 2) for p in permutations(n) if rng.random() < 0.3})

    for n in (3, 4, 5):
        a, b, c = rand(n), rand(n), rand(n)
        assert (a * b) * c == a * (b * c)


def test_dense_path_matches_sparse():
    n = 5
    rng = random.Random(3)
    a = GAElement(n, {p: Fraction(rng.randint(-4, 4), 3) for p in permutations(n)})
    b = GAElement(n, {p: rng.randint(-4, 4) for p in permutations(n)})
    expected: dict = {}
    for p, x in a.terms.items():
        for q, y in b.terms.items():
            r = compose(p, q)
            expected[r] = expected.get(r, 0) + x * y
    assert ga_product(a, b) == GAElement(n, expected)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        GAElement.identity(3) * GAElement.identity(4)


def test_oracle_cap(monkeypatch):
    monkeypatch.setenv("RUNALG_MAX_ORACLE_N", "3")
    with pytest.raises(OracleTooLarge):
        ga_product(GAElement.identity(4), GAElement.identity(4))
    assert ga_product(GAElement.identity(4), GAElement.identity(4), force=True) == GAElement.identity(4)


def test_sum_over_examples():
    w2 = ga_sum_over(3, lambda w: run_stats(w)[:2] == (2, True))
    assert w2 == GAElement(3, {(1, 3, 2): 1, (2, 3, 1): 1})
    assert not ga_sum_over(3, lambda w: False)
    assert len(ga_sum_over(4, lambda w: True).terms) == 24


def test_projection_examples():
    w2 = ga_sum_over(3, lambda w: run_stats(w)[:2] == (2, True))
    assert project_to_descent_basis(w2) == DescentElement.R((2, 1))
    assert not project_to_descent_basis(GAElement(3))
    assert project_to_descent_basis(GAElement.identity(5)) == DescentElement.R((5,))
    with pytest.raises(NotInDescentAlgebra):
        project_to_descent_basis(GAElement.from_perm((1, 3, 2)))


def test_w1_times_wk_plus():
    n = 4
    w1 = lift(build_W(n, 1))
    for k in range(1, n):
        assert project_to_descent_basis(w1 * lift(build_W(n, k, "plus"))) == build_W(n, k)


@pytest.mark.parametrize("n", range(2, 8))
def test_families_lie_in_descent_algebra(n):
    for k in range(1, n):
        for v in ("plus", "minus", "plain"):
            assert build_W_oracle(n, k, v) == build_W(n, k, v)
    for k in range(1, n + 1):
        assert build_W_oracle(n, k, "circ") == build_W(n, k, "circ")
    for k in range((n - 1) // 2 + 1):
        assert build_P_oracle(n, k) == build_P(n, k)
    for k in range(n // 2 + 1):
        assert build_P_oracle(n, k, "circ") == build_P(n, k, "circ")
