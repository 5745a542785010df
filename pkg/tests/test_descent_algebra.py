import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from runalg.combinatorics import compositions
from runalg.descent_algebra import (
    DescentElement,
    conversion_matrices,
    convert,
    internal_product,
    internal_product_oracle,
    omega,
    omega_conjugate,
    omega_mul,
)
from runalg.run_algebras import build_W

from conftest import descent_elements, random_element

R, S = DescentElement.R, DescentElement.S


def test_convert_examples():
    assert convert(S((1, 2)), "R") == R((1, 2)) + R((3,))
    assert convert(S((1, 2)), "R").terms == {(1, 2): 1, (3,): 1}
    assert convert(S((4,)), "R").terms == {(4,): 1}
    assert convert(R((1, 1)), "S").terms == {(1, 1): 1, (2,): -1}


@given(descent_elements(n_max=8))
def test_convert_round_trip(x):
    other = "S" if x.basis == "R" else "R"
    assert convert(convert(x, other), x.basis).terms == x.terms


@pytest.mark.parametrize("n", range(1, 7))
def test_conversion_matrices_inverse(n):
    a, b = conversion_matrices(n)
    assert (a @ b == np.eye(2 ** (n - 1), dtype=np.int64)).all()


def test_zero_coefficients_dropped():
    x = DescentElement(3, "R", {(3,): 0, (1, 2): Fraction(1, 2)})
    assert x.terms == {(1, 2): Fraction(1, 2)}
    assert not (x - x)


def test_bad_elements():
    with pytest.raises(ValueError):
        DescentElement(3, "R", {(1, 1): 1})
    with pytest.raises(ValueError):
        DescentElement(3, "T", {(3,): 1})
    with pytest.raises(ValueError):
        internal_product(R((3,)), R((2,)))


def test_unit_and_omega():
    for n in range(1, 7):
        u = DescentElement.unit(n)
        w = omega(n)
        assert internal_product(w, w) == u
        for c in compositions(n):
            assert internal_product(u, R(c)) == R(c) == internal_product(R(c), u)


def test_frozen_oracle_values():
    # values computed once with internal_product_oracle and frozen
    assert internal_product(S((2, 1)), S((1, 2))).terms == {(1, 1, 1): 1, (1, 2): 1}
    assert internal_product(R((1, 2)), R((2, 1))).terms == {(1, 1, 1): 1, (2, 1): 1, (3,): 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_fast_product_matches_oracle_on_basis(n):
    comps = compositions(n)
    for a in comps:
        for b in comps:
            assert internal_product(R(a), R(b)) == internal_product_oracle(R(a), R(b))


def test_fast_product_matches_oracle_random(rng):
    for n in (5, 6):
        for _ in range(4):
            x = random_element(n, rng, "R")
            y = random_element(n, rng, "S")
            assert internal_product(x, y) == internal_product_oracle(x, y)


def test_result_basis_follows_left_factor():
    assert internal_product(S((2, 1)), R((3,))).basis == "S"
    assert internal_product(R((2, 1)), S((3,))).basis == "R"


def test_large_coefficients_stay_exact():
    n = 6
    big = DescentElement(n, "R", {c: 10**15 + i for i, c in enumerate(compositions(n))})
    small = DescentElement(n, "R", {c: Fraction(1, 7) for c in compositions(n)})
    assert internal_product(big, small) == internal_product_oracle(big, small)


@pytest.mark.parametrize("n", range(2, 8))
def test_omega_mul_on_run_families(n):
    for k in range(1, n):
        plus, minus = build_W(n, k, "plus"), build_W(n, k, "minus")
        assert omega_mul(plus, "left") == minus
        assert omega_mul(minus, "left") == plus
        assert omega_mul(plus, "right") == (minus if k % 2 else plus)


def test_omega_mul_bad_side():
    with pytest.raises(ValueError):
        omega_mul(R((2,)), "middle")


@given(descent_elements(n_min=2, n_max=6))
def test_omega_conjugation_involution(x):
    assert omega_conjugate(omega_conjugate(x)) == x


def test_omega_conjugation_is_automorphism(rng):
    for n in range(2, 7):
        x, y = random_element(n, rng), random_element(n, rng)
        assert omega_conjugate(internal_product(x, y)) == internal_product(omega_conjugate(x), omega_conjugate(y))


def test_associativity_n8(rng):
    n = 8
    x, y, z = (random_element(n, rng, density=0.1) for _ in range(3))
    assert internal_product(internal_product(x, y), z) == internal_product(x, internal_product(y, z))


def test_vector_round_trip(rng):
    x = random_element(5, rng)
    assert DescentElement.from_vector(5, "R", x.vector("R")) == x
    assert x.coefficient((5,)) == x.terms.get((5,), 0)
