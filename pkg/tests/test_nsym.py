from fractions import Fraction

import pytest

from runalg.combinatorics import bar, composition_peak_stats, compositions
from runalg.descent_algebra import DescentElement, internal_product
from runalg.nsym import (
    ConstantTermViolation,
    NSymSeries,
    V1,
    build_V,
    exp_star,
    external_product,
    internal_on_degree,
    is_grouplike,
    log_star,
    power,
    power_star,
    scalar,
    star,
    v_product_sign,
)

from conftest import random_element

R, S = DescentElement.R, DescentElement.S
N = 8


def test_star_examples():
    assert star(S((2, 3)), S((5, 1, 1))) == S((2, 3, 5, 1, 1))
    assert star(R((2, 3)), R((5, 1, 1))) == R((2, 3, 5, 1, 1)) + R((2, 8, 1, 1))
    assert star(R((2,)), scalar(3)) == R((2,)).scale(3)


def test_star_bases_agree(rng):
    for a, b in [(2, 3), (3, 3), (1, 4)]:
        x, y = random_element(a, rng), random_element(b, rng)
        assert star(x, y) == star(x.to_basis("S"), y.to_basis("S"))


def test_series_unit(rng):
    a = NSymSeries.from_parts([random_element(d, rng) for d in range(1, 5)], 4)
    one = NSymSeries.one(4)
    assert external_product(a, one) == a == external_product(one, a)


def test_series_degree_check():
    with pytest.raises(ValueError):
        NSymSeries((scalar(1), R((2,))))


def test_grouplike():
    assert is_grouplike(V1("+", N))
    assert is_grouplike(V1("-", N))
    bumped = V1("+", N) + NSymSeries.from_parts([S((1,))], N)
    assert not is_grouplike(bumped)
    for k in (2, 3, 4):
        assert is_grouplike(build_V(k, "+", 6))
        assert is_grouplike(build_V(k, "-", 6))


def test_log_exp_trivial():
    assert log_star(NSymSeries.one(5)) == NSymSeries.zero(5)
    assert exp_star(NSymSeries.zero(5)) == NSymSeries.one(5)


def test_log_exp_inverse():
    v = build_V(3, "-", 7)
    assert exp_star(log_star(v)) == v


def test_exp_of_sum_commuting():
    f = log_star(build_V(2, "-", 6))
    assert exp_star(f + f) == external_product(exp_star(f), exp_star(f))


def test_square_root():
    v2m = build_V(2, "-", N)
    root = power_star(v2m, Fraction(1, 2))
    assert external_product(root, root) == v2m


def test_integer_powers_agree():
    v = build_V(2, "+", 6)
    assert power_star(v, 3) == power(v, 3) == build_V(6, "+", 6)


def test_constant_term_errors():
    with pytest.raises(ConstantTermViolation):
        log_star(NSymSeries.zero(3))
    with pytest.raises(ConstantTermViolation):
        exp_star(NSymSeries.one(3))


def test_v1_parts():
    for n in range(1, 7):
        assert build_V(1, "+", n)[n] == R((n,))
        assert build_V(1, "-", n)[n] == R((1,) * n)


def test_v2_minus_is_twice_peakless():
    for n in range(1, 8):
        expected = {c: 2 for c in compositions(n) if composition_peak_stats(c).pk == 0}
        assert build_V(2, "-", n)[n].terms == expected


def test_v_alternation():
    v = build_V(3, "+", 5)
    assert v == external_product(external_product(V1("+", 5), V1("-", 5)), V1("+", 5))
    assert build_V(2, "both", 4) == build_V(2, "+", 4) + build_V(2, "-", 4)
    with pytest.raises(ValueError):
        build_V(0, "+", 3)


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("l", range(1, 5))
def test_multiplicativity(k, l):
    for s in "+-":
        for t in "+-":
            lhs = build_V(k, s, N)
            rhs = build_V(k * l, v_product_sign(k, s, t), N)
            other = build_V(l, t, N)
            for d in range(N + 1):
                assert internal_on_degree(lhs, other, d) == rhs[d]


def test_reversal_antimorphism(rng):
    v1m = V1("-", N)
    for a, b in [(2, 3), (4, 4), (1, 6), (3, 5)]:
        g1, g2 = random_element(a, rng), random_element(b, rng)
        d = a + b
        lhs = internal_product(star(g1, g2), v1m[d])
        assert lhs == star(internal_product(g2, v1m[b]), internal_product(g1, v1m[a]))


@pytest.mark.parametrize("n", range(1, N + 1))
def test_right_omega_is_bar(n):
    w = R((1,) * n)
    for c in compositions(n):
        assert internal_product(R(c), w) == R(bar(c))


def test_splitting_formula(rng):
    g = build_V(3, "+", N)
    for a, b in [(3, 5), (2, 2), (4, 3)]:
        f1, f2 = random_element(a, rng), random_element(b, rng)
        lhs = internal_product(g[a + b], star(f1, f2))
        assert lhs == star(internal_product(g[a], f1), internal_product(g[b], f2))


def test_v2k_minus_vanishes_on_many_peaks():
    for n in range(2, 8):
        for k in range(1, 4):
            v = build_V(2 * k, "-", n)[n]
            assert all(composition_peak_stats(c).pk <= k - 1 for c in v.terms)


def test_internal_on_degree_bounds():
    with pytest.raises(ValueError):
        internal_on_degree(NSymSeries.one(2), NSymSeries.one(3), 3)
