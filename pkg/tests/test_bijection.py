import pytest

from runalg.bijection import (
    EXPECTED_IMAGE_CASE,
    FactorPair,
    PreconditionViolated,
    delta,
    phi,
    psi,
    verify_bijection,
)
from runalg.combinatorics import run_stats
from runalg.group_algebra import compose

# (alpha, beta, i, j, k) -> (alpha', beta'), one per case
EXAMPLES = {
    "1": ((1, 2, 4, 3, 5), (1, 2, 3, 5, 4), 4, 3, 2, (1, 2, 5, 3, 4), (1, 2, 3, 5, 4)),
    "2": ((1, 2, 3, 4, 5), (1, 2, 4, 5, 3), 4, 1, 2, (1, 2, 3, 4, 5), (1, 2, 5, 4, 3)),
    "C-E": ((1, 3, 4, 5, 2), (1, 2, 3, 5, 4), 3, 2, 2, (1, 5, 4, 3, 2), (1, 3, 4, 5, 2)),
    "D-E": ((1, 5, 3, 4, 2), (1, 3, 4, 5, 2), 3, 4, 2, (1, 4, 3, 5, 2), (1, 2, 3, 5, 4)),
    "C-F": ((1, 5, 2, 3, 4, 6), (1, 3, 2, 4, 5, 6), 3, 3, 3, (1, 5, 4, 3, 2, 6), (1, 5, 2, 3, 4, 6)),
    "D-F": ((1, 5, 3, 4, 2, 6), (1, 5, 2, 3, 4, 6), 3, 5, 3, (1, 5, 2, 4, 3, 6), (1, 3, 2, 4, 5, 6)),
}


@pytest.mark.parametrize("case", sorted(EXAMPLES))
def test_phi_examples(case):
    a, b, i, j, k, a2, b2 = EXAMPLES[case]
    pair = FactorPair.make(a, b, i)
    image = phi(pair, j, k)
    assert image.case == case
    assert (image.alpha, image.beta) == (a2, b2)
    assert image.sigma == pair.tau and image.tau == pair.sigma
    assert compose(a2, b2) == pair.tau
    back = psi(image, j, k)
    assert (back.alpha, back.beta) == (a, b)
    assert back.case == EXPECTED_IMAGE_CASE[case]


def test_preconditions():
    with pytest.raises(PreconditionViolated):
        FactorPair((1, 2, 3), (1, 2, 3), (2, 1, 3), (2, 1, 3), 1)
    # alpha not first-ascending
    with pytest.raises(PreconditionViolated):
        phi(FactorPair.make((2, 1, 3, 4), (1, 2, 3, 4), 2), 2, 1)
    # i and i+1 apart in sigma
    with pytest.raises(PreconditionViolated):
        phi(FactorPair.make((1, 2, 3, 4), (1, 3, 2, 4), 1), 1, 2)
    # sigma and tau in different run classes
    with pytest.raises(PreconditionViolated):
        phi(FactorPair.make((1, 2, 3, 4), (1, 2, 3, 4), 3), 1, 1)
    # wrong run length for beta
    a, b, i, j, k, _, _ = EXAMPLES["1"]
    with pytest.raises(PreconditionViolated):
        phi(FactorPair.make(a, b, i), j, k + 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_verify_small(n):
    rep = verify_bijection(n)
    assert rep.passed, (rep.checks, rep.failures)


def test_verify_n5_counts():
    rep = verify_bijection(5)
    assert dict(rep.case_counts) == {"1": 1472, "2": 416, "C-E": 16, "D-E": 16}
    assert rep.pairs_checked == sum(rep.case_counts.values())
    for (case, back), _ in rep.image_cases.items():
        assert EXPECTED_IMAGE_CASE[case] == back


@pytest.mark.slow
def test_verify_n6():
    rep = verify_bijection(6)
    assert rep.passed, rep.failures
    c = rep.case_counts
    assert (c["1"], c["2"]) == (71136, 13536)
    assert c["C-E"] == c["D-E"] == 596
    assert c["C-F"] == c["D-F"] == 268


def test_verify_range():
    with pytest.raises(ValueError):
        verify_bijection(8)
    with pytest.raises(ValueError):
        verify_bijection(1)


def test_delta_examples():
    assert delta((1, 2, 3, 4), (3, 4, 1, 2)) == ((1, 2, 3, 4), (4, 3, 1, 2), "2")
    a, b = (1, 3, 2, 4), (3, 4, 1, 2)
    a2, b2, case = delta(a, b)
    assert case in ("1", "2")
    assert delta(a2, b2)[:2] == (a, b)
    assert run_stats(a2).left_run == run_stats(a).left_run
    assert run_stats(b2).left_run == run_stats(b).left_run


@pytest.mark.parametrize("n", range(3, 7))
def test_delta_verification(n):
    rep = verify_bijection(n)
    keys = [k for k in rep.checks if k.startswith("delta")]
    assert keys and all(rep.checks[k] for k in keys)
    assert "3" not in rep.delta_cases
    assert rep.delta_sigmas > 0
