import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from runalg.combinatorics import compositions
from runalg.descent_algebra import DescentElement

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def random_element(n: int, rng: random.Random, basis: str = "R", density: float = 0.5) -> DescentElement:
    terms = {}
    for c in compositions(n):
        if rng.random() < density:
            terms[c] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return DescentElement(n, basis, terms)


@st.composite
def descent_elements(draw, n_min=1, n_max=6, basis=None):
    n = draw(st.integers(n_min, n_max))
    b = basis or draw(st.sampled_from(["R", "S"]))
    comps = compositions(n)
    picks = draw(st.lists(st.sampled_from(comps), max_size=6))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=len(picks), max_size=len(picks)))
    return DescentElement(n, b, dict(zip(picks, coeffs)))


@st.composite
def composition_st(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    return draw(st.sampled_from(compositions(n)))


@pytest.fixture
def rng():
    return random.Random(20240611)


# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
