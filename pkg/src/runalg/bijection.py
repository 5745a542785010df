"""
The bijection between factorizations of weak-order neighbours that shows
``W_j^+ W_k^+`` has equal coefficients on each run class, and the simpler map
used for the left-run algebra.

For ``σ`` and ``τ = s_iσ = σs_h`` in the same run class, ``phi`` sends a pair
``(α, β) ∈ 𝔚_j^+ × 𝔚_k^+`` with ``αβ = σ`` to one with product ``τ``.  Its
inverse is ``phi`` again with the roles of ``σ`` and ``τ`` exchanged.

Case 3 moves the block ``{i, i+1}`` of ``α`` across the maximal neighbouring
factor whose letters satisfy a predicate ``P``: ``>i+1`` when the neighbours
of ``{i, i+1}`` in ``σ`` are both ``<i`` (case E), ``<i`` when they are both
``>i+1`` (case F).  The block moves right when the letter after it satisfies
``P`` (cases C-E and D-F) and left otherwise (D-E and C-F).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .combinatorics import (
    Permutation,
    apply_simple_left,
    check_permutation,
    permutations,
    run_stats,
)
from .group_algebra import compose, inverse


class PreconditionViolated(ValueError):
    """The input pair is not in the set the map is defined on."""


class InternalCaseExhaustion(RuntimeError):
    """A configuration the case analysis says cannot occur."""


def _klass(w: Permutation) -> tuple[int, bool]:
    st = run_stats(w)
    return st.run, st.first_ascending


def _pair_position(word: Permutation, i: int) -> int | None:
    """1-based ``p`` with ``{word(p), word(p+1)} = {i, i+1}``, or None."""
    a, b = word.index(i), word.index(i + 1)
    if abs(a - b) != 1:
        return None
    return min(a, b) + 1


@dataclass(frozen=True)
class FactorPair:
    alpha: Permutation
    beta: Permutation
    sigma: Permutation
    tau: Permutation
    i: int
    g: int | None = None
    h: int | None = None
    case: str | None = None

    def __post_init__(self):
        if compose(self.alpha, self.beta) != self.sigma:
            raise PreconditionViolated("alpha∘beta differs from sigma")
        if apply_simple_left(self.sigma, self.i) != self.tau:
            raise PreconditionViolated("tau differs from s_i∘sigma")

    @classmethod
    def make(cls, alpha, beta, i: int) -> "FactorPair":
        alpha, beta = check_permutation(alpha), check_permutation(beta)
        sigma = compose(alpha, beta)
        return cls(alpha, beta, sigma, apply_simple_left(sigma, i), i, h=_pair_position(sigma, i))


# --------------------------------------------------------------------------
# Φ


def _move(alpha, beta, i, g, h, P: Callable[[int], bool], Q: Callable[[int], bool]):
    """Case 3 rewiring; returns (alpha', beta', direction)."""
    n = len(alpha)
    lo, hi = g - 1, g + 1  # the block {i, i+1} is alpha[lo:hi]
    if P(alpha[hi]):
        end = hi
        while end < n and P(alpha[end]):
            end += 1
        if end == n or not Q(alpha[end]):
            raise InternalCaseExhaustion("no letter closes the factor on the right")
        block, moved = alpha[lo:hi], alpha[hi:end]
        new_alpha = alpha[:lo] + moved + block[::-1] + alpha[end:]
        shift, delta, direction = len(moved), -2, "right"
    elif P(alpha[lo - 1]):
        start = lo
        while start > 0 and P(alpha[start - 1]):
            start -= 1
        if start == 0 or not Q(alpha[start - 1]):
            raise InternalCaseExhaustion("no letter closes the factor on the left")
        block, moved = alpha[lo:hi], alpha[start:lo]
        new_alpha = alpha[:start] + block[::-1] + moved + alpha[hi:]
        shift, delta, direction = -len(moved), 2, "left"
    else:
        raise InternalCaseExhaustion("neither neighbour of the block satisfies the predicate")
    letters = set(moved)
    new_beta = tuple(
        b + shift if u in (h, h + 1) else (b + delta if alpha[b - 1] in letters else b)
        for u, b in enumerate(beta, start=1)
    )
    return new_alpha, new_beta, direction


def _phi_raw(alpha, beta, sigma, i, j, k):
    """Image pair and case label; assumes the preconditions were checked."""
    n = len(alpha)
    h = _pair_position(sigma, i)
    s_alpha = apply_simple_left(alpha, i)
    if _klass(s_alpha) == (j, True):
        return s_alpha, beta, "1", None, h
    g = _pair_position(alpha, i)
    if g is None:
        raise InternalCaseExhaustion("s_i alpha left the class but i, i+1 are apart in alpha")
    s_beta = apply_simple_left(beta, g)
    if _klass(s_beta) == (k, True):
        return alpha, s_beta, "2", g, h
    if not (2 <= g <= n - 2 and 2 <= h <= n - 2):
        raise InternalCaseExhaustion(f"case 3 with g={g}, h={h}")
    before, after = alpha[g - 2], alpha[g + 1]
    if before < i and after > i + 1:
        cd = "C"
    elif before > i + 1 and after < i:
        cd = "D"
    else:
        raise InternalCaseExhaustion("alpha is in neither case C nor case D")
    x, y = sigma[h - 2], sigma[h + 1]
    small = lambda v: v < i  # noqa: E731
    large = lambda v: v > i + 1  # noqa: E731
    if small(x) and small(y):
        ef, P, Q = "E", large, small
    elif large(x) and large(y):
        ef, P, Q = "F", small, large
    else:
        raise InternalCaseExhaustion("sigma is in neither case E nor case F")
    new_alpha, new_beta, _ = _move(alpha, beta, i, g, h, P, Q)
    return new_alpha, new_beta, f"{cd}-{ef}", g, h


def _check_domain(alpha, beta, sigma, tau, i, j, k):
    if _klass(alpha) != (j, True):
        raise PreconditionViolated(f"alpha is not in W_{j}^+")
    if _klass(beta) != (k, True):
        raise PreconditionViolated(f"beta is not in W_{k}^+")
    if _pair_position(sigma, i) is None:
        raise PreconditionViolated(f"{i} and {i + 1} are not adjacent in sigma")
    if _klass(sigma) != _klass(tau):
        raise PreconditionViolated("sigma and tau lie in different run classes")


def phi(pair: FactorPair, j: int, k: int) -> FactorPair:
    """Send a factorization of ``σ`` to one of ``τ``; the result records its case."""
    _check_domain(pair.alpha, pair.beta, pair.sigma, pair.tau, pair.i, j, k)
    a, b, case, g, h = _phi_raw(pair.alpha, pair.beta, pair.sigma, pair.i, j, k)
    return FactorPair(a, b, pair.tau, pair.sigma, pair.i, g=g, h=h, case=case)


def psi(pair: FactorPair, j: int, k: int) -> FactorPair:
    """``phi`` read from the ``τ`` side.

    A FactorPair returned by ``phi`` already has its ``sigma`` and ``tau``
    exchanged, so ``psi`` and ``phi`` coincide on it.
    """
    return phi(pair, j, k)


# --------------------------------------------------------------------------
# the map for the left-run algebra


def delta(alpha: Permutation, beta: Permutation) -> tuple[Permutation, Permutation, str]:
    """``Δ`` on a pair of ``𝔚°_j × 𝔚°_k``; returns (alpha', beta', case)."""
    n = len(alpha)
    j, k = run_stats(alpha).left_run, run_stats(beta).left_run
    s_alpha = apply_simple_left(alpha, n - 1)
    if run_stats(s_alpha).left_run == j:
        return s_alpha, beta, "1"
    s_beta = apply_simple_left(beta, n - 1)
    if run_stats(s_beta).left_run == k:
        return alpha, s_beta, "2"
    return alpha, beta, "3"


# --------------------------------------------------------------------------
# exhaustive verification


@dataclass
class BijectionReport:
    n: int
    adjacent_pairs: int = 0
    pairs_checked: int = 0
    case_counts: Counter = field(default_factory=Counter)
    image_cases: Counter = field(default_factory=Counter)
    delta_sigmas: int = 0
    delta_pairs: int = 0
    delta_cases: Counter = field(default_factory=Counter)
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def _fail(self, key: str, message: str):
        self.checks[key] = False
        if len(self.failures) < 20:
            self.failures.append(message)


EXPECTED_IMAGE_CASE = {"1": "1", "2": "2", "C-E": "D-E", "D-E": "C-E", "C-F": "D-F", "D-F": "C-F"}

MAX_BIJECTION_N = 7


def verify_bijection(n: int) -> BijectionReport:
    if not 2 <= n <= MAX_BIJECTION_N:
        raise ValueError(f"verify_bijection needs 2 ≤ n ≤ {MAX_BIJECTION_N}")
    rep = BijectionReport(n)
    for key in ("phi_defined", "image_in_target", "psi_phi_identity", "image_case", "sizes_equal"):
        rep.checks[key] = True
    _verify_phi(n, rep)
    _verify_delta(n, rep)
    return rep


def _verify_phi(n: int, rep: BijectionReport):
    # α ranges over first-ascending permutations; keep (α, α^{-1}, run(α))
    lefts = [(a, inverse(a), run_stats(a).run) for a in permutations(n) if n < 2 or a[0] < a[1]]
    for sigma in permutations(n):
        for i in range(1, n):
            if _pair_position(sigma, i) is None:
                continue
            tau = apply_simple_left(sigma, i)
            if _klass(sigma) != _klass(tau):
                continue
            rep.adjacent_pairs += 1
            size_sigma: Counter = Counter()
            size_tau: Counter = Counter()
            for a, a_inv, j in lefts:
                b = compose(a_inv, sigma)
                if b[0] < b[1]:
                    k = run_stats(b).run
                    size_sigma[(j, k)] += 1
                    _check_one(rep, a, b, sigma, tau, i, j, k)
                b = compose(a_inv, tau)
                if b[0] < b[1]:
                    size_tau[(j, run_stats(b).run)] += 1
            if size_sigma != size_tau:
                rep._fail("sizes_equal", f"sizes differ for sigma={sigma}, i={i}")


def _check_one(rep, a, b, sigma, tau, i, j, k):
    rep.pairs_checked += 1
    where = f"alpha={a}, beta={b}, i={i}"
    try:
        a2, b2, case, _, _ = _phi_raw(a, b, sigma, i, j, k)
    except InternalCaseExhaustion as exc:
        rep._fail("phi_defined", f"{where}: {exc}")
        return
    rep.case_counts[case] += 1
    if sorted(b2) != list(range(1, len(b) + 1)) or compose(a2, b2) != tau or _klass(a2) != (j, True) or _klass(b2) != (k, True):
        rep._fail("image_in_target", f"{where}: image ({a2}, {b2}) not in the target set")
        return
    try:
        a3, b3, back_case, _, _ = _phi_raw(a2, b2, tau, i, j, k)
    except InternalCaseExhaustion as exc:
        rep._fail("psi_phi_identity", f"{where}: psi undefined on image: {exc}")
        return
    rep.image_cases[(case, back_case)] += 1
    if (a3, b3) != (a, b):
        rep._fail("psi_phi_identity", f"{where}: psi(phi) = ({a3}, {b3})")
    if back_case != EXPECTED_IMAGE_CASE[case]:
        rep._fail("image_case", f"{where}: case {case} maps to case {back_case}")


def _verify_delta(n: int, rep: BijectionReport):
    for key in ("delta_sigma_exists", "delta_tau_class", "delta_no_third_case", "delta_image", "delta_inverse", "delta_sizes"):
        rep.checks[key] = True
    if n < 3:
        return
    perms = list(permutations(n))
    inverses = [(a, inverse(a), run_stats(a).left_run) for a in perms]
    for m in range(2, n):
        sigmas = [w for w in perms if w[0] == n - 1 and w[1] == n and _klass(w) == (m, True)]
        if not sigmas:
            rep._fail("delta_sigma_exists", f"no sigma in W_{m}^+ starting n-1, n")
        for sigma in sigmas:
            rep.delta_sigmas += 1
            tau = apply_simple_left(sigma, n - 1)
            if _klass(tau) != (m - 1, False):
                rep._fail("delta_tau_class", f"tau={tau} is not in W_{m - 1}^-")
            size_sigma: Counter = Counter()
            size_tau: Counter = Counter()
            for a, a_inv, j in inverses:
                b = compose(a_inv, sigma)
                k = run_stats(b).left_run
                size_sigma[(j, k)] += 1
                size_tau[(j, run_stats(compose(a_inv, tau)).left_run)] += 1
                rep.delta_pairs += 1
                a2, b2, case = delta(a, b)
                rep.delta_cases[case] += 1
                if case == "3":
                    rep._fail("delta_no_third_case", f"third case at alpha={a}, beta={b}")
                    continue
                if compose(a2, b2) != tau or run_stats(a2).left_run != j or run_stats(b2).left_run != k:
                    rep._fail("delta_image", f"image of ({a}, {b}) is not in the target set")
                if delta(a2, b2)[:2] != (a, b):
                    rep._fail("delta_inverse", f"delta is not an involution at ({a}, {b})")
            if size_sigma != size_tau:
                rep._fail("delta_sizes", f"sizes differ for sigma={sigma}")


__all__ = [
    "BijectionReport",
    "FactorPair",
    "InternalCaseExhaustion",
    "PreconditionViolated",
    "delta",
    "phi",
    "psi",
    "verify_bijection",
]
