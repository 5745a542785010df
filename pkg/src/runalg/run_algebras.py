"""
Run and peak subalgebras of the descent algebra, their structure constants,
the V bases, and their orthogonal idempotents.

Elements are built from statistics of descent compositions; the group-algebra
route (``build_W_oracle``) is kept for cross-checking at small ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .combinatorics import (
    Composition,
    Partition,
    composition_peak_stats,
    composition_run_stats,
    compositions,
    partition_stats,
    partitions,
    peak_stats,
    run_stats,
)
from .descent_algebra import (
    DescentElement,
    internal_product,
    internal_product_oracle,
    omega_conjugate,
    omega_mul,
)
from .group_algebra import ga_sum_over, project_to_descent_basis
from .linalg import SpanSolver, intersection_dim, kernel, mat_vec, rank, same_span
from .nsym import NSymSeries, V1, build_V, external_product, log_star, power_star
from .sym import SymElement, chi_character, gamma, idempotent_sum


class AlgebraId(str, enum.Enum):
    WPM = "wpm"
    W = "w"
    WCIRC = "wcirc"
    C = "c"
    P = "p"
    PCIRC = "pcirc"


COMMUTATIVE = (AlgebraId.W, AlgebraId.WCIRC, AlgebraId.C, AlgebraId.P, AlgebraId.PCIRC)


class NotClosed(ArithmeticError):
    """A product of basis elements escaped the span."""


def expected_dim(n: int, alg: AlgebraId) -> int:
    return {
        AlgebraId.WPM: 2 * n - 2,
        AlgebraId.W: n - 1,
        AlgebraId.WCIRC: n,
        AlgebraId.C: (3 * n - 2) // 2,
        AlgebraId.P: (n + 1) // 2,
        AlgebraId.PCIRC: n // 2 + 1,
    }[AlgebraId(alg)]


# --------------------------------------------------------------------------
# the W and P families


def _sum_R(n: int, pred: Callable[[Composition], bool]) -> DescentElement:
    return DescentElement(n, "R", {c: 1 for c in compositions(n) if pred(c)})


def _check_range(k, lo, hi, what):
    if not lo <= k <= hi:
        raise ValueError(f"{what}: k={k} outside {lo}..{hi}")


def build_W(n: int, k: int, variant: str = "plain") -> DescentElement:
    """``W_k^+``, ``W_k^-``, ``W_k`` or ``W°_k`` in degree ``n`` (R basis).

    ``variant`` is one of 'plus', 'minus', 'plain', 'circ'.
    """
    top = max(n - 1, 1)
    if variant == "plus":
        _check_range(k, 1, top, "W+")
        return _sum_R(n, lambda c: composition_run_stats(c) == (k, True, k))
    if variant == "minus":
        _check_range(k, 1, top, "W-")
        return _sum_R(n, lambda c: composition_run_stats(c)[:2] == (k, False))
    if variant == "plain":
        _check_range(k, 1, top, "W")
        return _sum_R(n, lambda c: composition_run_stats(c).run == k)
    if variant == "circ":
        _check_range(k, 1, max(n, 1), "Wcirc")
        return _sum_R(n, lambda c: composition_run_stats(c).left_run == k)
    raise ValueError(f"unknown variant {variant!r}")


def build_P(n: int, k: int, variant: str = "plain") -> DescentElement:
    """Sum of permutations with ``k`` peaks ('plain') or ``k`` left peaks ('circ')."""
    if variant == "plain":
        _check_range(k, 0, (n - 1) // 2, "P")
        return _sum_R(n, lambda c: composition_peak_stats(c).pk == k)
    if variant == "circ":
        _check_range(k, 0, n // 2, "Pcirc")
        return _sum_R(n, lambda c: composition_peak_stats(c).pk_left == k)
    raise ValueError(f"unknown variant {variant!r}")


def build_W_oracle(n: int, k: int, variant: str = "plain") -> DescentElement:
    """Same as ``build_W`` but summed over permutations and projected."""
    preds = {
        "plus": lambda w: run_stats(w)[:2] == (k, True),
        "minus": lambda w: run_stats(w)[:2] == (k, False),
        "plain": lambda w: run_stats(w).run == k,
        "circ": lambda w: run_stats(w).left_run == k,
    }
    return project_to_descent_basis(ga_sum_over(n, preds[variant]))


def build_P_oracle(n: int, k: int, variant: str = "plain") -> DescentElement:
    field_ = 0 if variant == "plain" else 1
    return project_to_descent_basis(ga_sum_over(n, lambda w: peak_stats(w)[field_] == k))


def algebra_basis(n: int, alg: AlgebraId) -> list[tuple[str, DescentElement]]:
    """The spanning set of sums over disjoint permutation sets."""
    alg = AlgebraId(alg)
    if n < 2:
        raise ValueError("the run algebras start at n = 2")
    if alg is AlgebraId.WPM:
        return [(f"W{s}_{k}", build_W(n, k, v)) for k in range(1, n) for s, v in (("+", "plus"), ("-", "minus"))]
    if alg is AlgebraId.W:
        return [(f"W_{k}", build_W(n, k)) for k in range(1, n)]
    if alg is AlgebraId.WCIRC:
        return [(f"Wcirc_{k}", build_W(n, k, "circ")) for k in range(1, n + 1)]
    if alg is AlgebraId.C:
        even = [(f"W_{2 * k}", build_W(n, 2 * k)) for k in range(1, (n - 1) // 2 + 1)]
        odd = [
            (f"W{s}_{2 * k - 1}", build_W(n, 2 * k - 1, v))
            for k in range(1, n // 2 + 1)
            for s, v in (("+", "plus"), ("-", "minus"))
        ]
        return even + odd
    if alg is AlgebraId.P:
        return [(f"P_{k}", build_P(n, k)) for k in range((n - 1) // 2 + 1)]
    return [(f"Pcirc_{k}", build_P(n, k, "circ")) for k in range(n // 2 + 1)]


@lru_cache(maxsize=None)
def _solver(n: int, alg: AlgebraId) -> SpanSolver:
    return SpanSolver([e.vector("R") for _, e in algebra_basis(n, alg)])


def coordinates(x: DescentElement, alg: AlgebraId) -> list[Fraction] | None:
    """Coordinates of ``x`` on ``algebra_basis``, or None if ``x`` is outside."""
    return _solver(x.n, AlgebraId(alg)).solve(x.vector("R"))


# --------------------------------------------------------------------------
# closure


@dataclass(frozen=True)
class ClosureCertificate:
    n: int
    algebra: AlgebraId
    labels: tuple[str, ...]
    basis: tuple[DescentElement, ...]
    constants: tuple[tuple[tuple[Fraction, ...], ...], ...]  # constants[i][j][k]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_commutative(self) -> bool:
        return self.asymmetry_witness() is None

    def asymmetry_witness(self) -> tuple[str, str] | None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.constants[i][j] != self.constants[j][i]:
                    return self.labels[i], self.labels[j]
        return None

    def verify(self, *, oracle: bool = False) -> bool:
        """Recompute every product and compare with ``Σ_k c_ij^k basis_k``."""
        mul = internal_product_oracle if oracle else internal_product
        vectors = [b.vector("R") for b in self.basis]
        for i, x in enumerate(self.basis):
            for j, y in enumerate(self.basis):
                if mul(x, y).vector("R") != mat_vec(self.constants[i][j], vectors):
                    return False
        return True


def closure_certificate(n: int, alg: AlgebraId, *, oracle: bool = False) -> ClosureCertificate:
    """Structure constants of the algebra on its spanning set, by exact elimination."""
    alg = AlgebraId(alg)
    named = algebra_basis(n, alg)
    labels = tuple(lbl for lbl, _ in named)
    basis = tuple(e for _, e in named)
    solver = SpanSolver([b.vector("R") for b in basis])
    if not solver.independent:
        raise NotClosed(f"{alg.value} spanning set is dependent at n={n}")
    mul = internal_product_oracle if oracle else internal_product
    table = []
    for i, x in enumerate(basis):
        row = []
        for j, y in enumerate(basis):
            coeffs = solver.solve(mul(x, y).vector("R"))
            if coeffs is None:
                raise NotClosed(f"{labels[i]} * {labels[j]} leaves {alg.value} at n={n}")
            row.append(tuple(coeffs))
        table.append(tuple(row))
    return ClosureCertificate(n, alg, labels, basis, tuple(table))


# --------------------------------------------------------------------------
# V bases


def v_family(n: int, alg: AlgebraId) -> list[tuple[str, DescentElement]]:
    """Degree-``n`` parts of the V elements that span each algebra."""
    alg = AlgebraId(alg)

    def v(k, sign):
        return build_V(k, sign, n)[n]

    if alg is AlgebraId.WPM:
        return [(f"V{s}_{k}", v(k, s)) for k in range(1, n) for s in "+-"]
    if alg is AlgebraId.W:
        return [(f"V_{k}", v(k, "both")) for k in range(1, n)]
    if alg is AlgebraId.WCIRC:
        return [(f"V+_{k}", v(k, "+")) for k in range(1, n + 1)]
    if alg is AlgebraId.P:
        return [(f"V-_{2 * k}", v(2 * k, "-")) for k in range(1, (n + 1) // 2 + 1)]
    if alg is AlgebraId.PCIRC:
        return [(f"V+_{2 * k + 1}", v(2 * k + 1, "+")) for k in range(n // 2 + 1)]
    odd = [(f"V{s}_{k}", v(k, s)) for k in range(1, n, 2) for s in "+-"]
    even = [(f"V_{k}", v(k, "both")) for k in range(2, n, 2)]
    return even + odd


@dataclass(frozen=True)
class BasisChange:
    n: int
    algebra: AlgebraId
    v_labels: tuple[str, ...]
    basis_labels: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]  # row r: coordinates of V element r

    @property
    def invertible(self) -> bool:
        return len(self.matrix) == len(self.basis_labels) and rank(self.matrix) == len(self.basis_labels)

    def coefficient(self, v_label: str, basis_label: str) -> Fraction:
        return self.matrix[self.v_labels.index(v_label)][self.basis_labels.index(basis_label)]


class SingularChange(ArithmeticError):
    pass


def v_to_w_basis(n: int, alg: AlgebraId) -> BasisChange:
    alg = AlgebraId(alg)
    labels = tuple(lbl for lbl, _ in algebra_basis(n, alg))
    rows, v_labels = [], []
    for lbl, elem in v_family(n, alg):
        coeffs = coordinates(elem, alg)
        if coeffs is None:
            raise SingularChange(f"{lbl} is outside {alg.value} at n={n}")
        rows.append(tuple(coeffs))
        v_labels.append(lbl)
    change = BasisChange(n, alg, tuple(v_labels), labels, tuple(rows))
    if not change.invertible:
        raise SingularChange(f"V family does not span {alg.value} at n={n}")
    return change


def peak_leading_coefficients(n: int) -> dict[str, tuple[Fraction, int]]:
    """(coefficient found, value expected) for the leading terms of both peak V bases."""
    out = {}
    pch = v_to_w_basis(n, AlgebraId.P)
    for k in range(1, (n + 1) // 2 + 1):
        out[f"V-_{2 * k}:P_{k - 1}"] = (pch.coefficient(f"V-_{2 * k}", f"P_{k - 1}"), 2 ** (2 * k - 1))
    cch = v_to_w_basis(n, AlgebraId.PCIRC)
    for k in range(n // 2 + 1):
        out[f"V+_{2 * k + 1}:Pcirc_{k}"] = (cch.coefficient(f"V+_{2 * k + 1}", f"Pcirc_{k}"), 2 ** (2 * k))
    return out


def is_triangular(change: BasisChange) -> bool:
    """Row r has zeros beyond column r (both peak families are listed by increasing k)."""
    return all(not x for r, row in enumerate(change.matrix) for x in row[r + 1:])


# --------------------------------------------------------------------------
# idempotents


@lru_cache(maxsize=None)
def _idempotent_series(cutoff: int) -> dict[str, list[NSymSeries]]:
    v2m = build_V(2, "-", cutoff)
    v2p = build_V(2, "+", cutoff)
    i1m = log_star(v2m).scale(Fraction(1, 2))
    i1p = log_star(v2p).scale(Fraction(1, 2))
    j0p = external_product(V1("+", cutoff), power_star(v2m, Fraction(-1, 2)))
    j0m = external_product(V1("-", cutoff), power_star(v2p, Fraction(-1, 2)))
    im, ip = [NSymSeries.one(cutoff)], [NSymSeries.one(cutoff)]
    pm, pp = NSymSeries.one(cutoff), NSymSeries.one(cutoff)
    for k in range(1, cutoff + 1):
        pm = external_product(pm, i1m)
        pp = external_product(pp, i1p)
        im.append(pm.scale(Fraction(1, factorial(k))))
        ip.append(pp.scale(Fraction(1, factorial(k))))
    return {
        "Iminus": im,
        "Iplus": ip,
        "Jplus": [external_product(j0p, s) for s in im],
        "Jminus": [external_product(j0m, s) for s in ip],
    }


FAMILIES = ("Iplus", "Iminus", "Jplus", "Jminus")


def idempotent(n: int, family: str, k: int) -> DescentElement:
    """Degree-``n`` part of ``I_k^±`` or ``J_k^±`` (``I_0 = 1``)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > n:
        # I_1 has no constant term, so I_k starts in degree k; J_k = J_0 ⋆ I_k likewise
        return DescentElement.zero(n)
    return _idempotent_series(n)[family][k][n]


def _parity_range(lo: int, hi: int, n: int) -> range:
    start = lo if (lo - n) % 2 == 0 else lo + 1
    return range(start, hi + 1, 2)



def _pred(odd: int, even_rule: str) -> Callable[[Partition], bool]:
    def pred(lam):
        st = partition_stats(lam)
        if st.odd_length != odd:
            return False
        e = st.even_length
        return {
            "any": True,
            "zero": e == 0,
            "positive": e > 0,
            "even_positive": e > 0 and e % 2 == 0,
            "odd": e % 2 == 1,
        }[even_rule]

    return pred


@dataclass
class IdempotentSystem:
    n: int
    algebra: AlgebraId
    labels: list[str]
    elements: list[DescentElement]
    expected_gamma: list[SymElement]
    checks: dict[str, bool] = field(default_factory=dict)
    complete: bool = False

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())


def _system_members(n: int, alg: AlgebraId) -> list[tuple[str, DescentElement, SymElement]]:
    def I(fam, k):
        return idempotent(n, fam, k)

    half = Fraction(1, 2)
    out = []

    def add_first_family(fam_expr):
        for k in _parity_range(1, n, n):
            out.append((fam_expr(k)[0], fam_expr(k)[1], idempotent_sum(n, _pred(k, "zero"))))

    if alg in (AlgebraId.W, AlgebraId.C, AlgebraId.WPM):
        add_first_family(lambda k: (f"(I+_{k}+I-_{k})/2", (I("Iplus", k) + I("Iminus", k)).scale(half)))
        for l in _parity_range(0, n - 4, n):
            elem = (I("Jplus", l) + I("Jminus", l) - I("Iplus", l) - I("Iminus", l)).scale(half)
            out.append((f"(J+_{l}+J-_{l}-I+_{l}-I-_{l})/2", elem, idempotent_sum(n, _pred(l, "even_positive"))))
        if alg is not AlgebraId.W:
            for m in _parity_range(0, n - 2, n):
                elem = (I("Jplus", m) - I("Jminus", m)).scale(half)
                out.append((f"(J+_{m}-J-_{m})/2", elem, idempotent_sum(n, _pred(m, "odd"))))
    elif alg is AlgebraId.WCIRC:
        add_first_family(lambda k: (f"I+_{k}", I("Iplus", k)))
        # the literal coefficient 1/2 halves a Γ-idempotent, so it is dropped
        for l in _parity_range(0, n - 2, n):
            elem = I("Jplus", l) - I("Iplus", l)
            out.append((f"J+_{l}-I+_{l}", elem, idempotent_sum(n, _pred(l, "positive"))))
    elif alg is AlgebraId.P:
        add_first_family(lambda k: (f"I-_{k}", I("Iminus", k)))
    else:
        for k in _parity_range(0, n, n):
            out.append((f"J+_{k}", I("Jplus", k), idempotent_sum(n, _pred(k, "any"))))
    return out


def idempotent_system(n: int, alg: AlgebraId, *, check: bool = True) -> IdempotentSystem:
    """Orthogonal idempotents of a run algebra; for ``wpm`` the complete primitive set."""
    alg = AlgebraId(alg)
    if n < 2:
        raise ValueError("the run algebras start at n = 2")
    members = _system_members(n, alg)
    system = IdempotentSystem(
        n,
        alg,
        [m[0] for m in members],
        [m[1] for m in members],
        [m[2] for m in members],
        complete=alg is AlgebraId.WPM,
    )
    if check:
        check_system(system)
    return system


def check_system(system: IdempotentSystem) -> dict[str, bool]:
    n, alg, elems = system.n, system.algebra, system.elements
    member_alg = AlgebraId.C if alg is AlgebraId.WPM else alg
    checks = system.checks
    checks["count_equals_dim"] = len(elems) == expected_dim(n, member_alg)
    checks["nonzero"] = all(bool(e) for e in elems)
    checks["in_algebra"] = all(coordinates(e, member_alg) is not None for e in elems)
    if alg is AlgebraId.WPM:
        checks["in_algebra"] = checks["in_algebra"] and all(coordinates(e, AlgebraId.WPM) is not None for e in elems)
    checks["idempotent"] = all(internal_product(e, e) == e for e in elems)
    checks["orthogonal"] = all(
        not internal_product(a, b) for i, a in enumerate(elems) for j, b in enumerate(elems) if i != j
    )
    checks["gamma_images"] = all(gamma(e) == g for e, g in zip(elems, system.expected_gamma))
    if alg is AlgebraId.WPM:
        total = DescentElement.zero(n)
        for e in elems:
            total = total + e
        checks["sums_to_unit"] = total == DescentElement.unit(n)
        checks["count_equals_dim_C"] = len(elems) == expected_dim(n, AlgebraId.C)
        checks["radical_complement"] = radical_check(n).passed
    return checks


# --------------------------------------------------------------------------
# radical


@dataclass
class RadicalReport:
    n: int
    kernel_dim: int
    expected_dim: int
    kernel_basis: list[DescentElement]
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _gamma_vector(x: DescentElement) -> list[Fraction]:
    g = gamma(x)
    return [g.coefficient(lam) for lam in partitions(x.n)]


@lru_cache(maxsize=None)
def radical_check(n: int) -> RadicalReport:
    """``ker Γ ∩ W±`` by exact elimination and its complement ``C``."""
    basis = [e for _, e in algebra_basis(n, AlgebraId.WPM)]
    relations = kernel([_gamma_vector(b) for b in basis])
    vectors = [b.vector("R") for b in basis]
    kernel_elems = [DescentElement.from_vector(n, "R", mat_vec(c, vectors)) for c in relations]
    expected = (n + 1) // 2 - 1
    diffs = [build_W(n, 2 * k, "plus") - build_W(n, 2 * k, "minus") for k in range(1, expected + 1)]
    kvecs = [k.vector("R") for k in kernel_elems]
    dvecs = [d.vector("R") for d in diffs]
    cvecs = [e.vector("R") for _, e in algebra_basis(n, AlgebraId.C)]
    checks = {
        "kernel_dim": len(kernel_elems) == expected,
        "differences_in_kernel": all(not gamma(d) for d in diffs),
        "differences_span_kernel": same_span(kvecs, dvecs) if kvecs or dvecs else True,
        "trivial_intersection_with_C": intersection_dim(cvecs, kvecs) == 0 if kvecs else True,
        "direct_sum": len(cvecs) + len(kvecs) == 2 * n - 2 and rank(cvecs + kvecs) == 2 * n - 2,
    }
    return RadicalReport(n, len(kernel_elems), expected, kernel_elems, checks)


# --------------------------------------------------------------------------
# Foulkes-type characters


def _ell_e_class(lam: Partition) -> str:
    e = partition_stats(lam).even_length
    return "zero" if e == 0 else ("odd" if e % 2 else "even_positive")


@dataclass
class FoulkesTable:
    n: int
    algebra: AlgebraId
    labels: list[str]
    columns: list[Partition]
    values: list[list[Fraction]]
    checks: dict[str, bool]
    literal_checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _foulkes_layout(n: int, alg: AlgebraId):
    """(labelled composition predicates, feature key, vanishing predicate)."""
    run = lambda c: composition_run_stats(c)  # noqa: E731
    if alg is AlgebraId.W:
        groups = [(f"run={k}", lambda c, k=k: run(c).run == k) for k in range(1, n)]
        feature = lambda lam: (partition_stats(lam).odd_length, partition_stats(lam).even_length > 0)  # noqa: E731
        vanish = lambda lam: partition_stats(lam).even_length % 2 == 1  # noqa: E731
    elif alg is AlgebraId.WCIRC:
        groups = [(f"leftrun={k}", lambda c, k=k: run(c).left_run == k) for k in range(1, n + 1)]
        feature = lambda lam: (partition_stats(lam).odd_length, partition_stats(lam).even_length > 0)  # noqa: E731
        vanish = lambda lam: False  # noqa: E731
    elif alg is AlgebraId.C:
        groups = [(f"run={2 * l}", lambda c, l=l: run(c).run == 2 * l) for l in range(1, (n - 1) // 2 + 1)]
        for k in range(0, (n - 2) // 2 + 1):
            r = 2 * k + 1
            groups.append((f"run={r},i1=1", lambda c, r=r: run(c).run == r and c[0] == 1))
            groups.append((f"run={r},i1>1", lambda c, r=r: run(c).run == r and c[0] > 1))
        feature = lambda lam: (partition_stats(lam).odd_length, _ell_e_class(lam))  # noqa: E731
        vanish = lambda lam: False  # noqa: E731
    elif alg is AlgebraId.P:
        groups = [(f"pk={k}", lambda c, k=k: composition_peak_stats(c).pk == k) for k in range(0, (n - 1) // 2 + 1)]
        feature = lambda lam: partition_stats(lam).odd_length  # noqa: E731
        # the images Σ_{ℓ_o=k, ℓ_e=0} p_λ/z_λ vanish on every even cycle, not just odd counts
        vanish = lambda lam: partition_stats(lam).even_length > 0  # noqa: E731
    elif alg is AlgebraId.PCIRC:
        groups = [(f"pkleft={k}", lambda c, k=k: composition_peak_stats(c).pk_left == k) for k in range(0, n // 2 + 1)]
        feature = lambda lam: partition_stats(lam).odd_length  # noqa: E731
        vanish = lambda lam: False  # noqa: E731
    else:
        raise ValueError("Foulkes-type characters exist for the five commutative algebras only")
    return groups, feature, vanish


def _feature_checks(cols, values, feature, vanish) -> dict[str, bool]:
    constant = True
    for row in values:
        seen: dict = {}
        for lam, v in zip(cols, row):
            if not vanish(lam) and seen.setdefault(feature(lam), v) != v:
                constant = False
    live_classes = {feature(lam) for lam in cols if not vanish(lam)}
    return {
        "constant_on_features": constant,
        "vanishing": all(not v for row in values for lam, v in zip(cols, row) if vanish(lam)),
        "count_equals_classes": len(values) == len(live_classes),
    }


def foulkes_table(n: int, alg: AlgebraId) -> FoulkesTable:
    """Sums of ribbon characters over statistic level sets, with their feature checks.

    For the peak family ``literal_checks`` records the weaker vanishing rule
    (odd number of even cycles) taken word for word; it fails for even ``n``.
    """
    alg = AlgebraId(alg)
    groups, feature, vanish = _foulkes_layout(n, alg)
    cols = list(partitions(n))
    chars = {c: chi_character(c) for c in compositions(n)}
    labels, values = [], []
    for label, pred in groups:
        row = [sum((chars[c][lam] for c in compositions(n) if pred(c)), Fraction(0)) for lam in cols]
        labels.append(label)
        values.append(row)

    checks = {
        "integral": all(v.denominator == 1 for row in values for v in row),
        "independent": rank(values) == len(values),
        **_feature_checks(cols, values, feature, vanish),
    }
    literal = {}
    if alg is AlgebraId.P:
        literal = _feature_checks(cols, values, feature, lambda lam: partition_stats(lam).even_length % 2 == 1)
    return FoulkesTable(n, alg, labels, cols, values, checks, literal)


# --------------------------------------------------------------------------
# centrality


@dataclass
class CentralityReport:
    n: int
    central: bool
    failures: list[tuple[str, str]]


def centrality_check(n: int, alg: AlgebraId = AlgebraId.PCIRC) -> CentralityReport:
    """Does every basis element of ``alg`` commute with every basis element of ``W±``?"""
    failures = []
    outer = algebra_basis(n, AlgebraId.WPM)
    for plabel, p in algebra_basis(n, alg):
        for xlabel, x in outer:
            if internal_product(p, x) != internal_product(x, p):
                failures.append((plabel, xlabel))
    return CentralityReport(n, not failures, failures)


def peak_noncentral_witness(max_n: int = 7) -> tuple[int, str, str] | None:
    for n in range(2, max_n + 1):
        rep = centrality_check(n, AlgebraId.P)
        if rep.failures:
            return (n, *rep.failures[0])
    return None


# --------------------------------------------------------------------------
# further structural identities


def omega_fixed_space_is_C(n: int) -> bool:
    """``C`` equals the fixed space of ``x ↦ ωxω`` inside ``W±``."""
    basis = [e for _, e in algebra_basis(n, AlgebraId.WPM)]
    vectors = [b.vector("R") for b in basis]
    diffs = [(omega_conjugate(b) - b).vector("R") for b in basis]
    fixed = [mat_vec(c, vectors) for c in kernel(diffs)]
    cvecs = [e.vector("R") for _, e in algebra_basis(n, AlgebraId.C)]
    return same_span(fixed, cvecs)


def pcirc_is_intersection(n: int) -> bool:
    """``P° = W° ∩ C``."""
    pv = [e.vector("R") for _, e in algebra_basis(n, AlgebraId.PCIRC)]
    wv = [e.vector("R") for _, e in algebra_basis(n, AlgebraId.WCIRC)]
    cv = [e.vector("R") for _, e in algebra_basis(n, AlgebraId.C)]
    inside = all(_solver(n, AlgebraId.WCIRC).contains(v) and _solver(n, AlgebraId.C).contains(v) for v in pv)
    return inside and intersection_dim(wv, cv) == rank(pv)


def w_is_right_ideal(n: int) -> bool:
    """``W = W_1 ⋅ W±`` and ``W_1 / 2`` is a two-sided unit on ``W``."""
    w1 = build_W(n, 1)
    products = [internal_product(w1, e).vector("R") for _, e in algebra_basis(n, AlgebraId.WPM)]
    wv = [e.vector("R") for _, e in algebra_basis(n, AlgebraId.W)]
    unit = w1.scale(Fraction(1, 2))
    unit_ok = all(
        internal_product(unit, e) == e and internal_product(e, unit) == e for _, e in algebra_basis(n, AlgebraId.W)
    )
    return same_span(products, wv) and unit_ok


def omega_reductions_hold(n: int) -> dict[str, bool]:
    """Multiplication by ``ω`` permutes the ``W_k^±``, reducing every product to ``W_j^+ W_k^+``."""
    plus = {k: build_W(n, k, "plus") for k in range(1, n)}
    minus = {k: build_W(n, k, "minus") for k in range(1, n)}
    left = all(omega_mul(plus[k], "left") == minus[k] and omega_mul(minus[k], "left") == plus[k] for k in plus)
    right = all(
        omega_mul(plus[k], "right") == (minus[k] if k % 2 else plus[k])
        and omega_mul(minus[k], "right") == (plus[k] if k % 2 else minus[k])
        for k in plus
    )
    products = True
    for j in plus:
        for k in plus:
            pp = internal_product(plus[j], plus[k])
            wpp = omega_mul(pp, "left")
            products &= internal_product(minus[j], plus[k]) == wpp
            products &= internal_product(plus[j], minus[k]) == (wpp if j % 2 else pp)
            products &= internal_product(minus[j], minus[k]) == (pp if j % 2 else wpp)
    return {"left": left, "right": right, "products": products}


def v_span_stable(n: int, alg: AlgebraId, extra: int = 4) -> bool:
    """V elements with larger indices stay inside the algebra."""
    alg = AlgebraId(alg)
    checks = []
    top = n + extra
    for k in range(1, top + 1):
        if alg is AlgebraId.WPM:
            checks += [build_V(k, "+", n)[n], build_V(k, "-", n)[n]]
        elif alg is AlgebraId.W:
            checks.append(build_V(k, "both", n)[n])
        elif alg is AlgebraId.WCIRC:
            checks.append(build_V(k, "+", n)[n])
        elif alg is AlgebraId.P and k % 2 == 0:
            checks.append(build_V(k, "-", n)[n])
        elif alg is AlgebraId.PCIRC and k % 2 == 1:
            checks.append(build_V(k, "+", n)[n])
        elif alg is AlgebraId.C:
            checks += [build_V(k, "both", n)[n]] if k % 2 == 0 else [build_V(k, "+", n)[n], build_V(k, "-", n)[n]]
    return all(coordinates(x, alg) is not None for x in checks)


def multiplicative_expansion_holds(n: int, i: int) -> tuple[bool, bool]:
    """``V-_{2i} = Σ (2i)^k I-_k`` and ``V+_{2i+1} = Σ (2i+1)^k J+_k`` in degree ``n``."""
    lhs_even = build_V(2 * i, "-", n)[n]
    lhs_odd = build_V(2 * i + 1, "+", n)[n]
    rhs_even = DescentElement.zero(n)
    rhs_odd = DescentElement.zero(n)
    for k in range(n + 1):
        rhs_even = rhs_even + idempotent(n, "Iminus", k).scale((2 * i) ** k)
        rhs_odd = rhs_odd + idempotent(n, "Jplus", k).scale((2 * i + 1) ** k)
    return lhs_even == rhs_even, lhs_odd == rhs_odd


__all__ = [
    "AlgebraId",
    "BasisChange",
    "COMMUTATIVE",
    "CentralityReport",
    "ClosureCertificate",
    "FoulkesTable",
    "IdempotentSystem",
    "NotClosed",
    "RadicalReport",
    "SingularChange",
    "algebra_basis",
    "build_P",
    "build_P_oracle",
    "build_W",
    "build_W_oracle",
    "centrality_check",
    "closure_certificate",
    "coordinates",
    "expected_dim",
    "foulkes_table",
    "idempotent",
    "idempotent_system",
    "is_triangular",
    "multiplicative_expansion_holds",
    "omega_fixed_space_is_C",
    "omega_reductions_hold",
    "pcirc_is_intersection",
    "peak_leading_coefficients",
    "peak_noncentral_witness",
    "radical_check",
    "v_family",
    "v_span_stable",
    "v_to_w_basis",
    "w_is_right_ideal",
]
