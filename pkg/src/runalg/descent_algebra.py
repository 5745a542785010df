"""
The descent algebra ``D_n`` in the ribbon (R) and complete (S) bases.

``R_I`` is the sum of permutations with descent set ``Des(I)`` and ``S^I`` the
sum of those with descent set contained in ``Des(I)``.  The internal product is
the group-algebra product restricted to ``D_n``.  Two implementations exist:
``internal_product`` uses integer structure constants computed once per degree
from nonnegative integer matrices, and ``internal_product_oracle`` lifts both
factors to the group algebra.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Mapping

import numpy as np

from .combinatorics import (
    Composition,
    check_composition,
    coarsenings,
    compositions,
)

BASES = ("R", "S")


@dataclass(frozen=True, eq=False)
class DescentElement:
    """Sparse exact element of ``D_n``; zero coefficients are dropped."""

    n: int
    basis: str = "R"
    terms: Mapping[Composition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for comp, c in self.terms.items():
            c = Fraction(c)
            if c:
                comp = check_composition(comp, self.n)
                clean[comp] = clean.get(comp, 0) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    # constructors
    @classmethod
    def R(cls, comp, coeff=1) -> "DescentElement":
        comp = check_composition(comp)
        return cls(sum(comp), "R", {comp: coeff})

    @classmethod
    def S(cls, comp, coeff=1) -> "DescentElement":
        comp = check_composition(comp)
        return cls(sum(comp), "S", {comp: coeff})

    @classmethod
    def zero(cls, n: int, basis: str = "R") -> "DescentElement":
        return cls(n, basis, {})

    @classmethod
    def unit(cls, n: int) -> "DescentElement":
        """``R_(n)``, the identity permutation (the scalar 1 when n = 0)."""
        return cls(n, "R", {(n,) if n else (): 1})

    @classmethod
    def from_vector(cls, n: int, basis: str, vec) -> "DescentElement":
        return cls(n, basis, dict(zip(compositions(n), (Fraction(v) for v in vec))))

    # linear structure
    def to_basis(self, basis: str) -> "DescentElement":
        return convert(self, basis)

    def vector(self, basis: str = "R") -> list[Fraction]:
        terms = self.to_basis(basis).terms
        return [terms.get(c, Fraction(0)) for c in compositions(self.n)]

    def coefficient(self, comp, basis: str = "R") -> Fraction:
        return self.to_basis(basis).terms.get(tuple(comp), Fraction(0))

    def _combine(self, other: "DescentElement", sign: int) -> "DescentElement":
        _same_degree(self, other)
        other = other.to_basis(self.basis)
        out = dict(self.terms)
        for comp, c in other.terms.items():
            out[comp] = out.get(comp, 0) + sign * c
        return DescentElement(self.n, self.basis, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "DescentElement":
        c = Fraction(c)
        return DescentElement(self.n, self.basis, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, DescentElement):
            return internal_product(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DescentElement) or other.n != self.n:
            return NotImplemented if not isinstance(other, DescentElement) else False
        return self.to_basis("R").terms == other.to_basis("R").terms

    def __hash__(self):
        return hash((self.n, frozenset(self.to_basis("R").terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"0[{self.n}]"
        name = "R" if self.basis == "R" else "S"
        return " + ".join(f"{c}*{name}{list(k)}" for k, c in sorted(self.terms.items()))


def _same_degree(a, b):
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")


# --------------------------------------------------------------------------
# basis conversion


def convert(x: DescentElement, target: str) -> DescentElement:
    """Change of basis through ``S^I = Σ_{J≼I} R_J`` and its Möbius inverse."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if x.basis == target:
        return x
    out: dict[Composition, Fraction] = {}
    if target == "R":
        for comp, c in x.terms.items():
            for j in coarsenings(comp):
                out[j] = out.get(j, 0) + c
    else:
        for comp, c in x.terms.items():
            length = len(comp)
            for j in coarsenings(comp):
                out[j] = out.get(j, 0) + (c if (length - len(j)) % 2 == 0 else -c)
    return DescentElement(x.n, target, out)


@lru_cache(maxsize=None)
def _index(n: int) -> dict[Composition, int]:
    return {c: i for i, c in enumerate(compositions(n))}


@lru_cache(maxsize=None)
def conversion_matrices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer matrices ``(r_to_s, s_to_r)`` acting on row vectors.

    ``row_R @ r_to_s`` gives S coordinates, ``row_S @ s_to_r`` gives R ones.
    """
    comps = compositions(n)
    idx = _index(n)
    size = len(comps)
    s_to_r = np.zeros((size, size), dtype=np.int64)
    r_to_s = np.zeros((size, size), dtype=np.int64)
    for comp in comps:
        for j in coarsenings(comp):
            s_to_r[idx[comp], idx[j]] = 1
            r_to_s[idx[comp], idx[j]] = (-1) ** (len(comp) - len(j))
    return r_to_s, s_to_r


# --------------------------------------------------------------------------
# fast internal product


def _bounded_rows(total: int, caps: tuple[int, ...]):
    """All vectors of nonnegative integers summing to ``total`` with entry-wise caps."""
    if not caps:
        if total == 0:
            yield ()
        return
    first_cap, rest = caps[0], caps[1:]
    rest_cap = sum(rest)
    for a in range(max(0, total - rest_cap), min(first_cap, total) + 1):
        for tail in _bounded_rows(total - a, rest):
            yield (a,) + tail


@lru_cache(maxsize=None)
def _matrix_readings(rows: tuple[int, ...], caps: tuple[int, ...]) -> tuple[tuple[Composition, int], ...]:
    """Readings of nonnegative integer matrices with row sums ``rows`` and column sums ``caps``.

    A matrix is read row by row, left to right, skipping zeros.  Returns
    (reading, multiplicity) pairs.
    """
    if not rows:
        return (((), 1),) if not any(caps) else ()
    acc: Counter = Counter()
    for row in _bounded_rows(rows[0], caps):
        rest_caps = tuple(c - a for c, a in zip(caps, row))
        head = tuple(a for a in row if a)
        for tail, mult in _matrix_readings(rows[1:], rest_caps):
            acc[head + tail] += mult
    return tuple(acc.items())


@lru_cache(maxsize=None)
def s_product_table(n: int) -> np.ndarray:
    """``T[I, J, K]``: coefficient of ``S^K`` in ``S^I S^J``.

    ``S^I S^J`` is the sum over matrices with row sums ``J`` and column sums
    ``I`` of ``S`` indexed by the row reading; this orientation is forced by
    composing as ``α(β(u))``.
    """
    comps = compositions(n)
    idx = _index(n)
    size = len(comps)
    table = np.zeros((size, size, size), dtype=np.int64)
    for a, left in enumerate(comps):
        for b, right in enumerate(comps):
            for reading, mult in _matrix_readings(right, left):
                table[a, b, idx[reading]] += mult
    return table


@lru_cache(maxsize=None)
def r_product_table(n: int) -> np.ndarray:
    """``T[I, J, K]``: coefficient of ``R_K`` in ``R_I R_J`` (nonnegative integers)."""
    r_to_s, s_to_r = conversion_matrices(n)
    table = s_product_table(n)
    step = np.tensordot(r_to_s, table, axes=(1, 0))  # [a, j, k]
    step = np.tensordot(step, r_to_s, axes=(1, 1))  # [a, k, b]
    step = np.tensordot(step, s_to_r, axes=(1, 0))  # [a, b, c]
    return np.ascontiguousarray(step)


def _integer_row(x: DescentElement) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in x.terms.values())) if x.terms else 1
    return [int(c * den) for c in x.vector("R")], den


def internal_product(x: DescentElement, y: DescentElement) -> DescentElement:
    """Product in ``D_n`` by structure constants; the result is in ``x``'s basis."""
    _same_degree(x, y)
    n = x.n
    if n == 0:
        c = x.terms.get((), 0) * y.terms.get((), 0)
        return DescentElement(0, x.basis, {(): c})
    if not x.terms or not y.terms:
        return DescentElement.zero(n, x.basis)
    table = r_product_table(n)
    vx, dx = _integer_row(x)
    vy, dy = _integer_row(y)
    mx = max(map(abs, vx))
    my = max(map(abs, vy))
    # every R_K coefficient of R_I R_J is at most n! in total over (I, J)
    bound = mx * my * int(table.sum(axis=(0, 1)).max())
    if bound < 2**62:
        ax = np.array(vx, dtype=np.int64)
        ay = np.array(vy, dtype=np.int64)
        res = [int(v) for v in np.einsum("i,j,ijk->k", ax, ay, table)]
    else:
        res = [0] * len(vx)
        for i, a in enumerate(vx):
            if not a:
                continue
            for j, b in enumerate(vy):
                if b:
                    for k in np.flatnonzero(table[i, j]):
                        res[k] += a * b * int(table[i, j, k])
    scale = Fraction(1, dx * dy)
    out = DescentElement(n, "R", {c: Fraction(v) * scale for c, v in zip(compositions(n), res) if v})
    return out.to_basis(x.basis)


def internal_product_oracle(x: DescentElement, y: DescentElement, *, force: bool = False) -> DescentElement:
    """Same product, computed by brute force in the group algebra."""
    from .group_algebra import ga_product, lift, project_to_descent_basis

    _same_degree(x, y)
    if x.n == 0:
        return internal_product(x, y)
    prod = ga_product(lift(x), lift(y), force=force)
    return project_to_descent_basis(prod).to_basis(x.basis)


# --------------------------------------------------------------------------
# multiplication by the decreasing permutation


def omega(n: int) -> DescentElement:
    """``ω = n…21 = R_(1^n)``."""
    return DescentElement.R((1,) * n)


def omega_mul(x: DescentElement, side: str) -> DescentElement:
    """``ωx`` (side='left') or ``xω`` (side='right')."""
    w = omega(x.n)
    if side == "left":
        return internal_product(w.to_basis(x.basis), x)
    if side == "right":
        return internal_product(x, w)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def omega_conjugate(x: DescentElement) -> DescentElement:
    return omega_mul(omega_mul(x, "left"), "right")
