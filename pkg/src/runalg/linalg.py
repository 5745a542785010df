"""Exact Gaussian elimination over the rationals (first-nonzero pivoting)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = list[Fraction]


class SpanSolver:
    """Row-reduces a list of vectors while tracking how each reduced row was formed.

    ``solve(v)`` returns coefficients ``c`` with ``Σ c_i vectors[i] = v``, or
    None when ``v`` is outside the span.  ``relations`` holds a basis of the
    linear dependencies among the input vectors.
    """

    def __init__(self, vectors: Sequence[Sequence]):
        self.count = len(vectors)
        self.width = len(vectors[0]) if vectors else 0
        self.rows: list[tuple[Vector, Vector, int]] = []  # (row, combination, pivot column)
        self.relations: list[Vector] = []
        for i, v in enumerate(vectors):
            combo = [Fraction(0)] * self.count
            combo[i] = Fraction(1)
            row, combo = self._reduce([Fraction(x) for x in v], combo)
            pivot = next((j for j, x in enumerate(row) if x), None)
            if pivot is None:
                self.relations.append(combo)
                continue
            inv = 1 / row[pivot]
            self.rows.append(([x * inv for x in row], [x * inv for x in combo], pivot))

    def _reduce(self, row: Vector, combo: Vector) -> tuple[Vector, Vector]:
        for prow, pcombo, pivot in self.rows:
            f = row[pivot]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
                combo = [a - f * b for a, b in zip(combo, pcombo)]
        return row, combo

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def independent(self) -> bool:
        return self.rank == self.count

    def solve(self, target: Sequence) -> Vector | None:
        row = [Fraction(x) for x in target]
        if len(row) != self.width:
            raise ValueError("target has the wrong length")
        coeffs = [Fraction(0)] * self.count
        for prow, pcombo, pivot in self.rows:
            f = row[pivot]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
                coeffs = [a + f * b for a, b in zip(coeffs, pcombo)]
        if any(row):
            return None
        return coeffs

    def contains(self, target: Sequence) -> bool:
        return self.solve(target) is not None


def rank(vectors: Sequence[Sequence]) -> int:
    return SpanSolver(vectors).rank if vectors else 0


def kernel(vectors: Sequence[Sequence]) -> list[Vector]:
    """Basis of ``{c : Σ c_i vectors[i] = 0}``."""
    return SpanSolver(vectors).relations if vectors else []


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(list(a) + list(b))


def intersection_dim(a: Sequence[Sequence], b: Sequence[Sequence]) -> int:
    return rank(a) + rank(b) - rank(list(a) + list(b))


def mat_vec(coeffs: Sequence, vectors: Sequence[Sequence]) -> Vector:
    """``Σ coeffs[i] * vectors[i]``."""
    width = len(vectors[0])
    out = [Fraction(0)] * width
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] += c * x
    return out
