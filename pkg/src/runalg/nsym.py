"""
Truncated series of noncommutative symmetric functions.

A series is a list of homogeneous parts, the part of degree ``d`` being a
``DescentElement`` of degree ``d`` (degree 0 holds the scalar, keyed by the
empty composition).  Everything above the cutoff is dropped silently.

``star`` is the external product: concatenation on the S basis and
near-concatenation on the R basis.  The internal product acts degree by
degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .combinatorics import Composition
from .descent_algebra import DescentElement, internal_product


class ConstantTermViolation(ValueError):
    """log/power need constant term 1, exp needs constant term 0."""


# --------------------------------------------------------------------------
# external product on homogeneous elements


def star(x: DescentElement, y: DescentElement) -> DescentElement:
    """External product of homogeneous elements, returned in ``x``'s basis.

    >>> star(DescentElement.S((2, 3)), DescentElement.S((5, 1, 1)))
    1*S[2, 3, 5, 1, 1]
    >>> star(DescentElement.R((2, 3)), DescentElement.R((5, 1, 1)))
    1*R[2, 3, 5, 1, 1] + 1*R[2, 8, 1, 1]
    """
    basis = x.basis
    y = y.to_basis(basis)
    n = x.n + y.n
    out: dict[Composition, Fraction] = {}
    for i, a in x.terms.items():
        for j, b in y.terms.items():
            c = a * b
            out[i + j] = out.get(i + j, 0) + c
            if basis == "R" and i and j:
                merged = i[:-1] + (i[-1] + j[0],) + j[1:]
                out[merged] = out.get(merged, 0) + c
    return DescentElement(n, basis, out)


def scalar(c) -> DescentElement:
    return DescentElement(0, "R", {(): c})


# --------------------------------------------------------------------------
# series


@dataclass(frozen=True, eq=False)
class NSymSeries:
    parts: tuple[DescentElement, ...]

    def __post_init__(self):
        parts = tuple(p.to_basis("R") for p in self.parts)
        for d, p in enumerate(parts):
            if p.n != d:
                raise ValueError(f"part {d} has degree {p.n}")
        if not parts:
            raise ValueError("a series needs at least its degree-0 part")
        object.__setattr__(self, "parts", parts)

    @property
    def cutoff(self) -> int:
        return len(self.parts) - 1

    @classmethod
    def from_parts(cls, parts: Iterable[DescentElement], cutoff: int) -> "NSymSeries":
        given = {p.n: p for p in parts}
        return cls(tuple(given.get(d, DescentElement.zero(d)) for d in range(cutoff + 1)))

    @classmethod
    def constant(cls, c, cutoff: int) -> "NSymSeries":
        return cls((scalar(c),) + tuple(DescentElement.zero(d) for d in range(1, cutoff + 1)))

    @classmethod
    def zero(cls, cutoff: int) -> "NSymSeries":
        return cls.constant(0, cutoff)

    @classmethod
    def one(cls, cutoff: int) -> "NSymSeries":
        return cls.constant(1, cutoff)

    def __getitem__(self, d: int) -> DescentElement:
        return self.parts[d]

    def constant_term(self) -> Fraction:
        return self.parts[0].terms.get((), Fraction(0))

    def truncate(self, cutoff: int) -> "NSymSeries":
        if cutoff > self.cutoff:
            raise ValueError("cannot extend a truncated series")
        return NSymSeries(self.parts[: cutoff + 1])

    def __add__(self, other: "NSymSeries") -> "NSymSeries":
        m = min(self.cutoff, other.cutoff)
        return NSymSeries(tuple(self.parts[d] + other.parts[d] for d in range(m + 1)))

    def __sub__(self, other: "NSymSeries") -> "NSymSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "NSymSeries":
        return NSymSeries(tuple(p.scale(c) for p in self.parts))

    def star(self, other: "NSymSeries") -> "NSymSeries":
        return external_product(self, other)

    def internal(self, other: "NSymSeries") -> "NSymSeries":
        m = min(self.cutoff, other.cutoff)
        return NSymSeries(tuple(internal_on_degree(self, other, d) for d in range(m + 1)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, NSymSeries):
            return NotImplemented
        m = min(self.cutoff, other.cutoff)
        return all(self.parts[d] == other.parts[d] for d in range(m + 1))

    def __repr__(self) -> str:
        return f"NSymSeries(cutoff={self.cutoff}, {list(self.parts)!r})"


def external_product(a: NSymSeries, b: NSymSeries) -> NSymSeries:
    m = min(a.cutoff, b.cutoff)
    parts = []
    for d in range(m + 1):
        acc = DescentElement.zero(d)
        for i in range(d + 1):
            x, y = a.parts[i], b.parts[d - i]
            if x and y:
                acc = acc + star(x, y)
        parts.append(acc)
    return NSymSeries(tuple(parts))


def internal_on_degree(a: NSymSeries, b: NSymSeries, d: int) -> DescentElement:
    if d > a.cutoff or d > b.cutoff:
        raise ValueError(f"degree {d} is above a cutoff")
    return internal_product(a.parts[d], b.parts[d])


def power(a: NSymSeries, k: int) -> NSymSeries:
    """External power for a nonnegative integer ``k``."""
    out = NSymSeries.one(a.cutoff)
    for _ in range(k):
        out = external_product(out, a)
    return out


# --------------------------------------------------------------------------
# coproduct


def _coproduct_S(comp: Composition) -> dict[tuple[Composition, Composition], int]:
    out: dict = {}
    for split in itertools.product(*(range(p + 1) for p in comp)):
        left = tuple(a for a in split if a)
        right = tuple(p - a for p, a in zip(comp, split) if p - a)
        out[(left, right)] = out.get((left, right), 0) + 1
    return out


def coproduct_degree(a: NSymSeries, d: int) -> dict[tuple[Composition, Composition], Fraction]:
    """``Δ`` of the degree-``d`` part, on ``S ⊗ S``.

    ``Δ(S_n) = Σ S_i ⊗ S_{n-i}``, extended multiplicatively.
    """
    out: dict = {}
    for comp, c in a.parts[d].to_basis("S").terms.items():
        for key, mult in _coproduct_S(comp).items():
            out[key] = out.get(key, 0) + c * mult
    return {k: v for k, v in out.items() if v}


def tensor_square_degree(a: NSymSeries, d: int) -> dict[tuple[Composition, Composition], Fraction]:
    """Degree-``d`` part of ``a ⊗ a`` on ``S ⊗ S``."""
    out: dict = {}
    for i in range(d + 1):
        left = a.parts[i].to_basis("S").terms
        right = a.parts[d - i].to_basis("S").terms
        for p, x in left.items():
            for q, y in right.items():
                out[(p, q)] = out.get((p, q), 0) + x * y
    return {k: v for k, v in out.items() if v}


def is_grouplike(a: NSymSeries) -> bool:
    return all(coproduct_degree(a, d) == tensor_square_degree(a, d) for d in range(a.cutoff + 1))


# --------------------------------------------------------------------------
# log, exp and rational powers


def log_star(a: NSymSeries) -> NSymSeries:
    """``log(1+F) = F - F⋆F/2 + F⋆F⋆F/3 - …`` evaluated by Horner's rule."""
    if a.constant_term() != 1:
        raise ConstantTermViolation(f"log needs constant term 1, got {a.constant_term()}")
    N = a.cutoff
    f = a - NSymSeries.one(N)
    if N == 0:
        return NSymSeries.zero(0)
    acc = NSymSeries.constant(Fraction((-1) ** (N + 1), N), N)
    for m in range(N - 1, 0, -1):
        acc = NSymSeries.constant(Fraction((-1) ** (m + 1), m), N) + external_product(f, acc)
    return external_product(f, acc)


def exp_star(a: NSymSeries) -> NSymSeries:
    """``exp F = 1 + F + F⋆F/2! + …`` evaluated by Horner's rule."""
    if a.constant_term() != 0:
        raise ConstantTermViolation(f"exp needs constant term 0, got {a.constant_term()}")
    N = a.cutoff
    one = NSymSeries.one(N)
    acc = one
    for m in range(N, 0, -1):
        acc = one + external_product(a, acc).scale(Fraction(1, m))
    return acc


def power_star(a: NSymSeries, q) -> NSymSeries:
    """``a^{⋆q} = exp(q log a)`` for rational ``q``; ``a`` must have constant term 1."""
    return exp_star(log_star(a).scale(Fraction(q)))


# --------------------------------------------------------------------------
# the V series


def V1(sign: str, cutoff: int) -> NSymSeries:
    """``Σ R_(i)`` (sign '+') or ``Σ R_(1^i)`` (sign '-')."""
    if sign == "+":
        parts = [DescentElement.R((d,)) if d else scalar(1) for d in range(cutoff + 1)]
    elif sign == "-":
        parts = [DescentElement.R((1,) * d) if d else scalar(1) for d in range(cutoff + 1)]
    else:
        raise ValueError(f"sign must be '+' or '-', not {sign!r}")
    return NSymSeries(tuple(parts))


_V_CACHE: dict = {}


def build_V(k: int, sign: str, cutoff: int) -> NSymSeries:
    """Alternating external product of ``k`` monotone runs.

    ``sign`` is '+' (first run ascending), '-' (first run descending) or
    'both' for their sum.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if sign == "both":
        return build_V(k, "+", cutoff) + build_V(k, "-", cutoff)
    key = (k, sign, cutoff)
    if key not in _V_CACHE:
        runs = [V1("+", cutoff), V1("-", cutoff)]
        start = 0 if sign == "+" else 1
        out = runs[start]
        for step in range(1, k):
            out = external_product(out, runs[(start + step) % 2])
        _V_CACHE[key] = out
    return _V_CACHE[key]



def v_product_sign(k: int, s: str, t: str) -> str:
    """Sign of ``V_k^s V_l^t = V_{kl}^±``; right factor ``-`` flips the sign when ``k`` is odd."""
    if t == "+" or k % 2 == 0:
        return s
    return "-" if s == "+" else "+"
