"""
Commutative symmetric functions, stored in the power-sum basis.

``star`` is the ordinary product (``p_λ p_μ = p_{λ∪μ}``); the internal
product makes the ``p_λ / z_λ`` orthogonal idempotents.  ``gamma`` sends a
ribbon ``R_I`` to the ribbon Schur function ``r_I``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .combinatorics import (
    Composition,
    Partition,
    check_partition,
    coarsenings,
    partition_stats,
    partitions,
    z_lambda,
)
from .descent_algebra import DescentElement


@dataclass(frozen=True, eq=False)
class SymElement:
    n: int
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.terms.items():
            c = Fraction(c)
            if c:
                lam = check_partition(lam)
                if sum(lam) != self.n:
                    raise ValueError(f"{lam!r} is not a partition of {self.n}")
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @classmethod
    def p(cls, lam, coeff=1) -> "SymElement":
        lam = tuple(sorted(lam, reverse=True))
        return cls(sum(lam), {lam: coeff})

    @classmethod
    def one(cls) -> "SymElement":
        return cls(0, {(): 1})

    def __add__(self, other: "SymElement") -> "SymElement":
        _same_degree(self, other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymElement(self.n, out)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SymElement":
        c = Fraction(c)
        return SymElement(self.n, {k: c * v for k, v in self.terms.items()})

    def star(self, other: "SymElement") -> "SymElement":
        out: dict = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                lam = tuple(sorted(a + b, reverse=True))
                out[lam] = out.get(lam, 0) + x * y
        return SymElement(self.n + other.n, out)

    def __mul__(self, other: "SymElement") -> "SymElement":
        return internal_product_sym(self, other)

    def coefficient(self, lam) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"0[{self.n}]"
        return " + ".join(f"{c}*p{list(k)}" for k, c in sorted(self.terms.items()))


def _same_degree(a, b):
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")


def internal_product_sym(x: SymElement, y: SymElement) -> SymElement:
    """Bilinear, with ``p_λ p_μ = δ_{λμ} z_λ p_λ``."""
    _same_degree(x, y)
    out = {}
    for lam, c in x.terms.items():
        d = y.terms.get(lam)
        if d:
            out[lam] = c * d * z_lambda(lam)
    return SymElement(x.n, out)


def idempotent_sum(n: int, pred: Callable[[Partition], bool], sign: Callable[[Partition], int] | None = None) -> SymElement:
    """``Σ p_λ / z_λ`` over partitions of ``n`` satisfying ``pred``."""
    terms = {}
    for lam in partitions(n):
        if pred(lam):
            s = sign(lam) if sign else 1
            terms[lam] = Fraction(s) / z_lambda(lam)
    return SymElement(n, terms)


# --------------------------------------------------------------------------
# h, e and ribbons via exponential generating series


def _exp_series(gen: list[SymElement], cutoff: int) -> list[SymElement]:
    """Homogeneous parts of ``exp(Σ gen[d])`` up to ``cutoff``; ``gen[0]`` must vanish."""

    def mul(a, b):
        out = [SymElement(d) for d in range(cutoff + 1)]
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(cutoff + 1 - i):
                if b[j]:
                    out[i + j] = out[i + j] + x.star(b[j])
        return out

    one = [SymElement.one()] + [SymElement(d) for d in range(1, cutoff + 1)]
    acc = one
    for m in range(cutoff, 0, -1):
        step = mul(gen, acc)
        acc = [o + s.scale(Fraction(1, m)) for o, s in zip(one, step)]
    return acc


@lru_cache(maxsize=None)
def _h_parts(cutoff: int) -> tuple[SymElement, ...]:
    gen = [SymElement(0)] + [SymElement.p((i,), Fraction(1, i)) for i in range(1, cutoff + 1)]
    return tuple(_exp_series(gen, cutoff))


@lru_cache(maxsize=None)
def _e_parts(cutoff: int) -> tuple[SymElement, ...]:
    gen = [SymElement(0)] + [SymElement.p((i,), Fraction((-1) ** (i - 1), i)) for i in range(1, cutoff + 1)]
    return tuple(_exp_series(gen, cutoff))


def h_n(n: int) -> SymElement:
    return _h_parts(n)[n]


def e_to_p(n: int) -> SymElement:
    return _e_parts(n)[n]


def h_to_p(comp: Composition) -> SymElement:
    out = SymElement.one()
    for part in comp:
        out = out.star(h_n(part))
    return out


@lru_cache(maxsize=None)
def ribbon_to_p(comp: Composition) -> SymElement:
    """``r_I = Σ_{J≼I} (-1)^{ℓ(I)-ℓ(J)} h_J``."""
    comp = tuple(comp)
    out = SymElement(sum(comp))
    for j in coarsenings(comp):
        term = h_to_p(j)
        out = out + (term if (len(comp) - len(j)) % 2 == 0 else term.scale(-1))
    return out


def gamma(x: DescentElement) -> SymElement:
    """Image of a descent-algebra element: ``R_I ↦ r_I`` (equivalently ``S^I ↦ h_I``)."""
    out = SymElement(x.n)
    for comp, c in x.to_basis("R").terms.items():
        out = out + ribbon_to_p(comp).scale(c)
    return out


def chi_character(comp: Composition) -> dict[Partition, Fraction]:
    """Ribbon character: ``χ_I(μ) = z_μ ⋅ [p_μ] r_I`` for every partition ``μ``."""
    r = ribbon_to_p(tuple(comp))
    return {mu: z_lambda(mu) * r.coefficient(mu) for mu in partitions(sum(comp))}


def cycle_features(lam: Partition) -> tuple[int, int]:
    """(number of odd parts, number of even parts)."""
    st = partition_stats(lam)
    return st.odd_length, st.even_length
