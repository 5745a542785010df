"""
Brute-force layer: exact rational elements of the group algebra ``Q[S_n]``.

The product is composition of functions, ``(αβ)(u) = α(β(u))``; with this
convention multiplying by the decreasing permutation on the right reverses a
word, and on the left complements its letters.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Mapping

import numpy as np

from .combinatorics import (
    Permutation,
    check_permutation,
    descent_composition,
    permutations,
)

DEFAULT_MAX_ORACLE_N = 7


class NotInDescentAlgebra(ValueError):
    """Two permutations of one descent class carry different coefficients."""


class OracleTooLarge(ValueError):
    pass


def max_oracle_n() -> int:
    return int(os.environ.get("RUNALG_MAX_ORACLE_N", DEFAULT_MAX_ORACLE_N))


def compose(alpha: Permutation, beta: Permutation) -> Permutation:
    return tuple(alpha[b - 1] for b in beta)


def inverse(word: Permutation) -> Permutation:
    inv = [0] * len(word)
    for pos, letter in enumerate(word, start=1):
        inv[letter - 1] = pos
    return tuple(inv)


@dataclass(frozen=True)
class GAElement:
    n: int
    terms: Mapping[Permutation, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            c = Fraction(c)
            if c:
                if len(w) != self.n:
                    raise ValueError(f"{w!r} is not a permutation of degree {self.n}")
                clean[tuple(w)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_perm(cls, word, coeff=1) -> "GAElement":
        w = check_permutation(word)
        return cls(len(w), {w: Fraction(coeff)})

    @classmethod
    def identity(cls, n: int) -> "GAElement":
        return cls(n, {tuple(range(1, n + 1)): Fraction(1)})

    def __add__(self, other: "GAElement") -> "GAElement":
        _same_degree(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GAElement(self.n, out)

    def __neg__(self) -> "GAElement":
        return GAElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GAElement") -> "GAElement":
        return self + (-other)

    def scale(self, c) -> "GAElement":
        c = Fraction(c)
        return GAElement(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: "GAElement") -> "GAElement":
        return ga_product(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, GAElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)


def _same_degree(a, b):
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")


# --------------------------------------------------------------------------
# dense machinery: permutations indexed lexicographically


@lru_cache(maxsize=None)
def _perm_table(n: int) -> tuple[np.ndarray, dict]:
    perms = np.array(list(permutations(n)), dtype=np.int64).reshape(-1, n)
    index = {tuple(int(x) for x in row): i for i, row in enumerate(perms)}
    return perms, index


@lru_cache(maxsize=2)
def _compose_table(n: int) -> np.ndarray:
    """``table[a, b]`` is the index of ``perm[a] ∘ perm[b]``."""
    perms, _ = _perm_table(n)
    base = n + 1
    weights = base ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes = perms @ weights  # increasing, since perms are in lexicographic order
    size = len(perms)
    dtype = np.int16 if size < 2**15 else np.int32
    table = np.empty((size, size), dtype=dtype)
    for b in range(size):
        # column b: words alpha[beta(u)] for all alpha
        composed = perms[:, perms[b] - 1]
        table[:, b] = np.searchsorted(codes, composed @ weights)
    return table


def _to_integer_vector(a: GAElement) -> tuple[dict[int, int], int]:
    _, index = _perm_table(a.n)
    den = lcm(*(c.denominator for c in a.terms.values())) if a.terms else 1
    vec = {index[w]: int(c * den) for w, c in a.terms.items()}
    return vec, den


def ga_product(a: GAElement, b: GAElement, *, force: bool = False) -> GAElement:
    """Convolution product, bilinear extension of ``(αβ)(u) = α(β(u))``.

    Degrees above ``RUNALG_MAX_ORACLE_N`` are refused unless ``force`` is set.
    """
    _same_degree(a, b)
    n = a.n
    if n > max_oracle_n() and not force:
        raise OracleTooLarge(f"group-algebra product at n={n} exceeds RUNALG_MAX_ORACLE_N={max_oracle_n()}")
    if not a.terms or not b.terms:
        return GAElement(n)
    if len(a.terms) * len(b.terms) <= 4096:
        out: dict[Permutation, Fraction] = {}
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                w = compose(wa, wb)
                out[w] = out.get(w, 0) + ca * cb
        return GAElement(n, out)

    perms, _ = _perm_table(n)
    table = _compose_table(n)
    size = len(perms)
    va, da = _to_integer_vector(a)
    vb, db = _to_integer_vector(b)
    bound = max(map(abs, va.values())) * max(map(abs, vb.values())) * size
    dtype = np.int64 if bound < 2**62 else object
    dense_a = np.zeros(size, dtype=dtype)
    for i, c in va.items():
        dense_a[i] = c
    acc = np.zeros(size, dtype=dtype)
    for j, cb in vb.items():
        # alpha -> alpha∘beta_j is a bijection, so the fancy-index add has no collisions
        acc[table[:, j]] += dense_a * cb
    scale = Fraction(1, da * db)
    out = {}
    for idx in np.flatnonzero(acc):
        out[tuple(int(x) for x in perms[idx])] = Fraction(int(acc[idx])) * scale
    return GAElement(n, out)


def ga_sum_over(n: int, pred: Callable[[Permutation], bool]) -> GAElement:
    return GAElement(n, {w: Fraction(1) for w in permutations(n) if pred(w)})


def project_to_descent_basis(a: GAElement):
    """Coefficients on the ribbon basis of an element constant on descent classes."""
    from .descent_algebra import DescentElement

    seen: dict = {}
    counts: dict = {}
    for w, c in a.terms.items():
        comp = descent_composition(w)
        if comp in seen and seen[comp] != c:
            raise NotInDescentAlgebra(f"descent class {comp!r} carries {seen[comp]} and {c}")
        seen[comp] = c
        counts[comp] = counts.get(comp, 0) + 1
    for comp, cnt in counts.items():
        if cnt != class_size(comp):
            raise NotInDescentAlgebra(f"descent class {comp!r} only partially supported")
    return DescentElement(a.n, "R", seen)


@lru_cache(maxsize=None)
def _class_sizes(n: int) -> dict:
    sizes: dict = {}
    for _, c in _descent_classes(n):
        sizes[c] = sizes.get(c, 0) + 1
    return sizes


def class_size(comp) -> int:
    """Number of permutations with descent composition ``comp``."""
    return _class_sizes(sum(comp)).get(tuple(comp), 0)


def lift(x) -> GAElement:
    """Expand a descent-algebra element into permutations."""
    coeffs = x.to_basis("R").terms
    out = {}
    for w, comp in _descent_classes(x.n):
        c = coeffs.get(comp)
        if c:
            out[w] = c
    return GAElement(x.n, out)


@lru_cache(maxsize=None)
def _descent_classes(n: int) -> tuple:
    return tuple((w, descent_composition(w)) for w in permutations(n))

