"""
Permutations, compositions and partitions, with the statistics used to build
the run and peak algebras.

Permutations are tuples holding the one-line word ``σ_1 … σ_n`` on
``{1, …, n}``.  Compositions and partitions are tuples of positive integers.
Positions are 1-based everywhere.

>>> descent_set((1, 4, 5, 2, 3, 6, 8, 7))
frozenset({3, 7})
>>> run_stats((1, 4, 5, 2, 3, 6, 8, 7))
RunStats(run=4, first_ascending=True, left_run=4)
>>> composition_from_descents(8, {3, 7})
(3, 4, 1)
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

Permutation = tuple[int, ...]
Composition = tuple[int, ...]
Partition = tuple[int, ...]


class RunStats(NamedTuple):
    run: int
    first_ascending: bool
    left_run: int


class PeakStats(NamedTuple):
    pk: int
    pk_left: int


class PartitionStats(NamedTuple):
    length: int
    odd_length: int
    even_length: int
    z: int


# --------------------------------------------------------------------------
# validation


def check_permutation(word: Iterable[int]) -> Permutation:
    """Return ``word`` as a tuple, raising ValueError unless it is a permutation of 1..n."""
    w = tuple(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    return w


def check_composition(parts: Iterable[int], n: int | None = None) -> Composition:
    c = tuple(int(p) for p in parts)
    if any(p < 1 for p in c):
        raise ValueError(f"composition parts must be positive: {c!r}")
    if n is not None and sum(c) != n:
        raise ValueError(f"composition {c!r} does not sum to {n}")
    return c


def check_partition(parts: Iterable[int]) -> Partition:
    lam = check_composition(parts)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {lam!r}")
    return lam


# --------------------------------------------------------------------------
# enumeration (lexicographic, hence deterministic)


def permutations(n: int) -> Iterator[Permutation]:
    return itertools.permutations(range(1, n + 1))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of ``n`` in lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions(n - first))
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographic order."""

    def gen(m, largest):
        if m == 0:
            yield ()
            return
        for first in range(min(m, largest), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n)))


# --------------------------------------------------------------------------
# descents and compositions


def descent_set(word: Permutation) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def des(word: Permutation) -> int:
    return len(descent_set(word))


def descents_of(comp: Composition) -> frozenset[int]:
    """Partial sums ``{i_1, i_1+i_2, …}`` of all but the last part."""
    return frozenset(itertools.accumulate(comp[:-1]))


def composition_from_descents(n: int, descents: Iterable[int]) -> Composition:
    ds = sorted(set(descents))
    if ds and (ds[0] < 1 or ds[-1] > n - 1):
        raise ValueError(f"descent positions must lie in 1..{n - 1}: {ds!r}")
    if n == 0:
        return ()
    cuts = [0, *ds, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def descent_composition(word: Permutation) -> Composition:
    return composition_from_descents(len(word), descent_set(word))


def refines(coarse: Composition, fine: Composition) -> bool:
    """True iff ``coarse ≼ fine``, i.e. ``Des(coarse) ⊆ Des(fine)``."""
    if sum(coarse) != sum(fine):
        raise ValueError(f"size mismatch: {coarse!r} vs {fine!r}")
    return descents_of(coarse) <= descents_of(fine)


@lru_cache(maxsize=None)
def coarsenings(comp: Composition) -> tuple[Composition, ...]:
    """All ``J`` with ``J ≼ comp`` (merge adjacent parts in every way)."""
    n = sum(comp)
    ds = sorted(descents_of(comp))
    return tuple(
        composition_from_descents(n, sub)
        for r in range(len(ds) + 1)
        for sub in itertools.combinations(ds, r)
    )


@lru_cache(maxsize=None)
def refinements(comp: Composition) -> tuple[Composition, ...]:
    """All ``J`` with ``comp ≼ J``."""
    n = sum(comp)
    base = descents_of(comp)
    free = [i for i in range(1, n) if i not in base]
    return tuple(
        composition_from_descents(n, base | set(sub))
        for r in range(len(free) + 1)
        for sub in itertools.combinations(free, r)
    )


def bar(comp: Composition) -> Composition:
    """Exchange ascents with descents, then reverse the order.

    This is the descent composition of the reversed word.

    >>> bar((1, 3, 2))
    (1, 2, 1, 2)
    """
    n = sum(comp)
    if n == 0:
        return ()
    d = descents_of(comp)
    return composition_from_descents(n, {n - p for p in range(1, n) if p not in d})


# --------------------------------------------------------------------------
# runs and peaks


def run_stats(word: Permutation) -> RunStats:
    """Alternating runs of ``word``, read directly off the letters."""
    n = len(word)
    if n <= 1:
        return RunStats(1, True, 1)
    first_ascending = word[0] < word[1]
    runs = 1
    for a, b, c in zip(word, word[1:], word[2:]):
        if (a < b) != (b < c):
            runs += 1
    return RunStats(runs, first_ascending, runs if first_ascending else runs + 1)


def peak_stats(word: Permutation) -> PeakStats:
    padded = (0, *word)
    pk = pk_left = 0
    for i in range(1, len(word)):
        if padded[i - 1] < padded[i] > padded[i + 1]:
            pk_left += 1
            if i >= 2:
                pk += 1
    return PeakStats(pk, pk_left)


def _updown(comp: Composition) -> list[bool]:
    """``True`` at each position 1..n-1 that is a descent."""
    n = sum(comp)
    d = descents_of(comp)
    return [i in d for i in range(1, n)]


@lru_cache(maxsize=None)
def composition_run_stats(comp: Composition) -> RunStats:
    """Run statistics of any permutation whose descent composition is ``comp``."""
    ud = _updown(comp)
    if not ud:
        return RunStats(1, True, 1)
    runs = 1 + sum(1 for a, b in zip(ud, ud[1:]) if a != b)
    first_ascending = not ud[0]
    return RunStats(runs, first_ascending, runs if first_ascending else runs + 1)


@lru_cache(maxsize=None)
def composition_peak_stats(comp: Composition) -> PeakStats:
    ud = _updown(comp)
    # a peak at i means ascent at i-1 and descent at i; position 0 counts as an ascent
    asc = [True] + [not x for x in ud]
    pk_left = sum(1 for i, is_des in enumerate(ud, start=1) if is_des and asc[i - 1])
    pk = sum(1 for i, is_des in enumerate(ud, start=1) if is_des and i >= 2 and asc[i - 1])
    return PeakStats(pk, pk_left)


# --------------------------------------------------------------------------
# partitions


def partition_stats(lam: Partition) -> PartitionStats:
    odd = sum(1 for p in lam if p % 2)
    z = 1
    for part, mult in Counter(lam).items():
        z *= part**mult * factorial(mult)
    return PartitionStats(len(lam), odd, len(lam) - odd, z)


def z_lambda(lam: Partition) -> Fraction:
    return Fraction(partition_stats(lam).z)


# --------------------------------------------------------------------------
# left weak order


def apply_simple_left(word: Permutation, i: int) -> Permutation:
    """``s_i ∘ word``: swap the letters ``i`` and ``i+1``."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in word)


def apply_simple_right(word: Permutation, h: int) -> Permutation:
    """``word ∘ s_h``: swap the letters in positions ``h`` and ``h+1``."""
    w = list(word)
    w[h - 1], w[h] = w[h], w[h - 1]
    return tuple(w)


def weak_order_cover(word: Permutation, i: int) -> Permutation | None:
    """Return ``s_i·word`` when it covers ``word`` (``i`` left of ``i+1``), else None."""
    n = len(word)
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple transposition index {i} outside 1..{n - 1}")
    if word.index(i) < word.index(i + 1):
        return apply_simple_left(word, i)
    return None


def is_connected(perms: Iterable[Permutation]) -> bool:
    """Connectivity of a set of permutations under undirected weak-order covers."""
    nodes = set(perms)
    if len(nodes) <= 1:
        return True
    start = next(iter(nodes))
    n = len(start)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, n):
            v = apply_simple_left(w, i)
            if v in nodes and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(nodes)


# --------------------------------------------------------------------------
# the permutation sets indexed by run counts


def in_run_class(word: Permutation, k: int, ascending: bool) -> bool:
    st = run_stats(word)
    return st.run == k and st.first_ascending == ascending


def run_class(n: int, k: int, ascending: bool) -> list[Permutation]:
    return [w for w in permutations(n) if in_run_class(w, k, ascending)]
