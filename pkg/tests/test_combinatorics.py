import itertools
from math import factorial

import pytest
from hypothesis import given

from runalg.combinatorics import (
    PartitionStats,
    bar,
    check_composition,
    check_partition,
    check_permutation,
    coarsenings,
    composition_from_descents,
    composition_peak_stats,
    composition_run_stats,
    compositions,
    descent_composition,
    descent_set,
    descents_of,
    is_connected,
    partition_stats,
    partitions,
    peak_stats,
    permutations,
    refinements,
    refines,
    run_class,
    run_stats,
    weak_order_cover,
    z_lambda,
)

from conftest import composition_st


def test_descent_set_examples():
    assert descent_set((1, 4, 5, 2, 3, 6, 8, 7)) == {3, 7}
    assert descent_set(tuple(range(1, 6))) == set()
    assert descent_set((5, 4, 3, 2, 1)) == {1, 2, 3, 4}


def test_run_stats_examples():
    assert run_stats((1, 4, 5, 2, 3, 6, 8, 7)) == (4, True, 4)
    assert run_stats((1, 2, 3, 4)) == (1, True, 1)
    assert run_stats((3, 2, 1)) == (1, False, 2)
    assert run_stats((1,)) == (1, True, 1)


def test_peak_stats_examples():
    assert peak_stats((1, 3, 2)) == (1, 1)
    assert peak_stats((2, 1, 3)) == (0, 1)
    assert peak_stats((1, 2, 3, 4)) == (0, 0)


def test_composition_from_descents():
    assert composition_from_descents(8, {3, 7}) == (3, 4, 1)
    assert composition_from_descents(5, set()) == (5,)
    assert composition_from_descents(4, {1, 2, 3}) == (1, 1, 1, 1)
    assert composition_from_descents(0, ()) == ()
    with pytest.raises(ValueError):
        composition_from_descents(4, {4})
    with pytest.raises(ValueError):
        composition_from_descents(4, {0})


@pytest.mark.parametrize("n", range(1, 8))
def test_descents_round_trip(n):
    for c in compositions(n):
        assert composition_from_descents(n, descents_of(c)) == c
    for r in range(n):
        for d in itertools.combinations(range(1, n), r):
            assert descents_of(composition_from_descents(n, d)) == set(d)


def test_refines():
    assert refines((3,), (1, 2))
    assert not refines((1, 2), (2, 1))
    assert refines((2, 1), (2, 1))
    with pytest.raises(ValueError):
        refines((3,), (2,))


def test_coarsenings_and_refinements_are_dual():
    for c in compositions(6):
        assert all(refines(j, c) for j in coarsenings(c))
        assert all(refines(c, j) for j in refinements(c))
        assert len(coarsenings(c)) == 2 ** (len(c) - 1)


def test_bar_examples():
    assert bar((1, 3, 2)) == (1, 2, 1, 2)
    assert bar((5,)) == (1, 1, 1, 1, 1)
    assert bar(()) == ()


@pytest.mark.parametrize("n", range(1, 9))
def test_bar_involution_and_descents(n):
    for c in compositions(n):
        assert bar(bar(c)) == c
        assert descents_of(bar(c)) == {n - d for d in range(1, n) if d not in descents_of(c)}


def test_bar_is_reversal():
    for w in permutations(5):
        assert bar(descent_composition(w)) == descent_composition(w[::-1])


def test_partition_stats_examples():
    assert partition_stats((2, 1, 1)) == PartitionStats(3, 2, 1, 4)
    assert z_lambda((6,)) == 6
    assert z_lambda((1,) * 5) == factorial(5)


@given(composition_st(n_max=10))
def test_partition_length_split(comp):
    lam = tuple(sorted(comp, reverse=True))
    st = partition_stats(lam)
    assert st.length == st.odd_length + st.even_length


@pytest.mark.parametrize("n, counts", [(1, (1, 1, 1)), (4, (24, 8, 5)), (6, (720, 32, 11))])
def test_enumeration_counts(n, counts):
    assert (len(list(permutations(n))), len(compositions(n)), len(partitions(n))) == counts


def test_enumeration_empty_and_order():
    assert compositions(0) == ((),)
    assert partitions(0) == ((),)
    assert list(permutations(0)) == [()]
    assert list(compositions(4)) == sorted(compositions(4))
    assert list(partitions(6)) == sorted(partitions(6))


def test_validation():
    assert check_permutation([2, 1, 3]) == (2, 1, 3)
    with pytest.raises(ValueError):
        check_permutation([1, 1, 2])
    with pytest.raises(ValueError):
        check_composition([2, 0, 1])
    with pytest.raises(ValueError):
        check_composition([2, 1], n=4)
    with pytest.raises(ValueError):
        check_partition([1, 2])


@pytest.mark.parametrize("n", range(1, 8))
def test_statistics_depend_only_on_descents(n):
    for w in permutations(n):
        c = descent_composition(w)
        assert run_stats(w) == composition_run_stats(c)
        assert peak_stats(w) == composition_peak_stats(c)


@pytest.mark.parametrize("n", range(2, 7))
def test_left_run_relation(n):
    for w in permutations(n):
        st = run_stats(w)
        assert st.left_run == st.run + (0 if st.first_ascending else 1)


def test_weak_order_cover():
    assert weak_order_cover((1, 3, 2), 1) == (2, 3, 1)
    assert weak_order_cover((2, 3, 1), 1) is None
    with pytest.raises(ValueError):
        weak_order_cover((1, 2, 3), 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_run_classes_connected(n):
    for k in range(1, n):
        for asc in (True, False):
            cls = run_class(n, k, asc)
            assert cls
            assert is_connected(cls)


def test_is_connected_small_sets():
    assert is_connected([(2, 1, 3)])
    assert not is_connected([(1, 2, 3), (3, 2, 1)])
    assert not is_connected([tuple(range(1, 5)), tuple(range(4, 0, -1))])


def test_run_class_counts():
    n = 5
    total = sum(len(run_class(n, k, a)) for k in range(1, n) for a in (True, False))
    assert total == factorial(n)
