import pytest
from hypothesis import given, settings, strategies as st

from staircase_rings.shapes import (
    conjugate,
    dominance_leq,
    enumerate_staircase_set,
    in_staircase_set,
    in_staircase_set_slow,
    increasing_sequences,
    multi_reduction,
    p_stat,
    partition_contains,
    partitions_of,
    reduction,
    sort_to_partition,
    staircases,
)

EXPECTED_4_21_3 = {
    (0, 0, 0, 0), (1, 0, 0, 0), (2, 0, 0, 0), (0, 1, 0, 0), (0, 2, 0, 0),
    (0, 0, 1, 0), (1, 0, 1, 0), (2, 0, 1, 0), (0, 1, 1, 0), (0, 2, 1, 0),
    (0, 0, 2, 0), (0, 1, 2, 0), (0, 0, 0, 1), (1, 0, 0, 1), (2, 0, 0, 1),
    (0, 1, 0, 1), (0, 2, 0, 1), (0, 0, 1, 1), (0, 0, 2, 1), (0, 0, 0, 2),
    (0, 1, 0, 2), (0, 0, 1, 2),
}

small_partitions = st.builds(
    sort_to_partition,
    st.lists(st.integers(1, 4), max_size=4),
)


def test_conjugate_and_p_stat():
    assert conjugate((3, 2, 1, 1, 1)) == (5, 2, 1)
    assert conjugate((), 4) == (0, 0, 0, 0)
    assert p_stat(6, 5, (3, 2)) == 3
    assert p_stat(6, 6, (3, 2)) == 5


def test_reductions():
    assert reduction((6, 6, 4, 4, 1), 2) == (6, 6, 4, 3, 1)
    assert reduction((1,), 0) == ()
    assert multi_reduction((2, 1), (0, 2), 3) == (1, 1)
    assert multi_reduction((2, 2), (0, 1), 2) == (1, 1)
    assert multi_reduction((), (0, 1), 2) == ()


def test_dominance_and_containment():
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    assert partition_contains((2, 1), (2, 2))
    assert not partition_contains((3,), (2, 2))


def test_partitions_of_order():
    assert list(partitions_of(4)) == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)
    ]
    assert list(partitions_of(4, max_length=2)) == [(4,), (3, 1), (2, 2)]


def test_increasing_sequences():
    assert increasing_sequences(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert increasing_sequences(3, 0) == [()]


def test_staircase_set_exact_example():
    members = enumerate_staircase_set(4, (2, 1), 3)
    assert len(members) == 22
    assert set(members) == EXPECTED_4_21_3


def test_staircase_membership_examples():
    assert in_staircase_set((0, 1, 0, 2), 4, (2, 1), 3)
    assert not in_staircase_set((2, 0, 0, 2), 4, (2, 1), 3)
    assert enumerate_staircase_set(0, (), 2) == [()]
    with pytest.raises(ValueError):
        enumerate_staircase_set(2, (2, 1), 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), small_partitions, st.integers(1, 4))
def test_membership_matches_slow_oracle(n, la, s):
    if sum(la) > n or len(la) > s:
        return
    fast = set(enumerate_staircase_set(n, la, s))
    slow = {
        alpha
        for alpha in _boxed(n, s)
        if in_staircase_set_slow(alpha, n, la, s)
    }
    assert fast == slow
    for alpha in _boxed(n, s):
        assert in_staircase_set(alpha, n, la, s) == (alpha in slow)


def _boxed(n, s):
    from itertools import product

    return [tuple(a) for a in product(range(s), repeat=n)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), small_partitions, st.integers(1, 4))
def test_staircases_are_maximal_members(n, la, s):
    if sum(la) > n or len(la) > s:
        return
    members = set(enumerate_staircase_set(n, la, s))
    for stair in staircases(n, la, s):
        assert stair in members


@settings(max_examples=60, deadline=None)
@given(small_partitions, st.integers(1, 4), st.lists(st.integers(0, 3), max_size=3))
def test_multi_reduction_removes_at_most_one_box_per_step(la, s, seq):
    if len(la) > s or any(i >= s for i in seq):
        return
    red = multi_reduction(la, tuple(seq), s)
    assert sum(la) - len(seq) <= sum(red) <= sum(la)
    assert partition_contains(red, la)


def test_sort_to_partition():
    assert sort_to_partition((0, 3, 1, 0, 2)) == (3, 2, 1)
    assert sort_to_partition(()) == ()
