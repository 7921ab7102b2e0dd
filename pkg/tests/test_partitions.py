import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charmult.errors import InvalidParameter, InvalidPartition
from charmult.partitions import (
    HookKey,
    Partition,
    conjugate,
    count_partitions,
    count_self_conjugate,
    enumerate_partitions,
    hook_multiset,
    iter_partitions,
    iter_self_conjugate,
    make_partition,
    parse_partition,
    seed_partition,
    t_sum,
)

from .oracles import brute_partitions, coin_change_count, diagram_hooks, transpose


@st.composite
def partitions(draw, max_size=25):
    n = draw(st.integers(0, max_size))
    parts, rem = [], n
    while rem:
        x = draw(st.integers(1, min(rem, parts[-1] if parts else rem)))
        parts.append(x)
        rem -= x
    return Partition(parts)


def test_make_partition():
    lam = make_partition([5, 3, 3, 2])
    assert lam == (5, 3, 3, 2) and lam.size == 13
    assert make_partition([]).size == 0
    assert make_partition([3, 1, 0, 0]) == (3, 1)


@pytest.mark.parametrize("bad", [[3, 5], [2, -1], [2, 0, 1]])
def test_make_partition_rejects(bad):
    with pytest.raises(InvalidPartition):
        make_partition(bad)


def test_parse_partition():
    assert parse_partition("5,3,3,2") == (5, 3, 3, 2)
    assert parse_partition("") == ()
    with pytest.raises(InvalidPartition):
        parse_partition("5,x")


def test_conjugate_examples():
    assert conjugate(Partition([5, 3, 3, 2])) == (4, 4, 3, 1, 1)
    assert conjugate(Partition()) == ()
    assert conjugate(Partition([1])) == (1,)


def test_t_sum():
    assert t_sum(Partition([5, 3, 3, 2])) == 9
    assert t_sum(Partition()) == 0
    assert t_sum(Partition([1])) == 2


def test_hook_examples():
    assert hook_multiset(Partition([2, 1])).hooks == (3, 1, 1)
    assert hook_multiset(Partition([6])).hooks == (6, 5, 4, 3, 2, 1)
    assert hook_multiset(Partition([5, 3, 3, 2])) == hook_multiset(Partition([4, 4, 3, 1, 1]))


def test_hookkey_roundtrip():
    key = HookKey.from_hooks([3, 1, 1])
    assert key.counts == (2, 0, 1)
    assert len(key) == 3
    assert key == HookKey([2, 0, 1, 0])


def test_numpy_hook_path_matches_python_path():
    lam = Partition([90] * 30 + [60] * 40 + [7] * 20)  # above the numpy threshold
    assert lam.size > 4096
    from charmult.partitions import iter_hooks
    assert hook_multiset(lam) == HookKey.from_hooks(iter_hooks(lam))


@settings(max_examples=150, deadline=None)
@given(partitions())
def test_conjugation_laws(lam):
    conj = conjugate(lam)
    assert conjugate(conj) == lam
    assert conj.size == lam.size
    assert t_sum(conj) == t_sum(lam)
    assert conj == transpose(lam)


@settings(max_examples=150, deadline=None)
@given(partitions())
def test_hook_laws(lam):
    key = hook_multiset(lam)
    assert key == hook_multiset(conjugate(lam))
    assert len(key) == lam.size
    assert list(key.hooks) == diagram_hooks(lam)


def test_conjugate_involution_exhaustive():
    for n in range(26):
        for lam in iter_partitions(n):
            assert conjugate(conjugate(lam)) == lam


def test_enumeration_order_small():
    seen = []
    assert enumerate_partitions(4, seen.append) == 5
    assert seen == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    seen = []
    assert enumerate_partitions(0, seen.append) == 1
    assert seen == [()]
    assert enumerate_partitions(7) == 15


@pytest.mark.parametrize("n", [1, 5, 12, 20])
def test_enumeration_descending_and_complete(n):
    parts = list(iter_partitions(n))
    assert parts == sorted(parts, reverse=True)
    assert sorted(parts) == sorted(brute_partitions(n))


@pytest.mark.parametrize("n", [9, 16])
def test_enumeration_split_by_first_part(n):
    pieces = [list(iter_partitions(n, a)) for a in range(n, 0, -1)]
    assert [lam for piece in pieces for lam in piece] == list(iter_partitions(n))
    for a, piece in zip(range(n, 0, -1), pieces):
        assert all(lam[0] == a for lam in piece)


def test_count_partitions_examples():
    assert count_partitions(0) == 1
    assert count_partitions(7) == 15
    assert count_partitions(100) == 190569292


def test_count_partitions_agrees_with_enumeration():
    for n in range(41):
        assert count_partitions(n) == enumerate_partitions(n)


def test_count_partitions_large_exact():
    # past the 64-bit range
    assert count_partitions(500) == coin_change_count(500)
    assert count_partitions(500) > 2 ** 64


def test_count_self_conjugate():
    assert count_self_conjugate(7) == 1
    assert count_self_conjugate(0) == 1
    assert count_self_conjugate(3) == 1
    for n in range(31):
        selfconj = [lam for lam in iter_partitions(n) if conjugate(lam) == lam]
        assert count_self_conjugate(n) == len(selfconj)
        assert sorted(iter_self_conjugate(n)) == sorted(selfconj)


def test_negative_n_rejected():
    with pytest.raises(InvalidParameter):
        count_partitions(-1)
    with pytest.raises(InvalidParameter):
        list(iter_partitions(-2))


def _check_seed(t, s):
    lam = seed_partition(t, s)
    assert t_sum(lam) == t
    assert lam.size == s
    assert conjugate(lam) != lam
    return lam


def test_seed_partition_examples():
    _check_seed(9, 8)
    assert _check_seed(9, 20) == (5, 5, 5, 5)
    with pytest.raises(InvalidParameter):
        seed_partition(9, 21)
    with pytest.raises(InvalidParameter):
        seed_partition(8, 10)
    with pytest.raises(InvalidParameter):
        seed_partition(9, 7)


def test_seed_partition_full_range():
    for t in range(3, 26, 2):
        for s in range(t - 1, (t * t - 1) // 4 + 1):
            _check_seed(t, s)
