import itertools

import pytest
from hypothesis import given, settings, strategies as st

from treebij.counting import count_k_permutations, count_set_partitions_by_type
from treebij.errors import DecodeError, InputError
from treebij.partitions import SetPartition, set_partitions
from treebij.prufer_like import child_groups, decode, encode, encode_psi, leaf_group_less
from treebij.trees import RootedTree, enumerate_trees, global_type, hang_up, random_tree

T0_GROUPS = SetPartition([[1, 6, 13, 14], [3, 7], [2, 11], [5, 9, 12], [10], [8]])


def test_child_groups_t0(t0):
    assert child_groups(t0) == T0_GROUPS
    assert child_groups(t0).type() == global_type(t0)


def test_child_groups_small():
    star = RootedTree(3, {1: 3, 2: 3, 4: 3})
    assert child_groups(star) == SetPartition([[1, 2, 4]])
    path = RootedTree(3, {1: 2, 2: 3})
    assert child_groups(path) == SetPartition([[1], [2]])


def test_leaf_group_less():
    assert leaf_group_less({2, 11}, {5, 9, 12})
    assert not leaf_group_less({5, 9, 12}, {2, 11})
    assert leaf_group_less({1}, {2})
    assert leaf_group_less({3, 7}, {10})
    with pytest.raises(InputError):
        leaf_group_less({1, 4}, {4})


def test_encode_psi():
    assert encode_psi(RootedTree(3, {1: 3, 2: 3, 4: 3})) == (3,)
    assert encode_psi(RootedTree(3, {1: 2, 2: 3})) == (2, 3)


def test_encode_t0(t0):
    assert encode_psi(t0) == (10, 8, 13, 14, 6, 4)
    assert encode(t0) == (T0_GROUPS, (10, 8, 13, 14, 6, 4))


def test_decode_t0(t0):
    assert decode(T0_GROUPS, (10, 8, 13, 14, 6, 4), 4) == t0


def test_decode_star():
    assert decode(SetPartition([[1, 2, 4, 5]]), (3,), 3) == RootedTree(3, {v: 3 for v in (1, 2, 4, 5)})


@pytest.mark.parametrize("pi,p,r", [
    (SetPartition([[1], [2]]), (3,), 3),           # k mismatch
    (SetPartition([[1], [2]]), (1, 2), 3),         # p_k != r
    (SetPartition([[1], [3]]), (1, 3), 3),         # ground contains r
    (SetPartition([[1], [2]]), (3, 3), 3),         # repeated entries
])
def test_decode_rejects_malformed(pi, p, r):
    with pytest.raises(DecodeError):
        decode(pi, p, r)


def test_every_well_formed_pair_decodes():
    # a failing step would raise DecodeError carrying its index; for well-formed pairs none fails
    failures = 0
    for pi in set_partitions([1, 2, 3]):
        for p in itertools.permutations([1, 2, 3, 4], len(pi)):
            if p[-1] != 4:
                continue
            try:
                t = decode(pi, p, 4)
            except DecodeError as exc:
                failures += 1
                assert exc.step is not None and 1 <= exc.step <= len(pi)
            else:
                assert encode(t) == (pi, p)
    assert failures == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_decode_encode_exhaustive(n):
    for t in enumerate_trees(n):
        for r in range(1, n + 1):
            rooted = hang_up(t, r)
            pi, p = encode(rooted)
            assert pi.type() == global_type(rooted)
            assert p[-1] == r and len(p) == len(pi)
            assert decode(pi, p, r) == rooted


def test_n5_k2_pairs_decode_to_distinct_trees():
    r = 5
    trees = set()
    pairs = 0
    for pi in set_partitions([1, 2, 3, 4], 2):
        for head in range(1, 5):
            pairs += 1
            trees.add(decode(pi, (head, r), r))
    assert len(trees) == pairs == 7 * 4
    want = sum(count_set_partitions_by_type(5, lam) for lam in {pi.type() for pi in set_partitions([1, 2, 3, 4], 2)})
    assert want * count_k_permutations(5, 2) == pairs


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.integers(0, 2**32), st.data())
def test_roundtrip_random_large(n, seed, data):
    r = data.draw(st.integers(1, n))
    rooted = hang_up(random_tree(n, seed), r)
    pi, p = encode(rooted)
    assert decode(pi, p, r) == rooted
