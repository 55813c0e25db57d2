import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from treebij.errors import InputError
from treebij.partitions import (IndegreeType, SetPartition, conjugate, n_lambda,
                                partitions, set_partitions, types_of_weight)

# Bell numbers, independent of the generator
BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def test_partitions_order_and_count():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]
    assert [len(list(partitions(k))) for k in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_partitions_bounds():
    assert list(partitions(5, max_len=2)) == [(5,), (4, 1), (3, 2)]
    assert list(partitions(5, max_part=2)) == [(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


@pytest.mark.parametrize("parts,conj,nl", [((2,), (1, 1), 0), ((1, 1), (2,), 1),
                                            ((3, 2, 2, 1), (4, 3, 1), 9), ((), (), 0)])
def test_conjugate_and_n_lambda(parts, conj, nl):
    assert conjugate(parts) == conj
    assert n_lambda(parts) == nl


@given(st.lists(st.integers(1, 9), max_size=8).map(lambda xs: tuple(sorted(xs, reverse=True))))
def test_conjugation_is_an_involution(parts):
    c = conjugate(parts)
    assert conjugate(c) == parts
    assert sum(c) == sum(parts)
    assert (c[0] if c else 0) == len(parts)
    # n(lambda) = sum_i (i-1) lambda_i
    assert n_lambda(parts) == sum(k * x for k, x in enumerate(parts))
    assert n_lambda(parts) == sum(comb(x, 2) for x in c)


def test_indegree_type_parse_and_render():
    lam = IndegreeType.parse("1^7 2^1 3^2")
    assert lam.parts == (3, 3, 2, 1, 1, 1, 1, 1, 1, 1)
    assert lam.weight == 15 and lam.length == 10
    assert lam.e(1) == 7 and lam.e(3) == 2 and lam.e(4) == 0
    assert lam.e0(16) == 6
    assert str(lam) == "1^7 2^1 3^2"
    assert IndegreeType.from_parts((3, 1)) == IndegreeType.parse("1^1 3^1")
    assert str(IndegreeType.parse("")) == ""


def test_indegree_type_constructors_agree():
    assert IndegreeType.from_indegrees((0, 1, 0, 2, 1)) == IndegreeType.from_parts((2, 1, 1))


@pytest.mark.parametrize("bad", ["1^x", "0^2", "-1", "2^-1"])
def test_indegree_type_parse_rejects(bad):
    with pytest.raises(InputError):
        IndegreeType.parse(bad)


def test_types_of_weight():
    assert [str(t) for t in types_of_weight(3)] == ["3^1", "1^1 2^1", "1^3"]
    assert len(types_of_weight(3, max_len=2)) == 2


def test_set_partition_basics():
    pi = SetPartition([[1, 6, 13, 14], [3, 7], [2, 11], [5, 9, 12], [10], [8]])
    assert pi.ground == frozenset({1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14})
    assert len(pi) == 6
    assert str(pi) == "1 6 13 14/5 9 12/2 11/10/8/3 7"
    assert SetPartition.parse(str(pi)) == pi
    assert SetPartition.parse("1,6,13,14 / 3,7 / 2,11 / 5,9,12 / 10 / 8") == pi
    assert pi.type() == IndegreeType.parse("1^2 2^2 3^1 4^1")


@pytest.mark.parametrize("blocks", [[[1, 2], [2, 3]], [[1], []]])
def test_set_partition_rejects(blocks):
    with pytest.raises(InputError):
        SetPartition(blocks)


@pytest.mark.parametrize("n", range(0, 8))
def test_set_partition_counts_are_bell(n):
    got = list(set_partitions(list(range(1, n + 1))))
    assert len(got) == BELL[n] == len(set(got))


def test_set_partitions_with_k_blocks():
    # Stirling numbers of the second kind S(5, k)
    assert [len(list(set_partitions(range(1, 6), k))) for k in range(1, 6)] == [1, 15, 25, 10, 1]


def test_set_partitions_brute_force_oracle():
    elems = [2, 4, 7, 9]
    # each partition corresponds to a block label assignment up to relabeling
    seen = set()
    for labels in itertools.product(range(4), repeat=4):
        blocks = {}
        for e, lab in zip(elems, labels):
            blocks.setdefault(lab, set()).add(e)
        seen.add(SetPartition(blocks.values()))
    assert seen == set(set_partitions(elems))
