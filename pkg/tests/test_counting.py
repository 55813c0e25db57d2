from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import pytest

from treebij.counting import (Census, binomial, census, check_identity_general,
                              check_identity_second, count_k_permutations,
                              count_set_partitions_by_type, count_trees_by_type,
                              formula_census, multinomial)
from treebij.errors import CapacityError, InputError
from treebij.partitions import IndegreeType, set_partitions, types_of_weight

T = IndegreeType.parse


@lru_cache(maxsize=None)
def partitions_with_sizes(sizes: tuple[int, ...]) -> int:
    """Set partitions of a sum(sizes)-set with the given block-size multiset.

    The block holding the smallest element has some size s: choose its other
    s-1 members, then recurse on the rest.
    """
    if not sizes:
        return 1
    total = sum(sizes)
    out = 0
    for s in set(sizes):
        rest = list(sizes)
        rest.remove(s)
        out += comb(total - 1, s - 1) * partitions_with_sizes(tuple(sorted(rest)))
    return out


def test_binomial_convention():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(-1, 0) == 0
    assert binomial(0, 0) == 1


def test_multinomial():
    assert multinomial(4, (2, 1, 1)) == 12
    with pytest.raises(InputError):
        multinomial(4, (2, 1))


@pytest.mark.parametrize("n,lam,count", [(4, "1^1 2^1", 9), (4, "1^3", 6), (4, "3^1", 1),
                                         (5, "2^2", 12), (2, "1^1", 1), (1, "", 1)])
def test_count_trees_by_type(n, lam, count):
    assert count_trees_by_type(n, T(lam)) == count


def test_count_trees_by_type_rejects_weight():
    with pytest.raises(InputError):
        count_trees_by_type(4, T("1^2"))


def test_count_trees_sum_to_cayley():
    for n in range(2, 11):
        assert sum(count_trees_by_type(n, lam) for lam in types_of_weight(n - 1)) == n ** (n - 2)


@pytest.mark.parametrize("n,lam,count", [(4, "1^1 2^1", 3), (4, "1^3", 1)])
def test_count_set_partitions_small(n, lam, count):
    assert count_set_partitions_by_type(n, T(lam)) == count


def test_count_set_partitions_against_generator():
    for n in range(2, 8):
        tally = Counter(pi.type() for pi in set_partitions(list(range(2, n + 1))))
        for lam in types_of_weight(n - 1):
            assert count_set_partitions_by_type(n, lam) == tally.get(lam, 0)


def test_count_set_partitions_n14():
    lam = T("1^2 2^2 3^1 4^1")
    assert count_set_partitions_by_type(14, lam) == partitions_with_sizes(tuple(sorted(lam.parts)))
    assert count_set_partitions_by_type(14, lam) == 2702700  # 13!/(2! 2! 2^2 3! 4!)


@pytest.mark.parametrize("n,k,count", [(14, 6, 154440), (9, 1, 1), (5, 5, 24)])
def test_count_k_permutations(n, k, count):
    assert count_k_permutations(n, k) == count


@pytest.mark.parametrize("k", [0, 6])
def test_count_k_permutations_range(k):
    with pytest.raises(InputError):
        count_k_permutations(5, k)


def test_census_n4():
    cen = census(4, "local")
    assert cen.counts == {T("1^3"): 6, T("1^1 2^1"): 9, T("3^1"): 1}
    assert cen.total == 16
    assert cen.to_json() == {"n": 4, "variant": "local", "counts": [
        {"type": "3^1", "count": "1"}, {"type": "1^1 2^1", "count": "9"},
        {"type": "1^3", "count": "6"}], "total": "16"}


def test_census_n2_and_rooted_json():
    assert census(2, "local").counts == {T("1^1"): 1}
    js = census(3, "global", root=2).to_json()
    assert js["root"] == 2 and js["total"] == "3"


def test_census_errors(monkeypatch):
    monkeypatch.delenv("TREEBIJ_MAX_N", raising=False)
    with pytest.raises(CapacityError):
        census(9, "local")
    with pytest.raises(InputError):
        census(4, "sideways")


@pytest.mark.parametrize("n", range(2, 7))
def test_census_matches_formula_and_factorization(n):
    want = {k: v for k, v in formula_census(n).items() if v}
    assert census(n, "local").counts == want
    for r in range(1, n + 1):
        assert census(n, "global", root=r).counts == want
    for lam, c in formula_census(n).items():
        assert c == count_set_partitions_by_type(n, lam) * count_k_permutations(n, lam.length)


def second_oracle(n):
    """Direct evaluation with rational arithmetic and independent factorial code."""
    total = Fraction(0)
    for lam in types_of_weight(n - 1):
        e0 = n - lam.length
        denom = factorial(e0)
        for i in range(1, lam.weight + 1):
            denom *= factorial(lam.e(i))
        inner = sum(lam.e(i) * comb(i + 1, 2) for i in range(1, lam.weight + 1))
        total += Fraction(factorial(n - 1) * inner, denom)
    return total


def test_identity_second():
    assert check_identity_second(4) == (21, 21)
    assert check_identity_second(2) == (1, 1)
    for n in range(2, 11):
        assert check_identity_second(n) == (comb(2 * n - 1, n - 2),) * 2
    assert check_identity_second(1) == (0, 0)
    assert check_identity_second(10) == (75582, 75582)


def test_identity_second_oracle():
    for n in range(2, 9):
        assert check_identity_second(n)[0] == second_oracle(n)


def test_identity_general_grid():
    for m in range(1, 9):
        for n in range(1, 9):
            for p in range(4):
                for l in range(4):
                    lhs, rhs = check_identity_general(m, n, p, l)
                    assert lhs == rhs, (m, n, p, l)


def test_identity_general_small_cases():
    assert check_identity_general(2, 2, 0, 0) == (4, 4)
    for n in range(1, 6):
        assert check_identity_general(1, n, 0, 0) == (n, n)
        assert check_identity_general(1, n, 2, 1) == (0, 0)


def test_general_specializes_to_second():
    # with m = n, p = 2, l = 1 the general sum is n times the second one
    for n in range(1, 9):
        assert check_identity_general(n, n, 2, 1)[0] == n * check_identity_second(n)[0]


def test_census_ordered():
    cen = Census(3, "local", None, {T("1^2"): 2, T("2^1"): 1})
    assert [str(lam) for lam, _ in cen.ordered()] == ["2^1", "1^2"]
