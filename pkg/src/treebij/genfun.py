"""Multivariate generating function of trees by local indegrees.

``P_n = sum_T prod_i x_i^indeg(i) = x_n prod_{i=2}^{n-1} (i x_i + x_{i+1} + ... + x_n)``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Iterable, Mapping

from .errors import InputError
from .partitions import IndegreeType
from .trees import check_cap, enumerate_trees, local_indegrees


class MultiPoly:
    """Sparse polynomial in ``x_1..x_n``: exponent tuple of length ``n`` -> coefficient."""

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise InputError(f"exponent vector {exps} should have length {nvars}")
            acc[exps] += c
        self.terms = {e: c for e, c in acc.items() if c}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if self.nvars != other.nvars:
            raise InputError("variable counts differ")
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                acc[tuple(a + b for a, b in zip(ea, eb))] += ca * cb
        return MultiPoly(self.nvars, acc)

    def total(self) -> int:
        """Value with every variable set to 1."""
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coefficient": str(c)} for e, c in self.sorted_terms()]

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {dict(self.sorted_terms())})"


def _unit(n: int, j: int) -> tuple[int, ...]:
    e = [0] * n
    e[j - 1] = 1
    return tuple(e)


def expand_product(n: int) -> MultiPoly:
    """Expand the product form of ``P_n``, factors multiplied in ascending ``i``."""
    if n < 2:
        raise InputError("the product form needs n >= 2")
    poly = MultiPoly(n, {_unit(n, n): 1})
    for i in range(2, n):
        factor = {_unit(n, i): i}
        factor.update({_unit(n, j): 1 for j in range(i + 1, n + 1)})
        poly = poly * MultiPoly(n, factor)
    return poly


def genfun_from_enumeration(n: int) -> MultiPoly:
    """Sum of ``x^indeg(T)`` over all labeled trees on ``[n]``."""
    if n < 1:
        raise InputError("n must be positive")
    check_cap(n)
    return MultiPoly(n, Counter(local_indegrees(t) for t in enumerate_trees(n)))


def monomial_type(exps: Iterable[int]) -> IndegreeType:
    return IndegreeType.from_indegrees(exps)


def type_coefficient_sum(n: int, lam: IndegreeType, poly: MultiPoly | None = None) -> int:
    """Sum of the coefficients of ``P_n`` over monomials of type ``lam``."""
    if lam.weight != n - 1:
        raise InputError(f"type {lam} has weight {lam.weight}, expected {n - 1}")
    if poly is None:
        poly = expand_product(n)
    return sum(c for e, c in poly.terms.items() if monomial_type(e) == lam)


def type_sums(poly: MultiPoly) -> dict[IndegreeType, int]:
    """Coefficient sums of ``poly`` grouped by monomial type."""
    out: dict[IndegreeType, int] = defaultdict(int)
    for e, c in poly.terms.items():
        out[monomial_type(e)] += c
    return dict(out)
