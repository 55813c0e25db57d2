"""Exact counting formulas for trees by indegree type, and enumeration censuses."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from .errors import InputError
from .partitions import IndegreeType, partitions
from .trees import check_cap, enumerate_trees, global_type, hang_up, local_type

VARIANTS = ("local", "global")


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, zero when ``b < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def multinomial(n: int, parts) -> int:
    parts = list(parts)
    if any(e < 0 for e in parts) or sum(parts) != n:
        raise InputError(f"multinomial parts {parts} do not sum to {n}")
    return factorial(n) // prod(factorial(e) for e in parts)


def _check_weight(n: int, lam: IndegreeType) -> None:
    if n < 1:
        raise InputError("n must be positive")
    if lam.weight != n - 1:
        raise InputError(f"type {lam} has weight {lam.weight}, expected {n - 1}")


def count_trees_by_type(n: int, lam: IndegreeType) -> int:
    """``(n-1)!^2 / (e_0! 0!^e_0 e_1! 1!^e_1 ...)`` with ``e_0 = n - l(lambda)``."""
    _check_weight(n, lam)
    e0 = lam.e0(n)
    if e0 <= 0:
        return 0
    denom = factorial(e0)
    for i, e in enumerate(lam.multiplicities, start=1):
        denom *= factorial(e) * factorial(i) ** e
    num = factorial(n - 1) ** 2
    assert num % denom == 0
    return num // denom


def count_set_partitions_by_type(n: int, lam: IndegreeType) -> int:
    """Set partitions of an ``(n-1)``-set with block sizes ``lam``."""
    _check_weight(n, lam)
    denom = 1
    for i, e in enumerate(lam.multiplicities, start=1):
        denom *= factorial(e) * factorial(i) ** e
    return factorial(n - 1) // denom


def count_k_permutations(n: int, k: int) -> int:
    """``k``-permutations of ``[n]`` with a fixed last entry: ``(n-1)!/(n-k)!``."""
    if not 1 <= k <= n:
        raise InputError(f"k={k} out of range 1..{n}")
    return factorial(n - 1) // factorial(n - k)


@dataclass
class Census:
    """Tree counts per indegree type for one ``n``."""

    n: int
    variant: str
    root: int | None = None
    counts: dict[IndegreeType, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def ordered(self) -> list[tuple[IndegreeType, int]]:
        """Counts in descending lexicographic order of the partitions."""
        return sorted(self.counts.items(), key=lambda kv: kv[0].parts, reverse=True)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "variant": self.variant,
            "counts": [{"type": str(lam), "count": str(c)} for lam, c in self.ordered()],
            "total": str(self.total),
        }
        if self.root is not None:
            out["root"] = self.root
        return out


def census(n: int, variant: str = "local", root: int = 1) -> Census:
    """Tabulate local types of all trees, or global types of all trees hung at ``root``."""
    if variant not in VARIANTS:
        raise InputError(f"variant must be one of {VARIANTS}, not {variant!r}")
    if n < 1:
        raise InputError("n must be positive")
    check_cap(n)
    if variant == "local":
        counts = Counter(local_type(t) for t in enumerate_trees(n))
        return Census(n, variant, None, dict(counts))
    if not 1 <= root <= n:
        raise InputError(f"root {root} out of range 1..{n}")
    counts = Counter(global_type(hang_up(t, root)) for t in enumerate_trees(n))
    return Census(n, variant, root, dict(counts))


def formula_census(n: int) -> dict[IndegreeType, int]:
    """Closed-form counts for every partition of ``n - 1``."""
    return {IndegreeType.from_parts(p): count_trees_by_type(n, IndegreeType.from_parts(p))
            for p in partitions(n - 1)}


def check_identity_second(n: int) -> tuple[int, int]:
    """Both sides of
    ``sum_lambda (n-1)!/(e_0! e_1! ...) * sum_i e_i C(i+1, 2) = C(2n-1, n-2)``.
    """
    if n < 1:
        raise InputError("n must be positive")
    # (n-1)!/prod(e_i!) is not a multinomial coefficient (the e_i sum to n); keep it exact
    lhs = Fraction(0)
    for parts in partitions(n - 1, max_len=n):
        lam = IndegreeType.from_parts(parts)
        mult = (lam.e0(n),) + lam.multiplicities
        inner = sum(e * comb(i + 1, 2) for i, e in enumerate(mult))
        lhs += Fraction(factorial(n - 1), prod(factorial(e) for e in mult)) * inner
    if lhs.denominator != 1:
        return lhs, binomial(2 * n - 1, n - 2)
    return int(lhs), binomial(2 * n - 1, n - 2)


def check_identity_general(m: int, n: int, p: int, l: int) -> tuple[int, int]:
    """Both sides of
    ``sum_lambda C(n; e_0, e_1, ...) sum_i e_i C(i+p-l, p) = n C(n+m-2+p-l, n-1+p)``
    over partitions ``lambda`` of ``m-1`` with at most ``n`` parts.
    """
    if m < 1 or n < 1 or p < 0 or l < 0:
        raise InputError("need m, n >= 1 and p, l >= 0")
    lhs = 0
    for parts in partitions(m - 1, max_len=n):
        lam = IndegreeType.from_parts(parts)
        mult = (n - lam.length,) + lam.multiplicities
        inner = sum(e * binomial(i + p - l, p) for i, e in enumerate(mult))
        lhs += multinomial(n, mult) * inner
    return lhs, n * binomial(n + m - 2 + p - l, n - 1 + p)
