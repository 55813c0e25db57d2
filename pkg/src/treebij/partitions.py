"""Integer partitions, indegree types and set partitions.

Integer partitions are plain tuples of positive parts in weakly decreasing
order. :class:`IndegreeType` wraps the multiplicity form ``1^e1 2^e2 ...``
used for tree types, and :class:`SetPartition` is an immutable collection of
disjoint blocks.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InputError

Partition = tuple  # tuple[int, ...], weakly decreasing, positive parts


def partitions(n: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of ``n`` in descending lexicographic order.

    ``max_len`` bounds the number of parts and ``max_part`` the largest part.
    """
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest: int, bound: int, slots: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield tuple(prefix)
            return
        if slots == 0 or bound * slots < rest:
            return
        for part in range(min(rest, bound), 0, -1):
            prefix.append(part)
            yield from rec(rest - part, part, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, max_part, max_len, [])


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the Ferrers diagram."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def n_lambda(parts: Sequence[int]) -> int:
    """``n(lambda) = sum_i C(lambda'_i, 2)``."""
    return sum(comb(c, 2) for c in conjugate(parts))


_TYPE_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


@dataclass(frozen=True, order=True)
class IndegreeType:
    """A partition stored as multiplicities ``(e_1, e_2, ...)``.

    Trailing zeros are trimmed so that equal partitions compare equal.
    """

    multiplicities: tuple[int, ...] = ()

    def __post_init__(self):
        mult = tuple(int(e) for e in self.multiplicities)
        if any(e < 0 for e in mult):
            raise InputError(f"negative multiplicity in {mult}")
        while mult and mult[-1] == 0:
            mult = mult[:-1]
        object.__setattr__(self, "multiplicities", mult)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "IndegreeType":
        counts = Counter(parts)
        if any(p <= 0 for p in counts):
            raise InputError("parts must be positive")
        top = max(counts, default=0)
        return cls(tuple(counts.get(i, 0) for i in range(1, top + 1)))

    @classmethod
    def from_indegrees(cls, degrees: Iterable[int]) -> "IndegreeType":
        """Tabulate a degree list, discarding zeros."""
        return cls.from_parts(d for d in degrees if d > 0)

    @classmethod
    def parse(cls, text: str) -> "IndegreeType":
        """Parse ``"1^7 2^1 3^2"``. The empty string is the empty partition."""
        mult: dict[int, int] = {}
        for token in text.split():
            m = _TYPE_TOKEN.match(token)
            if not m:
                raise InputError(f"bad type token {token!r}")
            part, e = int(m.group(1)), int(m.group(2))
            if part <= 0:
                raise InputError(f"bad type token {token!r}")
            mult[part] = mult.get(part, 0) + e
        top = max(mult, default=0)
        return cls(tuple(mult.get(i, 0) for i in range(1, top + 1)))

    def e(self, i: int) -> int:
        """Multiplicity of part ``i`` (``i >= 1``)."""
        return self.multiplicities[i - 1] if 1 <= i <= len(self.multiplicities) else 0

    def e0(self, n: int) -> int:
        """Number of indegree-zero vertices of a tree on ``n`` vertices."""
        return n - self.length

    @property
    def weight(self) -> int:
        return sum(i * e for i, e in enumerate(self.multiplicities, start=1))

    @property
    def length(self) -> int:
        return sum(self.multiplicities)

    @property
    def parts(self) -> tuple[int, ...]:
        out: list[int] = []
        for i in range(len(self.multiplicities), 0, -1):
            out.extend([i] * self.multiplicities[i - 1])
        return tuple(out)

    def conjugate(self) -> tuple[int, ...]:
        return conjugate(self.parts)

    def n_lambda(self) -> int:
        return n_lambda(self.parts)

    def __str__(self) -> str:
        return " ".join(f"{i}^{e}" for i, e in enumerate(self.multiplicities, start=1) if e)


def types_of_weight(n: int, max_len: int | None = None) -> list[IndegreeType]:
    """All partitions of ``n`` as types, descending lexicographic on parts."""
    return [IndegreeType.from_parts(p) for p in partitions(n, max_len=max_len)]


class SetPartition:
    """An immutable set partition; blocks are frozensets of vertices."""

    __slots__ = ("blocks",)

    def __init__(self, blocks: Iterable[Iterable[int]]):
        frozen = frozenset(frozenset(b) for b in blocks)
        seen: set[int] = set()
        for b in frozen:
            if not b:
                raise InputError("empty block")
            if seen & b:
                raise InputError("blocks are not disjoint")
            seen |= b
        self.blocks = frozen

    @property
    def ground(self) -> frozenset[int]:
        return frozenset().union(*self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.ordered())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({self})"

    def ordered(self) -> list[frozenset[int]]:
        """Blocks sorted by maximal element, largest first."""
        return sorted(self.blocks, key=max, reverse=True)

    def type(self) -> IndegreeType:
        return IndegreeType.from_parts(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, sorted(b))) for b in self.ordered())

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse slash notation, e.g. ``"1 8 9/4 10 12/2 5/3"``."""
        blocks = []
        for chunk in text.split("/"):
            try:
                members = [int(tok) for tok in chunk.replace(",", " ").split()]
            except ValueError as exc:
                raise InputError(f"bad partition block {chunk!r}") from exc
            if not members:
                raise InputError(f"empty block in {text!r}")
            if len(set(members)) != len(members):
                raise InputError(f"repeated member in block {chunk!r}")
            blocks.append(members)
        return cls(blocks)


def set_partitions(elements: Sequence[int], k: int | None = None) -> Iterator[SetPartition]:
    """Yield every set partition of ``elements`` (optionally with exactly ``k`` blocks).

    Generated through restricted growth strings, so each partition appears once.
    """
    elements = list(elements)
    size = len(elements)
    if size == 0:
        if k in (None, 0):
            yield SetPartition([])
        return
    rgs = [0] * size

    def rec(pos: int, nblocks: int) -> Iterator[SetPartition]:
        if k is not None and nblocks + (size - pos) < k:
            return
        if pos == size:
            if k is None or nblocks == k:
                groups: list[list[int]] = [[] for _ in range(nblocks)]
                for elem, label in zip(elements, rgs):
                    groups[label].append(elem)
                yield SetPartition(groups)
            return
        for label in range(nblocks + 1):
            if k is not None and label == nblocks and nblocks == k:
                break
            rgs[pos] = label
            yield from rec(pos + 1, max(nblocks, label + 1))

    yield from rec(0, 0)
