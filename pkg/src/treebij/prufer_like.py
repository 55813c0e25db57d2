"""Leaf-group Prüfer-like code for rooted labeled trees.

A rooted tree on ``[n]`` with root ``r`` and ``k`` nonempty child-groups is
encoded as the set partition of ``[n] - {r}`` into child-groups together with
a ``k``-permutation ending in ``r``: the parents of the leaf-groups in the
order they are pruned, largest leaf-group (by maximal element) first.
"""

from __future__ import annotations

import heapq
from typing import Sequence

from .errors import DecodeError, InputError
from .partitions import SetPartition
from .trees import RootedTree


def child_groups(t: RootedTree) -> SetPartition:
    """The nonempty child-groups of ``t`` as a partition of the non-root vertices."""
    if t.n < 2:
        raise InputError("child groups need n >= 2")
    return SetPartition(g for v in t.vertices if (g := t.children(v)))


def leaf_group_less(a: frozenset[int] | set[int], b: frozenset[int] | set[int]) -> bool:
    """Leaf-groups compare by their maximal elements."""
    if not a or not b:
        raise InputError("leaf-groups must be nonempty")
    if max(a) == max(b):
        raise InputError("disjoint groups cannot share a maximal element")
    return max(a) < max(b)


def encode_psi(t: RootedTree) -> tuple[int, ...]:
    """Parents of the leaf-groups, in the order the largest one is pruned."""
    if t.n < 2:
        raise InputError("encoding needs n >= 2")
    groups = {v: t.children(v) for v in t.vertices if t.children(v)}
    # pending[v]: members of G_v whose own child-group is still present
    pending = {v: sum(1 for w in g if w in groups) for v, g in groups.items()}
    heap = [(-max(g), v) for v, g in groups.items() if pending[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, v = heapq.heappop(heap)
        out.append(v)
        p = t.parent_of(v)
        if p is not None:
            pending[p] -= 1
            if pending[p] == 0:
                heapq.heappush(heap, (-max(groups[p]), p))
    return tuple(out)


def encode(t: RootedTree) -> tuple[SetPartition, tuple[int, ...]]:
    return child_groups(t), encode_psi(t)


def decode(pi: SetPartition, p: Sequence[int], r: int) -> RootedTree:
    """Invert :func:`encode`.

    At step ``i`` the largest remaining block avoiding ``p_i .. p_{k-1}`` is
    joined to ``p_i``. Invalid pairs raise :class:`DecodeError`.
    """
    p = tuple(p)
    k = len(p)
    blocks = pi.ordered()
    if k == 0 or len(blocks) != k:
        raise DecodeError(f"partition has {len(blocks)} blocks but permutation has {k} entries")
    if len(set(p)) != k:
        raise DecodeError("permutation entries must be distinct")
    if p[-1] != r:
        raise DecodeError(f"permutation must end with the root {r}")
    ground = pi.ground
    n = len(ground) + 1
    if r in ground or ground != set(range(1, n + 1)) - {r}:
        raise DecodeError(f"partition must cover exactly [{n}] minus the root {r}")
    if any(not 1 <= x <= n for x in p):
        raise DecodeError(f"permutation entries must lie in 1..{n}")

    parent: dict[int, int] = {}
    remaining = list(blocks)
    # {p_i, ..., p_{k-1}} for the current step i
    forbidden = set(p[:-1])
    for i in range(k):
        for idx, block in enumerate(remaining):
            if forbidden.isdisjoint(block):
                break
        else:
            raise DecodeError("no remaining block avoids the later parents", step=i + 1)
        block = remaining.pop(idx)
        for v in block:
            parent[v] = p[i]
        forbidden.discard(p[i])
    try:
        return RootedTree(r, parent)
    except InputError as exc:
        raise DecodeError(f"result is not a tree: {exc}", step=k) from exc
