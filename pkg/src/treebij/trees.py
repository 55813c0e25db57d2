"""Labeled and rooted trees, orientations, postorder, and tree generation.

Vertices are the integers ``1..n``. A :class:`LabeledTree` is an unrooted
edge set; a :class:`RootedTree` stores a child -> parent map and may live on
any finite vertex set (increasing trees inside a forest use subsets).

The local orientation sends every edge from its smaller endpoint to its
larger one, so the local indegree of ``v`` counts neighbours smaller than
``v``. The global orientation of a rooted tree points every edge at the root.
"""

from __future__ import annotations

import heapq
import itertools
import os
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CapacityError, InputError
from .partitions import IndegreeType

HARD_MAX_N = 10
DEFAULT_MAX_N = 8


def enumeration_cap() -> int:
    """Largest ``n`` accepted by exhaustive operations.

    Defaults to 8; ``TREEBIJ_MAX_N`` may raise it, never above 10.
    """
    raw = os.environ.get("TREEBIJ_MAX_N")
    if not raw:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"TREEBIJ_MAX_N must be an integer, got {raw!r}") from None
    return max(1, min(value, HARD_MAX_N))


def check_cap(n: int) -> None:
    cap = enumeration_cap()
    if n > cap:
        raise CapacityError(f"n={n} exceeds the enumeration cap {cap}")


@dataclass(frozen=True)
class LabeledTree:
    """Unrooted tree on ``{1..n}``. ``edges`` holds sorted ``(u, v)`` pairs with ``u < v``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise InputError("a tree needs at least one vertex")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise InputError(f"loop at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge ({u}, {v}) out of range 1..{n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        if len(norm) != n - 1 or len(set(norm)) != n - 1:
            raise InputError(f"a tree on {n} vertices has {n - 1} distinct edges, got {len(set(norm))}")
        object.__setattr__(self, "edges", tuple(norm))
        if not _connected(n, norm):
            raise InputError("edge set is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "LabeledTree":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """``adjacency[v]`` lists the neighbours of ``v`` in increasing order (index 0 unused)."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]


def _connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


class RootedTree:
    """A tree with a designated root, stored as a child -> parent map.

    The vertex set is ``parent.keys() | {root}``; for trees on ``[n]`` this
    is ``{1..n}``.
    """

    def __init__(self, root: int, parent: Mapping[int, int], validate: bool = True):
        self.root = root
        self._parent = dict(parent)
        if validate:
            self._validate()

    def _validate(self) -> None:
        root, parent = self.root, self._parent
        if root in parent:
            raise InputError(f"root {root} must not have a parent")
        verts = set(parent) | {root}
        for v, p in parent.items():
            if p not in verts:
                raise InputError(f"parent {p} of {v} is not a vertex")
        done = {root}
        for v in parent:
            path = []
            while v not in done:
                if v in path:
                    raise InputError("parent links contain a cycle")
                path.append(v)
                v = parent[v]
            done.update(path)

    @classmethod
    def on_range(cls, n: int, root: int, parent: Mapping[int, int]) -> "RootedTree":
        """Build a tree on ``{1..n}``, checking that every non-root vertex has a parent."""
        if not 1 <= root <= n:
            raise InputError(f"root {root} out of range 1..{n}")
        if set(parent) != set(range(1, n + 1)) - {root}:
            raise InputError("parent must be defined for exactly the non-root vertices")
        return cls(root, parent)

    @property
    def parent(self) -> Mapping[int, int]:
        return self._parent

    @property
    def n(self) -> int:
        return len(self._parent) + 1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set(self._parent) | {self.root}))

    @cached_property
    def _children(self) -> dict[int, tuple[int, ...]]:
        kids: dict[int, list[int]] = {v: [] for v in self.vertices}
        for c, p in self._parent.items():
            kids[p].append(c)
        return {v: tuple(sorted(k)) for v, k in kids.items()}

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def parent_of(self, v: int) -> int | None:
        return self._parent.get(v)

    def edges(self) -> list[tuple[int, int]]:
        """Directed ``(child, parent)`` pairs sorted by child."""
        return sorted(self._parent.items())

    def underlying(self) -> LabeledTree:
        """Forget the root (tree must be on ``{1..n}``)."""
        return LabeledTree(self.n, tuple(self._parent.items()))

    def _key(self):
        return self.root, frozenset(self._parent.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootedTree) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"RootedTree(root={self.root}, parent={dict(sorted(self._parent.items()))})"


def decode_classic_prufer(seq: Sequence[int], n: int) -> LabeledTree:
    """Decode a classical Prüfer sequence of length ``n - 2``.

    Repeatedly joins the smallest current leaf to the next sequence entry.
    """
    if n < 2:
        raise InputError("Prüfer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise InputError(f"sequence length must be {n - 2}, got {len(seq)}")
    degree = [1] * (n + 1)
    for x in seq:
        if not 1 <= x <= n:
            raise InputError(f"entry {x} out of range 1..{n}")
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return LabeledTree(n, tuple(edges))


def enumerate_trees(n: int) -> Iterator[LabeledTree]:
    """Yield each labeled tree on ``{1..n}`` once (via all Prüfer sequences)."""
    if n < 1:
        raise InputError("n must be positive")
    check_cap(n)
    if n == 1:
        yield LabeledTree(1, ())
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield decode_classic_prufer(seq, n)


def random_tree(n: int, seed: int) -> LabeledTree:
    """Uniform random tree from a uniform Prüfer sequence; deterministic in ``seed``."""
    if n < 1:
        raise InputError("n must be positive")
    if n == 1:
        return LabeledTree(1, ())
    rng = random.Random(seed)
    return decode_classic_prufer([rng.randint(1, n) for _ in range(n - 2)], n)


def hang_up(t: LabeledTree, r: int) -> RootedTree:
    """Root ``t`` at ``r``; every edge is oriented toward ``r``."""
    if not 1 <= r <= t.n:
        raise InputError(f"root {r} out of range 1..{t.n}")
    adj = t.adjacency
    parent: dict[int, int] = {}
    queue = deque([r])
    seen = {r}
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                queue.append(w)
    return RootedTree(r, parent, validate=False)


def local_indegrees(t: LabeledTree) -> tuple[int, ...]:
    """Entry ``v - 1`` is the number of neighbours of ``v`` smaller than ``v``."""
    deg = [0] * t.n
    for _, v in t.edges:
        deg[v - 1] += 1
    return tuple(deg)


def global_indegrees(t: RootedTree) -> dict[int, int]:
    """Number of children of each vertex."""
    return {v: len(t.children(v)) for v in t.vertices}


def local_type(t: LabeledTree) -> IndegreeType:
    return IndegreeType.from_indegrees(local_indegrees(t))


def global_type(t: RootedTree) -> IndegreeType:
    return IndegreeType.from_indegrees(global_indegrees(t).values())


def postorder(t: RootedTree) -> tuple[int, ...]:
    """Subtrees first, in ascending order of their root labels, then the root."""
    out: list[int] = []
    stack: list[tuple[int, bool]] = [(t.root, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            out.append(v)
            continue
        stack.append((v, True))
        for c in reversed(t.children(v)):
            stack.append((c, False))
    return tuple(out)


def inverse_postorder(word: Sequence[int]) -> RootedTree:
    """Rebuild the increasing tree whose postorder is ``word``.

    Each ``v_i`` becomes a child of the leftmost later entry smaller than it.
    """
    word = list(word)
    if not word:
        raise InputError("empty word")
    if len(set(word)) != len(word):
        raise InputError("word entries must be distinct")
    if word[-1] != min(word):
        raise InputError("the last entry of the word must be its minimum")
    parent: dict[int, int] = {}
    # next-smaller-to-the-right via a monotone stack
    stack: list[int] = []
    for v in reversed(word):
        while stack and stack[-1] > v:
            stack.pop()
        if stack:
            parent[v] = stack[-1]
        stack.append(v)
    return RootedTree(word[-1], parent, validate=False)


# -- text format -------------------------------------------------------------

def format_tree(t: LabeledTree | RootedTree) -> str:
    """Serialize to the line format ``n N`` / optional ``root R`` / ``u v`` edges."""
    if isinstance(t, RootedTree):
        lines = [f"n {t.n}", f"root {t.root}"]
        edges = sorted((min(c, p), max(c, p)) for c, p in t.parent.items())
    else:
        lines = [f"n {t.n}"]
        edges = list(t.edges)
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> LabeledTree | RootedTree:
    """Inverse of :func:`format_tree`. Returns a rooted tree when a ``root`` line is present."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty tree file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise InputError(f"expected 'n <n>' on line 1, got {lines[0]!r}")
    n = int(head[1])
    root = None
    body = lines[1:]
    if body and body[0].startswith("root"):
        parts = body[0].split()
        if len(parts) != 2 or not parts[1].isdigit():
            raise InputError(f"expected 'root <r>', got {body[0]!r}")
        root = int(parts[1])
        body = body[1:]
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise InputError(f"expected '<u> <v>', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    tree = LabeledTree.from_edges(n, edges)
    if root is None:
        return tree
    return hang_up(tree, root)
