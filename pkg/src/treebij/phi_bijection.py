"""The bijection Phi_r from unrooted trees to trees rooted at ``r``.

Phi_r carries the local indegree type of a tree to the global indegree type
of its image. Forward direction:

1. hang the tree at ``r`` and cut every *good* edge (child < parent); the
   remaining *bad* edges form increasing trees, the cut edges a column
   matrix ``D`` of ``(top=parent, bottom=child)`` pairs;
2. read each increasing tree in postorder, giving a chain and a cycle of the
   permutation ``sigma``;
3. hang each chain root ``i`` below ``sigma(j)`` for every column ``(j, i)``.

The inverse cuts the *proper* edges (non-eldest or minimal), undoes
``sigma`` on the cut matrix and rebuilds the increasing trees from the
chains by the inverse of postorder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import AssemblyError, InputError, InvariantError
from .partitions import SetPartition
from .trees import LabeledTree, RootedTree, hang_up, inverse_postorder, postorder


@dataclass(frozen=True)
class EdgeMatrix:
    """Two-row matrix of cut edges; each column is ``(top, bottom)`` for an edge bottom -> top.

    Columns are kept in canonical ``(top, bottom)`` order.
    """

    columns: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(sorted((int(j), int(i)) for j, i in self.columns)))

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.columns)

    @property
    def bottoms(self) -> tuple[int, ...]:
        return tuple(i for _, i in self.columns)

    def map_tops(self, perm: Mapping[int, int]) -> "EdgeMatrix":
        """Apply ``perm`` to the top row (vertices missing from ``perm`` are fixed)."""
        return EdgeMatrix(tuple((perm.get(j, j), i) for j, i in self.columns))

    def __len__(self) -> int:
        return len(self.columns)


IncreasingForest = tuple  # tuple[RootedTree, ...] sorted by root
LinearForest = tuple  # tuple[tuple[int, ...], ...]; each word ends at its minimum


def _sorted_words(words: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(w) for w in words), key=lambda w: w[-1]))


def cycle_permutation(words: Iterable[Sequence[int]]) -> dict[int, int]:
    """The product of the cycles ``(v_1, ..., v_l)``: ``v_t -> v_{t+1}`` and ``v_l -> v_1``."""
    sigma: dict[int, int] = {}
    for w in words:
        for a, b in zip(w, w[1:]):
            sigma[a] = b
        sigma[w[-1]] = w[0]
    return sigma


def invert(perm: Mapping[int, int]) -> dict[int, int]:
    return {b: a for a, b in perm.items()}


def nontrivial_cycles(words: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    return [tuple(w) for w in words if len(w) > 1]


def classify_edges(t: RootedTree) -> dict[int, str]:
    """Label the edge above each non-root vertex ``"good"`` (child < parent) or ``"bad"``."""
    return {c: ("good" if c < p else "bad") for c, p in t.parent.items()}


def cut_good_edges(t: LabeledTree, r: int) -> tuple[IncreasingForest, EdgeMatrix]:
    """Hang ``t`` at ``r`` and remove the good edges.

    Returns the increasing trees (sorted by root) and the matrix ``D`` of
    cut edges.
    """
    hung = hang_up(t, r)
    columns = []
    bad_parent: dict[int, int] = {}
    for c, p in hung.parent.items():
        if c < p:
            columns.append((p, c))
        else:
            bad_parent[c] = p
    roots = sorted([r] + [c for _, c in columns])
    members: dict[int, dict[int, int]] = {root: {} for root in roots}
    top_of: dict[int, int] = {root: root for root in roots}

    def component_root(v: int) -> int:
        path = []
        while v not in top_of:
            path.append(v)
            v = bad_parent[v]
        root = top_of[v]
        for u in path:
            top_of[u] = root
        return root

    for c, p in bad_parent.items():
        members[component_root(c)][c] = p
    forest = tuple(RootedTree(root, members[root], validate=False) for root in roots)
    return forest, EdgeMatrix(tuple(columns))


def linearize(forest: Iterable[RootedTree]) -> tuple[LinearForest, dict[int, int]]:
    """Read each increasing tree in postorder; return the chains and ``sigma``."""
    words = _sorted_words(postorder(tree) for tree in forest)
    return words, cycle_permutation(words)


def assemble(chains: Iterable[Sequence[int]], matrix: EdgeMatrix, r: int) -> RootedTree:
    """Join the chains ``v_1 -> ... -> v_l`` with one edge ``bottom -> top`` per column."""
    parent: dict[int, int] = {}
    vertices: set[int] = set()
    for w in chains:
        vertices.update(w)
        for a, b in zip(w, w[1:]):
            parent[a] = b
    for top, bottom in matrix.columns:
        if bottom in parent:
            raise AssemblyError(f"vertex {bottom} would get two parents")
        parent[bottom] = top
    if r not in vertices or r in parent or set(parent) != vertices - {r}:
        raise AssemblyError(f"assembled graph is not a tree rooted at {r}")
    try:
        return RootedTree(r, parent)
    except InputError as exc:
        raise AssemblyError(str(exc)) from exc


@dataclass(frozen=True)
class PhiTrace:
    """Intermediate data of one forward (or inverse) run."""

    d_matrix: EdgeMatrix
    sigma: dict[int, int]
    chains: LinearForest
    p_matrix: EdgeMatrix
    rooted: RootedTree
    unrooted: LabeledTree

    @property
    def cycles(self) -> list[tuple[int, ...]]:
        return nontrivial_cycles(self.chains)


def phi_trace(t: LabeledTree, r: int) -> PhiTrace:
    forest, d = cut_good_edges(t, r)
    chains, sigma = linearize(forest)
    sd = d.map_tops(sigma)
    return PhiTrace(d, sigma, chains, sd, assemble(chains, sd, r), t)


def phi(t: LabeledTree, r: int) -> RootedTree:
    """Image of ``t`` under Phi_r; local type of ``t`` equals global type of the result."""
    return phi_trace(t, r).rooted


@dataclass(frozen=True)
class EdgeClass:
    eldest: bool
    minimal: bool

    @property
    def proper(self) -> bool:
        return not self.eldest or self.minimal


def _eldest_chains(t: RootedTree) -> list[list[int]]:
    """Chains of the forest left after deleting every non-eldest edge, leaf first."""
    eldest_child = {v: kids[-1] for v in t.vertices if (kids := t.children(v))}
    chains = []
    for v in t.vertices:
        if v in eldest_child:
            continue
        chain = [v]
        while True:
            p = t.parent_of(chain[-1])
            if p is None or eldest_child[p] != chain[-1]:
                break
            chain.append(p)
        chains.append(chain)
    return chains


def classify_proper_edges(t: RootedTree) -> dict[int, EdgeClass]:
    """Classify the edge above each non-root vertex as eldest and/or minimal."""
    out: dict[int, EdgeClass] = {}
    for chain in _eldest_chains(t):
        running_min = chain[-1]
        for idx in range(len(chain) - 2, -1, -1):
            v = chain[idx]
            out[v] = EdgeClass(eldest=True, minimal=v < running_min)
            running_min = min(running_min, v)
    for c in t.parent:
        if c not in out:
            out[c] = EdgeClass(eldest=False, minimal=False)
    return out


def cut_proper_edges(t: RootedTree) -> tuple[LinearForest, EdgeMatrix]:
    """Remove proper edges; return the improper chains and the matrix ``P`` of cut edges."""
    classes = classify_proper_edges(t)
    columns = []
    up: dict[int, int] = {}
    for c, p in t.parent.items():
        if classes[c].proper:
            columns.append((p, c))
        else:
            up[c] = p
    has_child = set(up.values())
    words = []
    for v in t.vertices:
        if v in has_child:
            continue
        word = [v]
        while word[-1] in up:
            word.append(up[word[-1]])
        words.append(word)
    return _sorted_words(words), EdgeMatrix(tuple(columns))


def phi_inverse_trace(t: RootedTree) -> PhiTrace:
    chains, p_matrix = cut_proper_edges(t)
    sigma = cycle_permutation(chains)
    d = p_matrix.map_tops(invert(sigma))
    for top, bottom in d.columns:
        if not bottom < top:
            raise InvariantError(f"column ({top}, {bottom}) of sigma^-1(P) is not decreasing")
    edges = [(bottom, top) for top, bottom in d.columns]
    for w in chains:
        try:
            tree = inverse_postorder(w)
        except InputError as exc:
            raise InvariantError(f"chain {w} does not end at its minimum") from exc
        edges.extend(tree.parent.items())
    return PhiTrace(d, sigma, chains, p_matrix, t, LabeledTree.from_edges(t.n, edges))


def phi_inverse(t: RootedTree) -> LabeledTree:
    """Preimage of the rooted tree ``t`` under Phi_{root(t)}."""
    return phi_inverse_trace(t).unrooted


def sibship(t: RootedTree, v: int, orientation: str) -> frozenset[int]:
    """Labels of the edges pointing at ``v``; an edge is labelled by its child endpoint.

    ``orientation="global"`` gives the children of ``v``. ``"local"`` reads
    ``t`` as a tree hung at its root and collects the edges ``{v, w}`` with
    ``w < v``.
    """
    if v not in t.vertices:
        raise InputError(f"{v} is not a vertex")
    if orientation == "global":
        return frozenset(t.children(v))
    if orientation == "local":
        labels = {w for w in t.children(v) if w < v}
        p = t.parent_of(v)
        if p is not None and p < v:
            labels.add(v)
        return frozenset(labels)
    raise InputError(f"orientation must be 'local' or 'global', not {orientation!r}")


def edge_label_partition(t: LabeledTree | RootedTree, r: int, orientation: str) -> SetPartition:
    """Nonempty sibships of a tree hung at ``r``, as a partition of ``[n] - {r}``."""
    if isinstance(t, LabeledTree):
        if t.n < 2:
            raise InputError("edge labels need n >= 2")
        rooted = hang_up(t, r)
    else:
        if t.root != r:
            raise InputError(f"tree is rooted at {t.root}, not {r}")
        rooted = t
    return SetPartition(b for v in rooted.vertices if (b := sibship(rooted, v, orientation)))
