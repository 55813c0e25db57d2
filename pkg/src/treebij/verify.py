"""Exhaustive verification sweeps over all trees on ``[n]``.

Each sweep is split into independent tasks ``(suite, n, r)`` so that a
process pool can run them in any order; results are merged by key.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from . import counting, genfun, phi_bijection as phimod, prufer_like
from .partitions import IndegreeType, SetPartition, set_partitions
from .trees import check_cap, enumerate_trees, global_type, hang_up, local_type

SUITES = ("roundtrip", "census", "sibship", "duyin")
MAX_REPORTED = 5


@dataclass
class SweepResult:
    suite: str
    n: int
    r: int | None
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(message)
        else:
            self.failures[-1] = f"... and more (last: {message})"

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "n": self.n, "root": self.r, "cases": str(self.cases),
                "ok": self.ok, "failures": list(self.failures)}


def _k_perms_ending(n: int, k: int, r: int):
    others = [v for v in range(1, n + 1) if v != r]
    for head in permutations(others, k - 1):
        yield head + (r,)


def sweep_roundtrip(n: int, r: int) -> SweepResult:
    """Phi_r both ways, and the Prüfer-like code both ways, at one root."""
    res = SweepResult("roundtrip", n, r)
    images = set()
    for t in enumerate_trees(n):
        res.cases += 1
        img = phimod.phi(t, r)
        images.add(img)
        if phimod.phi_inverse(img) != t:
            res.fail(f"phi_inverse(phi(T)) != T for {t.edges}")
        if global_type(img) != local_type(t):
            res.fail(f"type not preserved for {t.edges}")
        rooted = hang_up(t, r)
        if phimod.phi(phimod.phi_inverse(rooted), r) != rooted:
            res.fail(f"phi(phi_inverse(T')) != T' for {rooted!r}")
        if n >= 2:
            pi, p = prufer_like.encode(rooted)
            if pi.type() != global_type(rooted) or len(p) != len(pi) or p[-1] != r:
                res.fail(f"bad Prüfer-like code for {rooted!r}")
            if prufer_like.decode(pi, p, r) != rooted:
                res.fail(f"decode(encode(T')) != T' for {rooted!r}")
    if len(images) != res.cases:
        res.fail(f"phi_{r} is not injective: {len(images)} images of {res.cases} trees")
    if n >= 2:
        ground = [v for v in range(1, n + 1) if v != r]
        for pi in set_partitions(ground):
            for p in _k_perms_ending(n, len(pi), r):
                res.cases += 1
                t = prufer_like.decode(pi, p, r)
                if prufer_like.encode(t) != (pi, p):
                    res.fail(f"encode(decode) mismatch for {pi} / {p}")
    return res


def sweep_sibship(n: int, r: int) -> SweepResult:
    """Sibships, edge-label partitions and ``P = sigma(D)``."""
    res = SweepResult("sibship", n, r)
    for t in enumerate_trees(n):
        res.cases += 1
        tr = phimod.phi_trace(t, r)
        hung = hang_up(t, r)
        for v in range(1, n + 1):
            if phimod.sibship(hung, v, "local") != phimod.sibship(tr.rooted, tr.sigma.get(v, v), "global"):
                res.fail(f"sibship of {v} differs for {t.edges}")
        if n >= 2 and phimod.edge_label_partition(t, r, "local") != phimod.edge_label_partition(tr.rooted, r, "global"):
            res.fail(f"edge-label partitions differ for {t.edges}")
        if phimod.cut_proper_edges(tr.rooted)[1] != tr.d_matrix.map_tops(tr.sigma):
            res.fail(f"P != sigma(D) for {t.edges}")
    return res


def sweep_census(n: int, r: int | None) -> SweepResult:
    """Unrooted census (``r is None``) or rooted census at ``r`` against the closed form."""
    res = SweepResult("census", n, r)
    expected = counting.formula_census(n)
    cen = counting.census(n, "local") if r is None else counting.census(n, "global", root=r)
    res.cases = cen.total
    for lam, want in expected.items():
        got = cen.counts.get(lam, 0)
        if got != want:
            res.fail(f"type {lam}: census {got}, formula {want}")
        if n >= 2:
            factored = counting.count_set_partitions_by_type(n, lam) * counting.count_k_permutations(n, lam.length)
            if factored != want:
                res.fail(f"type {lam}: factorization {factored}, formula {want}")
    if r is None and n >= 2:
        poly = genfun.expand_product(n)
        if poly != genfun.genfun_from_enumeration(n):
            res.fail("product form of P_n differs from the enumeration")
        sums = genfun.type_sums(poly)
        for lam, want in expected.items():
            if sums.get(lam, 0) != want:
                res.fail(f"type {lam}: coefficient sum {sums.get(lam, 0)}, formula {want}")
    return res


def sweep_duyin(n: int) -> SweepResult:
    """``(phi_glo, psi) o Phi_1`` is a type-respecting bijection onto partition x permutation pairs."""
    res = SweepResult("duyin", n, 1)
    if n < 2:
        res.cases = 1
        return res
    seen: set[tuple[SetPartition, tuple[int, ...]]] = set()
    per_type: Counter[IndegreeType] = Counter()
    for t in enumerate_trees(n):
        res.cases += 1
        pi, p = prufer_like.encode(phimod.phi(t, 1))
        lam = local_type(t)
        if pi.type() != lam or len(p) != lam.length or p[-1] != 1 or pi.ground != frozenset(range(2, n + 1)):
            res.fail(f"code of {t.edges} is not in the expected product set")
        seen.add((pi, p))
        per_type[lam] += 1
    if len(seen) != res.cases:
        res.fail("composite map is not injective")
    for lam, count in per_type.items():
        want = counting.count_set_partitions_by_type(n, lam) * counting.count_k_permutations(n, lam.length)
        if count != want:
            res.fail(f"type {lam}: {count} trees, product set has {want}")
    return res


def _tasks(suite: str, max_n: int) -> list[tuple[str, int, int | None]]:
    tasks: list[tuple[str, int, int | None]] = []
    for n in range(1, max_n + 1):
        if suite in ("roundtrip", "sibship"):
            tasks.extend((suite, n, r) for r in range(1, n + 1))
        elif suite == "census":
            tasks.append((suite, n, None))
            tasks.extend((suite, n, r) for r in range(1, n + 1))
        elif suite == "duyin":
            tasks.append((suite, n, 1))
    return tasks


def run_task(task: tuple[str, int, int | None]) -> SweepResult:
    suite, n, r = task
    if suite == "roundtrip":
        return sweep_roundtrip(n, r)
    if suite == "sibship":
        return sweep_sibship(n, r)
    if suite == "census":
        return sweep_census(n, r)
    if suite == "duyin":
        return sweep_duyin(n)
    raise ValueError(f"unknown suite {suite!r}")


def run_suites(suites: list[str], max_n: int, jobs: int = 1) -> list[SweepResult]:
    """Run the given suites for ``n = 1..max_n``; output order does not depend on ``jobs``."""
    check_cap(max_n)
    tasks = [t for s in suites for t in _tasks(s, max_n)]
    if jobs <= 1:
        results = [run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_task, tasks))
    order = {s: k for k, s in enumerate(SUITES)}
    return sorted(results, key=lambda res: (order[res.suite], res.n, -1 if res.r is None else res.r))
