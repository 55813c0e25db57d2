"""``treebij`` command-line front end.

Every subcommand produces a :class:`CommandResult`. The payload goes to
stdout (JSON unless the command emits the tree text format), messages go to
stderr, and the exit code is 0 (ok), 1 (mismatch) or 2 (error).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import counting, genfun, phi_bijection as phimod, prufer_like, qseries, verify
from .errors import TreeBijError
from .partitions import IndegreeType, SetPartition
from .trees import (LabeledTree, RootedTree, enumerate_trees, format_tree,
                    parse_tree)

EXIT_CODES = {"ok": 0, "mismatch": 1, "error": 2}


@dataclass
class CommandResult:
    status: str
    payload: Any
    elapsed_ms: int = 0
    message: str = ""

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _tree_json(t: LabeledTree | RootedTree) -> dict:
    if isinstance(t, RootedTree):
        edges = sorted((min(c, p), max(c, p)) for c, p in t.parent.items())
        return {"n": t.n, "root": t.root, "edges": [list(e) for e in edges]}
    return {"n": t.n, "edges": [list(e) for e in t.edges]}


def _read_tree(path: str) -> LabeledTree | RootedTree:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise TreeBijError(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise TreeBijError(f"{path} is not ASCII") from exc
    return parse_tree(text)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise TreeBijError(f"expected integers, got {text!r}") from None


def _coeffs(poly: qseries.QPolynomial) -> list[str]:
    return [str(c) for c in poly.coeffs]


# -- subcommands ---------------------------------------------------------------

def cmd_enumerate(args) -> CommandResult:
    trees = list(enumerate_trees(args.n))
    if args.format == "text":
        return CommandResult("ok", "\n".join(format_tree(t) for t in trees))
    return CommandResult("ok", {"n": args.n, "count": str(len(trees)),
                                "trees": [[list(e) for e in t.edges] for t in trees]})


def cmd_census(args) -> CommandResult:
    cen = counting.census(args.n, args.variant, root=args.root)
    expected = counting.formula_census(args.n)
    status = "ok" if cen.counts == {k: v for k, v in expected.items() if v} else "mismatch"
    if args.format == "text":
        lines = [f"{lam}\t{c}" for lam, c in cen.ordered()]
        lines.append(f"total\t{cen.total}")
        return CommandResult(status, "\n".join(lines) + "\n")
    return CommandResult(status, cen.to_json())


def _expect_unrooted(t) -> LabeledTree:
    if isinstance(t, RootedTree):
        raise TreeBijError("expected an unrooted tree file (no 'root' line)")
    return t


def _expect_rooted(t) -> RootedTree:
    if not isinstance(t, RootedTree):
        raise TreeBijError("expected a rooted tree file (with a 'root' line)")
    return t


def cmd_phi(args) -> CommandResult:
    t = _expect_unrooted(_read_tree(args.input))
    tr = phimod.phi_trace(t, args.root)
    if not args.trace:
        return CommandResult("ok", format_tree(tr.rooted))
    return CommandResult("ok", {
        "d_matrix": [list(c) for c in tr.d_matrix.columns],
        "sigma": [list(c) for c in tr.cycles],
        "sigma_d_matrix": [list(c) for c in tr.p_matrix.columns],
        "chains": [list(w) for w in tr.chains],
        "result_tree": _tree_json(tr.rooted),
    })


def cmd_phi_inverse(args) -> CommandResult:
    t = _expect_rooted(_read_tree(args.input))
    tr = phimod.phi_inverse_trace(t)
    if not args.trace:
        return CommandResult("ok", format_tree(tr.unrooted))
    return CommandResult("ok", {
        "p_matrix": [list(c) for c in tr.p_matrix.columns],
        "sigma": [list(c) for c in tr.cycles],
        "chains": [list(w) for w in tr.chains],
        "d_matrix": [list(c) for c in tr.d_matrix.columns],
        "result_tree": _tree_json(tr.unrooted),
    })


def cmd_prufer(args) -> CommandResult:
    if args.action == "encode":
        t = _expect_rooted(_read_tree(args.input))
        pi, p = prufer_like.encode(t)
        return CommandResult("ok", {"root": t.root, "partition": str(pi), "perm": list(p),
                                    "type": str(pi.type())})
    for flag in ("partition", "perm", "root", "n"):
        if getattr(args, flag) is None:
            raise UsageError(f"prufer decode: --{flag} is required")
    pi = SetPartition.parse(args.partition)
    t = prufer_like.decode(pi, _ints(args.perm), args.root)
    if t.n != args.n:
        raise TreeBijError(f"partition describes a tree on {t.n} vertices, not {args.n}")
    return CommandResult("ok", format_tree(t))


def cmd_verify(args) -> CommandResult:
    suites = list(verify.SUITES) if args.suite == "all" else [args.suite]
    results = verify.run_suites(suites, args.max_n, jobs=args.jobs)
    ok = all(r.ok for r in results)
    return CommandResult("ok" if ok else "mismatch", {
        "suites": suites, "max_n": args.max_n, "ok": ok,
        "results": [r.to_json() for r in results],
    })


def cmd_qcheck(args) -> CommandResult:
    m, n, p, l = args.m, args.n, args.p, args.l
    if args.identity == "thm4":
        lhs, rhs = qseries.thm4_check(m, n, p, l)
        params = {"m": m, "n": n, "p": p, "l": l}
        equal = lhs == rhs
    elif args.identity == "lemma":
        lhs, rhs = qseries.eq_lemma_check(n, m)
        params = {"n": n, "k": m}
        equal = lhs == rhs
    elif args.identity == "simple":
        lhs, rhs = qseries.eq_simple_check(n, m, p, l)
        params = {"m": m, "n": n, "p": p, "l": l}
        equal = lhs == rhs
    else:
        lhs = rhs = qseries.ZERO
        equal = True
        for e, i in qseries.bridge_cases(m, n):
            a, b = qseries.bridge_check(n, e, i)
            equal = equal and a == b
            lhs, rhs = lhs + a, rhs + b
        params = {"m": m, "n": n}
    return CommandResult("ok" if equal else "mismatch", {
        "identity": args.identity, "params": params, "equal": equal,
        "lhs": _coeffs(lhs), "rhs": _coeffs(rhs),
    })


def cmd_idcheck(args) -> CommandResult:
    if args.identity == "second":
        lhs, rhs = counting.check_identity_second(args.n)
        params = {"n": args.n}
    else:
        if args.m is None:
            raise UsageError("idcheck general: --m is required")
        lhs, rhs = counting.check_identity_general(args.m, args.n, args.p, args.l)
        params = {"m": args.m, "n": args.n, "p": args.p, "l": args.l}
    equal = lhs == rhs
    return CommandResult("ok" if equal else "mismatch", {
        "identity": args.identity, "params": params, "equal": equal,
        "lhs": str(lhs), "rhs": str(rhs),
    })


def cmd_genfun(args) -> CommandResult:
    poly = genfun.expand_product(args.n)
    if not args.group_by_type:
        return CommandResult("ok", poly.to_json())
    sums = genfun.type_sums(poly)
    rows, status = [], "ok"
    for lam, want in counting.formula_census(args.n).items():
        got = sums.get(lam, 0)
        if got != want:
            status = "mismatch"
        rows.append({"type": str(lam), "coefficient_sum": str(got), "formula": str(want)})
    rows.sort(key=lambda row: IndegreeType.parse(row["type"]).parts, reverse=True)
    return CommandResult(status, rows)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treebij", description="Bijections and identities for labeled trees.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("enumerate", help="list all labeled trees on [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", help="count trees by indegree type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=counting.VARIANTS, required=True)
    p.add_argument("--root", type=int, default=1)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("phi", help="map an unrooted tree to a rooted tree")
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("phi-inverse", help="map a rooted tree back to an unrooted tree")
    p.add_argument("--input", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_phi_inverse)

    p = sub.add_parser("prufer", help="leaf-group Prüfer-like code")
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("--input")
    p.add_argument("--partition")
    p.add_argument("--perm")
    p.add_argument("--root", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_prufer)

    p = sub.add_parser("verify", help="exhaustive verification sweeps")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qcheck", help="check a q-series identity")
    p.add_argument("--identity", choices=("thm4", "lemma", "simple", "bridge"), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.set_defaults(func=cmd_qcheck)

    p = sub.add_parser("idcheck", help="check an integer sum identity")
    p.add_argument("--identity", choices=("second", "general"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.set_defaults(func=cmd_idcheck)

    p = sub.add_parser("genfun", help="expand the tree generating function P_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group-by-type", action="store_true")
    p.set_defaults(func=cmd_genfun)
    return parser


def run(argv: Sequence[str] | None = None) -> CommandResult:
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        if args.command == "prufer" and args.action == "encode" and not args.input:
            raise UsageError("prufer encode: --input is required")
        result = args.func(args)
    except (UsageError, TreeBijError) as exc:
        result = CommandResult("error", None, message=str(exc))
    result.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return result


def main(argv: Sequence[str] | None = None) -> int:
    result = run(argv)
    if result.status == "error":
        print(f"error: {result.message}", file=sys.stderr)
    elif isinstance(result.payload, str):
        sys.stdout.write(result.payload)
    else:
        json.dump(result.payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    if result.status == "mismatch":
        print("mismatch: a checked identity or oracle comparison failed", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
