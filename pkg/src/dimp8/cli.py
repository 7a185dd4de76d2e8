"""Command-line front end: solve, oracle, check, gen, bench."""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import kernels
from .dimcheck import GraphTooLargeError, check_dim, oracle_min_dim
from .generate import GenSpec, gen_named, gen_planted_yes, gen_random_p8_free
from .graph import GraphError, format_weight, is_finite
from .io import ParseError, ResultRecord, emit_graph_file, parse_graph_file, parse_matching_file
from .solver import (
    STATUS_FOUND,
    STATUS_NO_DIM,
    STATUS_NO_FINITE,
    Diagnostics,
    SolveOptions,
    SolveOutcome,
    solve_dim,
    solve_dim_checked,
)

EXIT_FOUND = 0
EXIT_NONE = 1
EXIT_ERROR = 2


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph_file(text)


def _emit_record(record: ResultRecord, as_json: bool) -> None:
    if as_json:
        print(record.to_json())
    else:
        print(record.human(), end="")


def _cmd_solve(args) -> int:
    g = _read_graph(args.path)
    opts = SolveOptions(branch_cap=args.branch_cap, threads=args.threads, p8_check=args.check_p8_free)
    outcome = solve_dim_checked(g, opts) if args.check_p8_free else solve_dim(g, opts)
    _emit_record(ResultRecord.from_outcome(outcome), args.json)
    return EXIT_FOUND if outcome.status == STATUS_FOUND else EXIT_NONE


def _oracle_outcome(g, limit: int) -> SolveOutcome:
    t0 = time.perf_counter()
    res = oracle_min_dim(g, limit=limit)
    millis = (time.perf_counter() - t0) * 1000.0
    if not res.found:
        return SolveOutcome(STATUS_NO_DIM, None, None, Diagnostics(millis=millis))
    status = STATUS_FOUND if is_finite(res.weight) else STATUS_NO_FINITE
    return SolveOutcome(status, res.matching, res.weight, Diagnostics(millis=millis))


def _cmd_oracle(args) -> int:
    g = _read_graph(args.path)
    outcome = _oracle_outcome(g, args.max_edges)
    _emit_record(ResultRecord.from_outcome(outcome), args.json)
    return EXIT_FOUND if outcome.status == STATUS_FOUND else EXIT_NONE


def _cmd_check(args) -> int:
    g = _read_graph(args.path)
    matching = parse_matching_file(Path(args.matching).read_text())
    report = check_dim(g, matching)
    if report.is_dim:
        print("ok: dominating induced matching")
        return EXIT_FOUND
    if not report.is_induced_matching:
        print("violation: not an induced matching")
        return EXIT_NONE
    for e in g.edges:
        if report.counts[e] != 1:
            print(
                f"violation: edge ({e[0] + 1},{e[1] + 1}) dominated "
                f"{report.counts[e]} times (expected 1)"
            )
            return EXIT_NONE
    return EXIT_NONE


def _cmd_gen(args) -> int:
    spec = GenSpec(
        kind=args.kind.replace("-", "_"),
        n=args.n,
        p=args.p,
        seed=args.seed,
        w_lo=args.wmin,
        w_hi=args.wmax,
        k=args.k,
        family=args.family,
        connected=not args.allow_disconnected,
    )
    comments = [f"kind={args.kind} n={args.n} seed={args.seed}"]
    if spec.kind == "random_p8_free":
        g = gen_random_p8_free(spec)
    elif spec.kind == "planted":
        g, planted = gen_planted_yes(spec)
        comments.append("planted " + " ".join(f"{u + 1}-{v + 1}" for u, v in planted))
    elif spec.kind == "named":
        if not args.family:
            raise GraphError("--family required for named graphs")
        g = gen_named(args.family, args.n)
        comments = [f"family={args.family} n={args.n}"]
    else:
        raise GraphError(f"unknown kind {args.kind!r}")
    text = emit_graph_file(g, comments)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return EXIT_FOUND


def _cmd_bench(args) -> int:
    paths = sorted(Path(args.dir).glob("*.dim")) + sorted(Path(args.dir).glob("*.graph"))
    if not paths:
        print("no instances found (expected *.dim or *.graph)", file=sys.stderr)
        return EXIT_ERROR
    backend = None if args.kernel == "auto" else args.kernel
    rows = []
    print("instance,n,m,millis,status,weight")
    for p in paths:
        g = parse_graph_file(p.read_text())
        t0 = time.perf_counter()
        if args.oracle:
            res = oracle_min_dim(g, limit=args.max_edges, backend=backend)
            status = (
                STATUS_NO_DIM
                if not res.found
                else (STATUS_FOUND if is_finite(res.weight) else STATUS_NO_FINITE)
            )
            weight = None if not res.found else res.weight
        else:
            outcome = solve_dim(g, SolveOptions(threads=args.threads))
            status, weight = outcome.status, outcome.weight
        millis = (time.perf_counter() - t0) * 1000.0
        wtxt = "" if weight is None else format_weight(weight)
        print(f"{p.name},{g.n},{g.m},{millis:.3f},{status},{wtxt}")
        rows.append((g.n, millis))
    print("n,count,median_millis")
    for n in sorted({n for n, _ in rows}):
        ms = [t for nn, t in rows if nn == n]
        print(f"{n},{len(ms)},{statistics.median(ms):.3f}")
    return EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dimp8",
        description="Exact minimum-weight dominating induced matching solver for P8-free graphs",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("solve", help="solve one graph file")
    sp.add_argument("path")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--check-p8-free", action="store_true")
    sp.add_argument("--branch-cap", type=int, default=None)
    sp.add_argument("--threads", type=int, default=1)
    sp.set_defaults(fn=_cmd_solve)

    op = sub.add_parser("oracle", help="exhaustive reference search")
    op.add_argument("path")
    op.add_argument("--max-edges", type=int, default=26)
    op.add_argument("--json", action="store_true")
    op.set_defaults(fn=_cmd_oracle)

    cp = sub.add_parser("check", help="validate a matching file against a graph")
    cp.add_argument("path")
    cp.add_argument("--matching", required=True)
    cp.set_defaults(fn=_cmd_check)

    gp = sub.add_parser("gen", help="generate an instance")
    gp.add_argument("--kind", required=True, choices=["random-p8-free", "planted", "named"])
    gp.add_argument("--n", type=int, default=0)
    gp.add_argument("--p", type=float, default=0.3)
    gp.add_argument("--k", type=int, default=None)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--wmin", type=int, default=1)
    gp.add_argument("--wmax", type=int, default=1)
    gp.add_argument("--family", default=None)
    gp.add_argument("--out", default=None)
    gp.add_argument("--allow-disconnected", action="store_true")
    gp.set_defaults(fn=_cmd_gen)

    bp = sub.add_parser("bench", help="time a directory of instances (CSV)")
    bp.add_argument("--dir", required=True)
    bp.add_argument("--oracle", action="store_true")
    bp.add_argument("--max-edges", type=int, default=40)
    bp.add_argument("--threads", type=int, default=1)
    bp.add_argument("--kernel", choices=["auto"] + kernels.available_backends(), default="auto")
    bp.set_defaults(fn=_cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, GraphError, GraphTooLargeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
