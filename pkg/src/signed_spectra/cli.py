"""Command-line front end: check, spectrum, search and repro subcommands.

Exit codes: 0 = bound holds / success, 3 = violation found, 2 = usage or
input error, 1 = internal error. Results go to stdout; progress and
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .conjectures import (
    DEFAULT_TOL,
    BoundKind,
    check_all_k,
    evaluate_all_k,
    ties_all_k,
)
from .fixtures import COUNTEREXAMPLES, REFERENCE_TOL
from .graphs import (
    GraphParseError,
    LaplacianValidationError,
    SignedGraph,
    complete_graph,
    format_laplacian_text,
    from_laplacian_matrix,
    parse_edge_list,
    parse_laplacian_text,
)
from .search import SearchJob, SearchMode, run as run_search
from .spectra import spectrum_of

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_VIOLATION = 3

_BOUND_BY_NAME = {"brouwer": BoundKind.BROUWER, "wang-hou": BoundKind.WANG_HOU}
_MODE_BY_NAME = {
    "classes": SearchMode.EXHAUSTIVE_CLASSES,
    "all": SearchMode.EXHAUSTIVE_ALL,
    "sample": SearchMode.RANDOM_SAMPLE,
}


def _load_graph(path: str) -> SignedGraph:
    """Read an edge-list or Laplacian-matrix file, detected by its header."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 1:
        return from_laplacian_matrix(parse_laplacian_text(text))
    return parse_edge_list(text)


def _default_workers() -> int:
    env = os.environ.get("SIGNED_SPECTRA_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def cmd_check(args) -> int:
    g = _load_graph(args.input)
    kind = _BOUND_BY_NAME[args.bound]
    s = spectrum_of(g)
    rows = evaluate_all_k(s, g.m, kind)
    violations = check_all_k(s, g.m, kind, tol=args.tol, signing=g)
    ties = ties_all_k(s, g.m, kind, tol=args.tol)
    if args.format == "json":
        doc = {
            "base": g.base.label,
            "signs_hex": g.signs_hex(),
            "kind": kind.value,
            "eigenvalues": [float(v) for v in s.values],
            "rows": [
                {"k": r.k, "sum": r.sum, "bound": r.bound, "margin": r.margin,
                 "violation": r.margin > args.tol}
                for r in rows
            ],
            "violations": [v.to_json_dict() for v in violations],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"{g.base.label} signs={g.signs_hex()} bound={kind.value} tol={args.tol:g}")
        print(f"{'k':>3} {'sum':>14} {'bound':>7} {'margin':>14}")
        viol_ks = {v.k for v in violations}
        for r in rows:
            flag = "  VIOLATION" if r.k in viol_ks else ""
            print(f"{r.k:>3} {r.sum:>14.6f} {r.bound:>7} {r.margin:>14.6f}{flag}")
        if violations:
            print(f"{len(violations)} violation(s) found")
        else:
            print("bound holds for every k")
    for r in ties:
        print(f"tie: k={r.k} sum={r.sum:.12f} equals bound {r.bound} within tol",
              file=sys.stderr)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_spectrum(args) -> int:
    g = _load_graph(args.input)
    s = spectrum_of(g)
    if args.format == "json":
        doc = {
            "base": g.base.label,
            "signs_hex": g.signs_hex(),
            "eigenvalues": [float(v) for v in s.values],
            "prefix_sums": [float(p) for p in s.prefix[1:]],
        }
        print(json.dumps(doc, indent=2))
    else:
        print("eigenvalues: " + " ".join(f"{v:.6f}" for v in s.values))
        print("prefix sums: " + " ".join(f"{p:.6f}" for p in s.prefix[1:]))
    return EXIT_OK


def _parse_base(spec: str):
    m = re.fullmatch(r"[Kk](\d+)", spec)
    if not m:
        raise ValueError(f"base must look like K7, got {spec!r}")
    return complete_graph(int(m.group(1)))


def cmd_search(args) -> int:
    if args.base:
        base = _parse_base(args.base)
    else:
        base = _load_graph(args.input).base
    job = SearchJob(
        base=base,
        kind=_BOUND_BY_NAME[args.bound],
        mode=_MODE_BY_NAME[args.mode],
        k_filter=frozenset(args.k) if args.k else None,
        sample_count=args.samples,
        seed=args.seed,
        tol=args.tol,
        workers=args.workers,
    )

    def progress(done: int, total: int) -> None:
        print(f"progress: {done}/{total} signings checked", file=sys.stderr)

    def stream(rec) -> None:
        print(f"violation: {json.dumps(rec.to_json_dict())}", file=sys.stderr)

    report = run_search(job, checkpoint_path=args.checkpoint,
                        progress=progress if not args.quiet else None,
                        on_violation=stream if not args.quiet else None)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"checked {report.classes_checked} signings of {base.label} "
              f"in {report.wall_time:.2f}s")
        print(f"best margin: {report.best_margin:.6f}")
        for v in report.violations:
            print(f"  k={v.k} sum={v.sum:.6f} bound={v.bound} "
                  f"margin={v.margin:.6f} signs={v.signing.signs_hex()}")
        print(f"{len(report.violations)} violation(s) found")
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_repro(args) -> int:
    fx = COUNTEREXAMPLES[args.example]
    if args.dump:
        os.makedirs(args.dump, exist_ok=True)
        path = os.path.join(args.dump, f"{fx.name.lower()}_counterexample.txt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(format_laplacian_text(fx.laplacian))
        print(f"wrote {path}", file=sys.stderr)
    g = fx.graph()
    kind = BoundKind.WANG_HOU
    s = spectrum_of(g)
    violations = check_all_k(s, g.m, kind, signing=g)

    eig_err = max(abs(float(v) - e) for v, e in zip(s.values, fx.eigenvalues))
    got_sum = s.top_k_sum(fx.k)
    sum_err = abs(got_sum - fx.top_sum)
    ok = (
        eig_err <= REFERENCE_TOL
        and sum_err <= REFERENCE_TOL
        and [v.k for v in violations] == [fx.k]
        and violations[0].bound == fx.bound
    )
    if args.format == "json":
        doc = {
            "example": args.example,
            "base": fx.name,
            "eigenvalues": [float(v) for v in s.values],
            "reference_eigenvalues": list(fx.eigenvalues),
            "k": fx.k,
            "sum": got_sum,
            "bound": fx.bound,
            "margin": got_sum - fx.bound,
            "reproduced": ok,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"{fx.name} counterexample ({_BOUND_BY_NAME['wang-hou'].value} bound)")
        print("eigenvalues: " + " ".join(f"{v:.6f}" for v in s.values))
        print(f"k={fx.k} sum={got_sum:.6f} bound={fx.bound} margin={got_sum - fx.bound:.6f}")
        print("reproduced" if ok else "MISMATCH against reference values")
    return EXIT_OK if ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-spectra",
        description="Laplacian spectra of signed graphs and eigenvalue-sum bound checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check one signed graph against a bound for every k")
    p.add_argument("input", help="edge-list or Laplacian-matrix file")
    p.add_argument("--bound", choices=sorted(_BOUND_BY_NAME), default="wang-hou")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", help="print Laplacian eigenvalues and prefix sums")
    p.add_argument("input", help="edge-list or Laplacian-matrix file")
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("search", help="sweep signings of a base graph for violations")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--base", help="complete base graph, e.g. K7")
    grp.add_argument("--input", help="edge-list file giving the base topology")
    p.add_argument("--bound", choices=sorted(_BOUND_BY_NAME), default="wang-hou")
    p.add_argument("--mode", choices=sorted(_MODE_BY_NAME), default="classes")
    p.add_argument("--samples", type=int, default=0, help="sample count (sample mode)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, action="append", help="restrict to these k (repeatable)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--checkpoint", help="JSON-lines checkpoint/result file")
    p.add_argument("--quiet", action="store_true", help="suppress progress on stderr")
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("repro", help="reproduce a built-in counterexample")
    p.add_argument("--example", type=int, choices=[1, 2], required=True)
    p.add_argument("--dump", metavar="DIR", help="also write the fixture matrix file")
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, LaplacianValidationError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
