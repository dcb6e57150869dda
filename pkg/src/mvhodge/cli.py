"""Command-line interface: ``hurwitz``, ``verify`` and ``series``.

Exit codes: 0 success, 1 an identity failed, 2 usage error.  Without
``--output`` results go to stdout, or to ``$MVHODGE_OUTPUT_DIR/<command>.<fmt>``
when that variable is set.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from .errors import IdentityViolation, PreconditionError
from .hurwitz import METHODS, burnside_phi, hurwitz_table
from .mv import build_R, limit_elsv, limit_lambda_g, quantum_dim
from .partitions import Partition
from .serialize import dumps, hurwitz_csv, hurwitz_json, reports_csv
from .verify import SUITES, SuiteConfig, first_failure, run_suites

__all__ = ["main", "build_parser", "OUTPUT_DIR_ENV"]

OUTPUT_DIR_ENV = "MVHODGE_OUTPUT_DIR"
TARGETS = ("R", "Phi", "V", "limit-elsv", "limit-lambda-g")


def _positive(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _partition(s: str) -> Partition:
    try:
        mu = Partition.parse(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {s!r}; use e.g. 3.1.1")
    if not mu:
        raise argparse.ArgumentTypeError("partition must be nonempty")
    return mu


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mvhodge", description="Exact Hurwitz numbers, two-partition generating series and Hodge integrals.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--max-weight", type=_positive, default=6, help="partition weight bound D (default 6)")
        sp.add_argument("--max-genus", type=_positive, default=3, help="genus bound G (default 3)")
        if fmt:
            sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--output", type=Path, help="output file (default stdout or $%s)" % OUTPUT_DIR_ENV)

    h = sub.add_parser("hurwitz", help="table of Hurwitz numbers")
    common(h)
    h.add_argument("--method", choices=METHODS + ("all",), default="burnside")
    h.add_argument("--include-zero", action="store_true", help="also list vanishing entries")

    v = sub.add_parser("verify", help="run identity suites")
    common(v)
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--order", type=_positive, default=8, help="lambda order N (default 8)")

    s = sub.add_parser("series", help="dump an exact series")
    common(s, fmt=False)
    s.add_argument("--target", choices=TARGETS, required=True)
    s.add_argument("--partition", type=_partition, help="required for V and limit-lambda-g")
    s.add_argument("--order", type=_positive, default=8, help="absolute lambda order N (default 8)")
    return p


def _emit(args, text: str) -> None:
    path = args.output
    if path is None and os.environ.get(OUTPUT_DIR_ENV):
        ext = getattr(args, "format", "json")
        path = Path(os.environ[OUTPUT_DIR_ENV]) / f"{args.command}.{ext}"
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_hurwitz(args) -> int:
    methods = METHODS if args.method == "all" else (args.method,)
    table = hurwitz_table(args.max_weight, args.max_genus, methods)
    if args.format == "csv":
        text = hurwitz_csv(table, args.include_zero)
    else:
        text = hurwitz_json(table, args.include_zero, diff=args.method == "all")
    _emit(args, text)
    bad = table.disagreements()
    if bad:
        (g, mu), vals = bad[0]
        print(f"methods disagree at g={g}, mu={mu}: {vals}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(args.max_weight, args.order, args.max_genus)
    t0 = time.perf_counter()
    reports = run_suites([args.suite] if args.suite != "all" else "all", cfg)
    text = reports_csv(reports) if args.format == "csv" else dumps(reports)
    _emit(args, text)
    failed = sum(1 for r in reports if not r.passed)
    print(f"{len(reports) - failed}/{len(reports)} identities passed in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    bad = first_failure(reports)
    if bad is not None:
        print(f"first failure: {bad.name} {bad.params} {bad.detail}".rstrip(), file=sys.stderr)
        return 1
    return 0


def cmd_series(args, parser) -> int:
    D, N, t = args.max_weight, args.order, args.target
    if t in ("V", "limit-lambda-g") and args.partition is None:
        parser.error(f"--target {t} requires --partition")
    params = {"target": t, "order": N}
    if t == "V":
        params["partition"] = list(args.partition)
        data = quantum_dim(args.partition, N)
    elif t == "limit-lambda-g":
        params["partition"] = list(args.partition)
        data = limit_lambda_g(args.partition, N)
    elif t == "Phi":
        params["maxWeight"] = D
        data = burnside_phi(D, N)
    elif t == "R":
        params["maxWeight"] = D
        data = build_R(D, N).R.truncate(N)
    else:
        params["maxWeight"] = D
        data = limit_elsv(D, N)
    _emit(args, dumps({"params": params, "series": data}))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "hurwitz":
            return cmd_hurwitz(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_series(args, parser)
    except PreconditionError as exc:
        print(f"mvhodge: error: {exc}", file=sys.stderr)
        return 2
    except IdentityViolation as exc:
        print(f"mvhodge: identity failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
