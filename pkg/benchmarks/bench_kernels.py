"""Compiled vs pure-Python kernels on the workloads the engines actually run.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each kernel is timed on both backends and the results are checked equal.
"""

from __future__ import annotations

import argparse
import time

from mvhodge import _kernels_py as py
from mvhodge.exact import Rational
from mvhodge.hurwitz import _representative
from mvhodge.partitions import partitions_of

try:
    from mvhodge import _kernels as cy
except ImportError:  # pragma: no cover
    cy = None


def dp_workload(k):
    out = []
    for n in range(1, 7):
        for mu in partitions_of(n):
            for r in range(0, 8):
                out.append(k.count_transitive_factorizations(_representative(mu), r))
    return out


def mn_workload(k):
    out = []
    for n in (8, 10, 12):
        parts = partitions_of(n)
        out.extend(k.mn_character(tuple(a), tuple(b)) for a in parts for b in parts)
    return out


def conv_workload(k):
    x = [Rational(i * i - 3, i + 1) for i in range(60)]
    y = [Rational(7 - i, 2 * i + 3) for i in range(60)]
    acc = [Rational(0)] * 120
    for _ in range(20):
        k.conv_acc(acc, x, y)
    return acc


WORKLOADS = {
    "transitive factorizations (|mu|<=6, r<=7)": dp_workload,
    "Murnaghan-Nakayama tables (n=8,10,12)": mn_workload,
    "rational convolution (60x60, x20)": conv_workload,
}


def best_of(fn, k, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(k)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled extension not built; only the pure-Python backend is available")
    print(f"{'kernel':45s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in WORKLOADS.items():
        tp, rp = best_of(fn, py, args.repeat)
        if cy is None:
            print(f"{name:45s} {tp:10.4f} {'-':>10s} {'-':>8s}")
            continue
        tc, rc = best_of(fn, cy, args.repeat)
        if rp != rc:
            print(f"{name}: BACKENDS DISAGREE")
            return 1
        print(f"{name:45s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
