"""Compiled and pure-Python kernels against each other and a naive oracle."""

from __future__ import annotations

import os
import subprocess
import sys
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvhodge import _kernels_py as py
from mvhodge._backend import BACKEND
from mvhodge.exact import Rational
from mvhodge.hurwitz import _representative
from mvhodge.partitions import partitions_of

try:
    from mvhodge import _kernels as cy
except ImportError:  # pragma: no cover
    cy = None

needs_cython = pytest.mark.skipif(cy is None, reason="compiled extension not built")


def naive_count(sigma, r):
    """Enumerate every r-tuple of transpositions; check product and transitivity."""
    n = len(sigma)
    trans = [(a, b) for a in range(n) for b in range(a + 1, n)]
    count = 0
    for tup in product(trans, repeat=r):
        perm = list(sigma)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in range(n):
            parent[find(x)] = find(sigma[x])
        for a, b in tup:
            perm = [b if v == a else a if v == b else v for v in perm]
            parent[find(a)] = find(b)
        if perm == list(range(n)) and len({find(x) for x in range(n)}) == 1:
            count += 1
    return count


@pytest.mark.parametrize("n,r", [(1, 0), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3), (4, 5), (3, 6)])
def test_dp_matches_naive_enumeration(n, r):
    for mu in partitions_of(n):
        sigma = _representative(mu)
        assert py.count_transitive_factorizations(sigma, r) == naive_count(sigma, r)


@needs_cython
@pytest.mark.parametrize("n", range(1, 7))
def test_dp_backends_agree(n):
    for mu in partitions_of(n):
        sigma = _representative(mu)
        for r in range(0, 8 if n <= 5 else 7):
            assert cy.count_transitive_factorizations(sigma, r) == py.count_transitive_factorizations(sigma, r)


@needs_cython
@pytest.mark.parametrize("n", range(1, 11))
def test_mn_backends_agree(n):
    parts = partitions_of(n)
    for nu in parts:
        for mu in parts:
            assert cy.mn_character(tuple(nu), tuple(mu)) == py.mn_character(tuple(nu), tuple(mu))


rat = st.integers(-50, 50).flatmap(lambda a: st.integers(1, 9).map(lambda b: Rational(a, b)))


@needs_cython
@given(st.lists(rat, max_size=8), st.lists(rat, min_size=1, max_size=8), st.booleans())
def test_conv_backends_agree(x, y, negate):
    a1 = [Rational(0)] * (len(x) + len(y))
    a2 = list(a1)
    cy.conv_acc(a1, x, y, negate)
    py.conv_acc(a2, x, y, negate)
    assert a1 == a2
    naive = [Rational(0)] * (len(x) + len(y))
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            naive[i + j] += -xi * yj if negate else xi * yj
    assert a1 == naive


def test_backend_selection_env():
    env = dict(os.environ, MVHODGE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from mvhodge._backend import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    assert BACKEND in ("cython", "python")


def test_pure_python_backend_runs_a_suite():
    env = dict(os.environ, MVHODGE_PURE_PYTHON="1")
    code = (
        "from mvhodge.verify import run_suite, SuiteConfig\n"
        "r = run_suite('elsv', SuiteConfig(max_weight=4, lambda_order=6, max_genus=2))\n"
        "assert all(x.passed for x in r), [x.name for x in r if not x.passed]\n"
        "print(len(r))\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.returncode == 0, out.stderr


def test_benchmark_script_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1"]) == 0
    assert "transitive factorizations" in capsys.readouterr().out
