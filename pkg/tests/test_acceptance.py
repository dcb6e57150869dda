"""The eight acceptance criteria, each at its stated bounds and time budget.

Every test prints exactly one ``[criterion N] PASS|FAIL`` line straight to
the terminal (also under ``pytest -v`` with output capture on).
"""

from __future__ import annotations

import os
import subprocess
import sys
import time

import pytest

from mvhodge.exact import Q, i_power
from mvhodge.hurwitz import METHODS, branch_points, burnside_phi, hurwitz_table
from mvhodge.identities import b_g, cubic_lambda, g_minus_1_value, integration_by_parts_lemmas
from mvhodge.mv import (
    build_R,
    clear_caches,
    cubic_from_extraction,
    ddd_extraction,
    initial_value_violations,
    lambda_g_target,
    limit_elsv,
    limit_lambda_g,
    tau_derivative_check,
)
from mvhodge.partitions import partitions_up_to
from mvhodge.pseries import verify_cut_join
from mvhodge.series import LambdaSeries
from mvhodge.verify import SuiteConfig, run_suite


@pytest.fixture
def report(capsys, request):
    """Yields a recorder; prints the criterion line whatever the outcome."""
    state = {"n": request.node.name.split("_")[2], "detail": "", "t0": time.perf_counter(), "ok": False}

    def record(n, ok, detail=""):
        state.update(n=n, ok=bool(ok), detail=detail)
        return ok

    yield record
    elapsed = time.perf_counter() - state["t0"]
    ok = state["ok"]
    with capsys.disabled():
        print(f"\n[criterion {state['n']}] {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {state['detail']}")


def _cold():
    clear_caches()
    return time.perf_counter()


def test_criterion_1_bernoulli(report):
    t0 = _cold()
    reps = run_suite("bernoulli", SuiteConfig(max_genus=10))
    dt = time.perf_counter() - t0
    names = {r.name for r in reps}
    required = {"bernoulli-two-ways", "bernoulli-recursion", "sinh-series", "coth-series", "sin-series",
                "bernoulli-square", "b-convolution", "power-sum"}
    bad = [(r.name, r.params) for r in reps if not r.passed]
    pm = {(r.params["m"], r.params["d"]) for r in reps if r.name == "power-sum"}
    ok = not bad and required <= names and dt < 1.0 and {(m, d) for m in range(1, 11) for d in range(2, 21)} <= pm
    report(1, ok, f"{len(reps)} identities, {len(bad)} failed, runtime {dt:.3f}s (< 1s)")
    assert ok


def test_criterion_2_mumford(report):
    t0 = _cold()
    reps = [r for r in run_suite("mumford", SuiteConfig(max_genus=6)) if r.params["g"] >= 2]
    dt = time.perf_counter() - t0
    names = {r.name for r in reps}
    required = {"mumford-product", "ch-even", "ch-2g-1", "ch-2g-3", "lemma-derivative-1", "lemma-derivative-2"}
    gs = {r.params["g"] for r in reps}
    bad = [(r.name, r.params) for r in reps if not r.passed]
    ok = not bad and required <= names and gs == set(range(2, 7)) and dt < 30
    report(2, ok, f"g=2..6, {len(reps)} checks modulo the ideal, {len(bad)} failed, runtime {dt:.2f}s (< 30s)")
    assert ok


def test_criterion_3_mv_cut_join(report):
    t0 = _cold()
    mv = build_R(6, 6)
    R = mv.R.truncate(6)
    mism = verify_cut_join(R, R.deriv_tau(), i_power(1) / 2, 1, upto=6)
    init = initial_value_violations(mv)
    dt = time.perf_counter() - t0
    ok = not mism and not init and dt < 120
    report(3, ok, f"weight<=6, lambda-order<=6, tau-degree<={mv.tau_degree_bound}; "
                  f"{len(mism)} cut-join and {len(init)} initial-value mismatches, runtime {dt:.2f}s (< 120s)")
    assert ok


def test_criterion_4_hurwitz_triple(report):
    t0 = _cold()
    table = hurwitz_table(5, 3)
    dt_table = time.perf_counter() - t0
    checked, bad = 0, []
    for mu in partitions_up_to(5):
        for g in range(0, 4):
            if branch_points(g, mu) > 6:
                continue
            vals = table.entries[(g, mu)]
            checked += 1
            if set(vals) != set(METHODS) or len(set(vals.values())) != 1:
                bad.append((g, tuple(mu), vals))
    spots = {(0, (1,)): Q(1), (0, (2,)): Q(1, 2), (1, (2,)): Q(1, 2), (0, (1, 1)): Q(1, 2)}
    spot_bad = [k for k, v in spots.items() if table.value(*k) != v]
    ok = not bad and not spot_bad and checked > 0 and dt_table < 120
    report(4, ok, f"{checked} (g, mu) with |mu|<=5, r<=6 agree across 3 methods; "
                  f"spot values {'ok' if not spot_bad else spot_bad}; runtime {dt_table:.2f}s (< 120s)")
    assert ok


def _rotate(s: LambdaSeries) -> LambdaSeries:
    return LambdaSeries(s.min_exp, [s.coeff(e).scale(i_power(e)) for e in range(s.min_exp, s.order + 1)], s.order)


def test_criterion_5_elsv_limit(report):
    _cold()
    lim = limit_elsv(4, 6)  # raises if a negative tau power survives
    phi = burnside_phi(4, 6)
    bad = []
    for mu in partitions_up_to(4):
        target = phi[mu]
        target = LambdaSeries.zero(6) if target is None else _rotate(target)
        m = lim.get(mu, 6).mismatches(target, 6)
        if m:
            bad.append((tuple(mu), m[:3]))
    ok = not bad
    report(5, ok, f"limit of R equals Phi(i lambda) for weight<=4, lambda-order<=6; {len(bad)} partitions differ")
    assert ok


def test_criterion_6_lambda_g(report):
    _cold()
    bad = []
    parts = partitions_up_to(5)
    for mu in parts:
        got = limit_lambda_g(mu, 6)
        if got.mismatches(lambda_g_target(mu, 6), 6):
            bad.append(tuple(mu))
    s = limit_lambda_g((1,), 6)
    b1, b2 = s.scalar_coeff(2).re, s.scalar_coeff(4).re
    ok = not bad and b1 == Q(1, 24) and b2 == Q(7, 5760) and b_g(1) == b1 and b_g(2) == b2
    report(6, ok, f"{len(parts)} partitions |mu|<=5 at lambda-order 6, {len(bad)} differ; b_1={b1}, b_2={b2}")
    assert ok


def test_criterion_7_degree_extraction(report):
    t0 = _cold()
    tau_bad = [d for d in range(2, 7) if tau_derivative_check(d, 6)]
    res = ddd_extraction(3, 8)  # raises if a residual point leaves the polynomial
    resid_ok = all(len(res.residual_points[g]) >= 2 for g in (1, 2, 3))
    cubic = {g: cubic_from_extraction(g, res.cubic[g]) for g in (2, 3)}
    cubic_ok = cubic == {2: Q(1, 5760), 3: Q(1, 1451520)} and all(cubic[g] == cubic_lambda(g) for g in cubic)
    gm1_ok = all(-res.g_minus_1[g] == g_minus_1_value(g) for g in (1, 2, 3))
    lemmas = [integration_by_parts_lemmas(g1, s - g1) for s in range(2, 7) for g1 in range(1, s)]
    lemmas_ok = all(r.passed for r in lemmas)
    dt = time.perf_counter() - t0
    ok = not tau_bad and resid_ok and cubic_ok and gm1_ok and lemmas_ok and dt < 180
    report(7, ok, f"tau-derivative d=2..6 {'ok' if not tau_bad else tau_bad}; cubic {cubic[2]}, {cubic[3]}; "
                  f"g-1 {'ok' if gm1_ok else 'FAIL'}; {len(lemmas)} lemma cases; runtime {dt:.2f}s (< 180s)")
    assert ok


def test_criterion_8_determinism(report, tmp_path):
    env = dict(os.environ)
    env.pop("MVHODGE_OUTPUT_DIR", None)
    outs, t0 = [], time.perf_counter()
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        res = subprocess.run([sys.executable, "-m", "mvhodge", "verify", "--suite", "all", "--output", str(path)],
                             capture_output=True, env=env)
        outs.append((res.returncode, path.read_bytes()))
    dt = time.perf_counter() - t0
    same = outs[0][1] == outs[1][1]
    ok = same and outs[0][0] == 0 and outs[1][0] == 0 and dt < 600
    report(8, ok, f"two full runs byte-identical={same} ({len(outs[0][1])} bytes), exit codes "
                  f"{outs[0][0]},{outs[1][0]}, total runtime {dt:.2f}s (< 600s)")
    assert ok
