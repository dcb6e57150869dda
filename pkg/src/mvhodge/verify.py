"""End-to-end identity suites; each returns a list of IdentityReport."""

from __future__ import annotations

from dataclasses import dataclass

from .exact import Gaussian, Rational, i_power
from .hodge import check_ch_displays, check_derivative1, check_mumford_product, verify_derivative_lemma
from .hurwitz import (
    ORACLE_MAX_WEIGHT,
    branch_points,
    burnside_phi,
    elsv_invert,
    hurwitz_table,
)
from .identities import (
    IdentityReport,
    b_g,
    bernoulli_reports,
    cubic_lambda,
    f_g1g2_coefficients,
    g_minus_1_value,
    lambda_g_multinomial_check,
    integration_by_parts_lemmas,
)
from .mv import (
    build_R,
    cubic_from_extraction,
    ddd_extraction,
    initial_value_violations,
    lambda_g_target,
    limit_elsv,
    limit_lambda_g,
    quantum_dim,
    quantum_dim_double_product,
    reality_violations,
    tau_derivative_check,
)
from .errors import IdentityViolation
from .partitions import Partition, partitions_up_to
from .pseries import verify_cut_join
from .series import LambdaSeries

__all__ = ["SUITES", "SuiteConfig", "run_suite", "run_suites", "first_failure"]

SUITES = ("bernoulli", "mumford", "mv-cutjoin", "elsv", "lambda-g", "cubic", "g-minus-1")


@dataclass(frozen=True)
class SuiteConfig:
    max_weight: int = 6
    lambda_order: int = 8
    max_genus: int = 3

    def __post_init__(self):
        for name in ("max_weight", "lambda_order", "max_genus"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


def _mismatch_report(name, params, mism, prov) -> IdentityReport:
    shown = [[str(m[0]), *m[1:]] if isinstance(m[0], Partition) else list(m) for m in mism[:5]]
    return IdentityReport(name, params, len(mism), 0, not mism, prov, "" if not mism else f"first mismatches: {shown}")


def _series_report(name, params, left: LambdaSeries, right: LambdaSeries, upto, prov) -> IdentityReport:
    mism = left.mismatches(right, upto)
    return IdentityReport(name, params, left, right, not mism, prov, "" if not mism else f"mismatch at (lambda^e, tau^j) {mism[:5]}")


# -- suites -----------------------------------------------------------------------


def suite_bernoulli(cfg: SuiteConfig) -> list[IdentityReport]:
    return bernoulli_reports(max(20, 2 * cfg.max_genus))


def suite_mumford(cfg: SuiteConfig) -> list[IdentityReport]:
    out = []
    for g in range(1, cfg.max_genus + 1):
        checks = check_mumford_product(g) + check_derivative1(g) + check_ch_displays(g) + verify_derivative_lemma(g)
        for c in checks:
            out.append(
                IdentityReport(
                    c.name, {"g": g, "term": c.detail}, c.passed, True, c.passed, ("closedForm", "directSum"),
                    "" if c.passed else f"nonzero modulo the ideal in degree {c.failing_degree}",
                )
            )
    return out


def suite_mv_cutjoin(cfg: SuiteConfig) -> list[IdentityReport]:
    D, N = cfg.max_weight, cfg.lambda_order
    mv = build_R(D, N)
    prov = ("mvEngine", "mvEngine")
    out = []
    mism = verify_cut_join(mv.R.truncate(N), mv.R.truncate(N).deriv_tau(), i_power(1) / 2, 1, upto=N)
    out.append(_mismatch_report("mv-cut-join", {"D": D, "N": N}, mism, prov))
    out.append(_mismatch_report("mv-initial-value", {"D": D, "N": N}, initial_value_violations(mv), ("mvEngine", "closedForm")))
    out.append(_mismatch_report("mv-reality", {"D": D, "N": N}, reality_violations(mv), prov))
    for nu in partitions_up_to(D):
        out.append(
            _series_report("quantum-dimension", {"nu": list(nu), "N": N}, quantum_dim(nu, N),
                           quantum_dim_double_product(nu, N), N, ("mvEngine", "directSum"))
        )
    return out


def suite_elsv(cfg: SuiteConfig) -> list[IdentityReport]:
    D, N, G = cfg.max_weight, cfg.lambda_order, cfg.max_genus
    out = []
    phi = burnside_phi(D, N)
    mism = verify_cut_join(phi, phi.deriv_lambda(), Rational(1, 2), 0, upto=N - 1)
    out.append(_mismatch_report("hurwitz-cut-join", {"D": D, "N": N}, mism, ("hurwitzEngine", "hurwitzEngine")))

    # triple agreement wherever the oracle is feasible
    table = hurwitz_table(min(D, ORACLE_MAX_WEIGHT), G)
    for g, mu in table.keys():
        vals = table.entries[(g, mu)]
        if "oracle" not in vals:
            continue
        distinct = sorted(set(vals.values()))
        out.append(
            IdentityReport("hurwitz-triple", {"g": g, "mu": list(mu), "r": branch_points(g, mu)},
                           vals["oracle"], vals["burnside"], len(distinct) == 1 and vals["cutjoin"] == vals["oracle"],
                           ("directSum", "hurwitzEngine"))
        )
    for g, mu, want in [(0, (1,), Rational(1)), (0, (2,), Rational(1, 2)), (1, (2,), Rational(1, 2)), (0, (1, 1), Rational(1, 2))]:
        if sum(mu) <= D and g <= G:
            got = table.value(g, mu)
            out.append(IdentityReport("hurwitz-spot", {"g": g, "mu": list(mu)}, got, want, got == want, ("hurwitzEngine", "closedForm")))

    # tau -> 0 limit of R against Phi(i lambda)
    De = min(D, 4)
    lim = limit_elsv(De, N)
    for mu in partitions_up_to(De):
        target = phi[mu]
        target = LambdaSeries.zero(N) if target is None else target.truncate(N)
        out.append(_series_report("elsv-limit", {"mu": list(mu), "N": N}, lim.get(mu, N), _rotate(target), N, ("mvEngine", "hurwitzEngine")))

    # linear Hodge integrals from the table agree with the limit series at mu = (d)
    lin = elsv_invert(table)
    for d in range(1, min(D, 4) + 1):
        mu = Partition((d,))
        s = lim.get(mu, N)
        for g in range(0, min(G, 2) + 1):
            r = branch_points(g, mu)
            if r > N or (g, mu) not in lin.I:
                continue
            # coefficient of lambda^r in Phi(i lambda) is i^r H / r!
            want = i_power(r) * Gaussian(lin.I[(g, mu)])
            got = s.scalar_coeff(r)
            out.append(IdentityReport("elsv-linear-hodge", {"g": g, "mu": [d]}, got, want, got == want, ("mvEngine", "hurwitzEngine")))
    return out


def _rotate(s: LambdaSeries) -> LambdaSeries:
    """f(lambda) -> f(i lambda)."""
    coeffs = [s.coeff(e).scale(i_power(e)) for e in range(s.min_exp, s.order + 1)]
    return LambdaSeries(s.min_exp, coeffs, s.order)


def suite_lambda_g(cfg: SuiteConfig) -> list[IdentityReport]:
    D, N, G = cfg.max_weight, cfg.lambda_order, cfg.max_genus
    mv = build_R(D, N + D - 2)  # l(mu) <= D needs lambda^{N + l - 2}
    out = []
    for mu in partitions_up_to(D):
        try:
            got = limit_lambda_g(mu, N, mv)
        except IdentityViolation as exc:
            out.append(IdentityReport("lambda-g-limit", {"mu": list(mu), "N": N}, str(exc), "limit exists", False, ("mvEngine", "closedForm")))
            continue
        want = lambda_g_target(mu, N)
        out.append(_series_report("lambda-g-limit", {"mu": list(mu), "N": N}, got, want, N, ("mvEngine", "closedForm")))
        # lambda^{2g} coefficient against the summed psi-lambda_g integrals
        for g in range(0, N // 2 + 1):
            if 2 * g - 2 + mu.length <= 0:
                continue
            rep = lambda_g_multinomial_check(mu, g)
            left, right = got.scalar_coeff(2 * g), Gaussian(rep.right)
            out.append(IdentityReport("lambda-g-multinomial", {"mu": list(mu), "g": g}, left, right,
                                      left == right and rep.passed, ("mvEngine", "directSum")))
    for g, want in [(1, Rational(1, 24)), (2, Rational(7, 5760))]:
        if 2 * g <= N:
            got = limit_lambda_g((1,), N, mv).scalar_coeff(2 * g)
            out.append(IdentityReport("b_g-recovered", {"g": g}, got, Gaussian(want), got == Gaussian(want), ("mvEngine", "closedForm")))
    for g in range(0, G + 1):
        c = lambda_g_target((1,), 2 * g).scalar_coeff(2 * g).re
        out.append(IdentityReport("b_g-series", {"g": g}, b_g(g), c, b_g(g) == c, ("closedForm", "directSum")))
    return out


def _ddd(cfg: SuiteConfig):
    G = max(cfg.max_genus, 1)
    return ddd_extraction(G, 2 * G + 2)


def suite_cubic(cfg: SuiteConfig) -> list[IdentityReport]:
    D, N, G = cfg.max_weight, cfg.lambda_order, cfg.max_genus
    out = []
    for d in range(2, D + 1):
        mism = tau_derivative_check(d, N)
        out.append(_mismatch_report("tau-derivative", {"d": d, "N": N}, mism, ("mvEngine", "closedForm")))
    res = _ddd(cfg)
    for g in sorted(res.polynomials):
        out.append(IdentityReport("polynomial-in-d", {"g": g, "residualPoints": res.residual_points[g]},
                                  len(res.residual_points[g]), 2, len(res.residual_points[g]) >= 2, ("mvEngine", "directSum")))
    for g in sorted(res.cubic):
        got = cubic_from_extraction(g, res.cubic[g])
        want = cubic_lambda(g)
        out.append(IdentityReport("cubic-lambda", {"g": g}, got, want, got == want, ("mvEngine", "closedForm")))
    for g in range(2, G + 1):
        for g1 in range(0, g + 1):
            c = f_g1g2_coefficients(g1, g - g1, 2 * g + 3)
            out.append(IdentityReport("F-coefficients", {"g1": g1, "g2": g - g1},
                                      [c["coeffOf_d"], c["coeffOf_d2gMinus1"]],
                                      [c["expected_d"], c["expected_d2gMinus1"]], c["ok"], ("directSum", "closedForm")))
    return out


def suite_g_minus_1(cfg: SuiteConfig) -> list[IdentityReport]:
    G = cfg.max_genus
    out = []
    res = _ddd(cfg)
    for g in sorted(res.g_minus_1):
        got = -res.g_minus_1[g]
        want = g_minus_1_value(g)
        out.append(IdentityReport("g-minus-1", {"g": g}, got, want, got == want, ("mvEngine", "closedForm")))
    for s in range(2, max(6, 2 * G) + 1):
        for g1 in range(1, s):
            out.append(integration_by_parts_lemmas(g1, s - g1))
    return out


_SUITE_FUNCS = {
    "bernoulli": suite_bernoulli,
    "mumford": suite_mumford,
    "mv-cutjoin": suite_mv_cutjoin,
    "elsv": suite_elsv,
    "lambda-g": suite_lambda_g,
    "cubic": suite_cubic,
    "g-minus-1": suite_g_minus_1,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> list[IdentityReport]:
    cfg = cfg or SuiteConfig()
    if name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    reports = _SUITE_FUNCS[name](cfg)
    for r in reports:
        r.extra["suite"] = name
    return reports


def run_suites(names, cfg: SuiteConfig | None = None) -> list[IdentityReport]:
    out = []
    for n in (SUITES if names in ("all", ["all"], ("all",)) else names):
        out.extend(run_suite(n, cfg))
    return out


def first_failure(reports) -> IdentityReport | None:
    return next((r for r in reports if not r.passed), None)
