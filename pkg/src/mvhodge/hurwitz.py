"""Hurwitz numbers H_{g,mu} three ways, and the linear Hodge integrals they encode.

Convention: H_{g,mu} = (1/|mu|!) #{(sigma, t_1..t_r)} with sigma of cycle type
mu, t_k transpositions, t_r...t_1 sigma = 1, and the generated group
transitive; r = 2g - 2 + |mu| + l(mu).  Generating function

    Phi_mu(lambda) = sum_g H_{g,mu} lambda^r / r!.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod

from ._backend import count_transitive_factorizations
from .errors import InfeasibleError, PreconditionError
from .exact import Rational
from .partitions import (
    EMPTY,
    Partition,
    aut_order,
    canonical_key,
    character_table,
    conjugacy_class_size,
    dim,
    kappa,
    partitions_of,
    partitions_up_to,
    z_order,
)
from .pseries import PartitionSeries, linear_cut_join_monomial, ps_log
from .series import LambdaSeries, exp_scaled

__all__ = [
    "branch_points",
    "genus_from_r",
    "burnside_phi",
    "hurwitz_from_phi",
    "oracle_hurwitz",
    "cutjoin_hurwitz",
    "cutjoin_phi_coefficients",
    "HurwitzTable",
    "LinearHodgeTable",
    "elsv_invert",
    "hurwitz_table",
    "METHODS",
    "ORACLE_MAX_WEIGHT",
    "ORACLE_MAX_R",
]

METHODS = ("burnside", "oracle", "cutjoin")
ORACLE_MAX_WEIGHT = 6
ORACLE_MAX_R = 7


def branch_points(g: int, mu) -> int:
    return 2 * g - 2 + sum(mu) + len(mu)


def genus_from_r(r: int, mu) -> int | None:
    twice = r + 2 - sum(mu) - len(mu)
    if twice < 0 or twice % 2:
        return None
    return twice // 2


# -- Burnside ---------------------------------------------------------------


def burnside_phi(D: int, N: int) -> PartitionSeries:
    """Phi = log sum_mu (sum_nu chi_nu(mu)/z_mu e^{kappa_nu lambda/2} dim nu/|nu|!) p_mu."""
    if D < 1 or N < 0:
        raise PreconditionError("burnside_phi needs D >= 1 and N >= 0")
    terms = {EMPTY: LambdaSeries.constant(1, N)}
    for n in range(1, D + 1):
        table = character_table(n)
        nus = partitions_of(n)
        w = {nu: exp_scaled(Rational(kappa(nu), 2), N).scale(Rational(dim(nu), factorial(n))) for nu in nus}
        for mu in nus:
            acc = None
            for nu in nus:
                chi = table[(nu, mu)]
                if chi:
                    t = w[nu].scale(chi)
                    acc = t if acc is None else acc + t
            if acc is not None:
                terms[mu] = acc.scale(Rational(1, z_order(mu)))
    return ps_log(PartitionSeries(D, terms))


def hurwitz_from_phi(phi: PartitionSeries, gMax: int) -> dict:
    """{(g, mu): H} for g <= gMax wherever lambda^r is within the series order."""
    out = {}
    for mu in partitions_up_to(phi.weight_bound):
        s = phi[mu]
        for g in range(gMax + 1):
            r = branch_points(g, mu)
            order = phi.min_order() if s is None else s.order
            if order is None or r > order:
                continue
            c = Rational(0) if s is None else s.scalar_coeff(r).re
            out[(g, mu)] = c * factorial(r)
    return out


# -- brute-force oracle ----------------------------------------------------------


def _representative(mu) -> tuple:
    """A permutation of cycle type mu in one-line notation."""
    perm = []
    start = 0
    for part in mu:
        for k in range(part):
            perm.append(start + (k + 1) % part)
        start += part
    return tuple(perm)


def oracle_hurwitz(g: int, mu) -> Rational:
    """H_{g,mu} by counting transposition factorizations directly."""
    mu = Partition(mu)
    if not mu or g < 0:
        raise PreconditionError("need g >= 0 and a nonempty partition")
    r = branch_points(g, mu)
    if mu.weight > ORACLE_MAX_WEIGHT or r > ORACLE_MAX_R:
        raise InfeasibleError(
            f"oracle limited to |mu| <= {ORACLE_MAX_WEIGHT} and r <= {ORACLE_MAX_R} (got {mu.weight}, {r})"
        )
    count = count_transitive_factorizations(_representative(mu), r)
    # the count is the same for every sigma in the class
    return Rational(conjugacy_class_size(mu) * count, factorial(mu.weight))


# -- cut-and-join recursion ---------------------------------------------------


def cutjoin_phi_coefficients(D: int, max_r: int) -> dict:
    """{mu: [Phi_mu coefficient of lambda^e for e = 0..max_r]} from
    dPhi/dlambda = (1/2) CJ(Phi), seeded by Phi_(1) = 1 at lambda^0."""
    parts = partitions_up_to(D)
    coef = {mu: [Rational(0)] * (max_r + 1) for mu in parts}
    coef[Partition((1,))][0] = Rational(1)
    lin = {mu: linear_cut_join_monomial(mu) for mu in parts}
    grads = {}  # part i -> [(mu minus i, m_i, mu)]
    for mu in parts:
        for i, m in Counter(mu).items():
            grads.setdefault(i, []).append((mu.remove_part(i), m, mu))
    idx = sorted(grads)
    for e in range(max_r):
        cj = Counter()
        for mu in parts:
            c = coef[mu][e]
            if c:
                for nu, k in lin[mu].items():
                    cj[nu] += k * c
        for a, i in enumerate(idx):
            for j in idx[a:]:
                if i + j > D:
                    continue
                factor = i * j if i == j else 2 * i * j
                for alpha, ma, mu1 in grads[i]:
                    c1 = coef[mu1]
                    for beta, mb, mu2 in grads[j]:
                        if alpha.weight + beta.weight + i + j > D:
                            continue
                        c2 = coef[mu2]
                        s = sum((c1[k] * c2[e - k] for k in range(e + 1) if c1[k] and c2[e - k]), Rational(0))
                        if s:
                            cj[alpha.union(beta).add_part(i + j)] += factor * ma * mb * s
        for nu, v in cj.items():
            coef[nu][e + 1] = v / (2 * (e + 1))
    return coef


def cutjoin_hurwitz(D: int, gMax: int) -> dict:
    """{(g, mu): H} for |mu| <= D, g <= gMax from the cut-and-join recursion."""
    max_r = 2 * gMax - 2 + 2 * D
    coef = cutjoin_phi_coefficients(D, max_r)
    out = {}
    for mu in partitions_up_to(D):
        for g in range(gMax + 1):
            r = branch_points(g, mu)
            out[(g, mu)] = coef[mu][r] * factorial(r)
    return out


# -- tables -----------------------------------------------------------------


@dataclass
class HurwitzTable:
    """(g, mu) -> {method: H}; every method present must agree."""

    entries: dict = field(default_factory=dict)
    infeasible: dict = field(default_factory=dict)

    def add(self, g: int, mu, method: str, value) -> None:
        self.entries.setdefault((g, Partition(mu)), {})[method] = value

    def value(self, g: int, mu):
        vals = self.entries.get((g, Partition(mu)))
        if not vals:
            raise KeyError((g, mu))
        for m in METHODS:
            if m in vals:
                return vals[m]
        return next(iter(vals.values()))

    def keys(self) -> list:
        return sorted(self.entries, key=lambda k: (canonical_key(k[1]), k[0]))

    def disagreements(self) -> list:
        out = []
        for key in self.keys():
            vals = self.entries[key]
            if len(set(vals.values())) > 1:
                out.append((key, dict(vals)))
        return out

    def rows(self):
        """(g, mu, r, H, method) in canonical order."""
        for g, mu in self.keys():
            for m in METHODS:
                if m in self.entries[(g, mu)]:
                    yield g, mu, branch_points(g, mu), self.entries[(g, mu)][m], m


def hurwitz_table(D: int, gMax: int, methods=METHODS) -> HurwitzTable:
    table = HurwitzTable()
    if "burnside" in methods:
        N = 2 * gMax - 2 + 2 * D
        for (g, mu), h in hurwitz_from_phi(burnside_phi(D, N), gMax).items():
            table.add(g, mu, "burnside", h)
    if "cutjoin" in methods:
        for (g, mu), h in cutjoin_hurwitz(D, gMax).items():
            table.add(g, mu, "cutjoin", h)
    if "oracle" in methods:
        for mu in partitions_up_to(D):
            for g in range(gMax + 1):
                try:
                    table.add(g, mu, "oracle", oracle_hurwitz(g, mu))
                except InfeasibleError as exc:
                    table.infeasible[(g, mu)] = str(exc)
    return table


@dataclass
class LinearHodgeTable:
    """(g, mu) -> I_{g,mu} and the integral of Lambda_g^vee(1)/prod(1 - mu_i psi_i)."""

    I: dict = field(default_factory=dict)
    integral: dict = field(default_factory=dict)


def elsv_invert(table) -> LinearHodgeTable:
    """I = H/r!; integral = I |Aut mu| prod mu_i!/mu_i^{mu_i}.

    Unstable (g, l) are kept: their values are what the |mu|^{l-3}
    extension of the formula assigns.
    """
    items = table.entries.items() if isinstance(table, HurwitzTable) else table.items()
    out = LinearHodgeTable()
    for (g, mu), v in items:
        h = v if not isinstance(v, dict) else HurwitzTable(entries={(g, mu): v}).value(g, mu)
        mu = Partition(mu)
        i_val = h / factorial(branch_points(g, mu))
        out.I[(g, mu)] = i_val
        out.integral[(g, mu)] = i_val * aut_order(mu) * Rational(
            prod(factorial(m) for m in mu), prod(m**m for m in mu)
        )
    return out
