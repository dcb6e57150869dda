"""The combinatorial side R(lambda; tau; p) of the Hodge-integral generating formula.

    Z = sum_mu ( sum_{|nu|=|mu|} chi_nu(mu)/z_mu * e^{i(tau+1/2) kappa_nu lambda/2} V_nu(lambda) ) p_mu
    R = log Z

with V_nu = 1/prod_{x in nu} 2 sin(h(x) lambda/2) (the sine normalization
throughout).  Also here: the initial value at tau = 0, the tau-derivative
identity for R_(d), the two scaled tau -> 0 limits, and the polynomial
extraction in d that yields the cubic and lambda_{g-1} integrals.

Every power of sqrt(-1) that turns an R coefficient into a real number goes
through :func:`mv_normalization`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import IdentityViolation, PreconditionError
from .exact import Gaussian, Rational, i_power
from .partitions import (
    EMPTY,
    Partition,
    aut_order,
    character_table,
    hooks,
    kappa,
    partitions_of,
    partitions_up_to,
    z_order,
)
from .poly import TauPolynomial
from .pseries import PartitionSeries, ps_log
from .series import LambdaSeries, sin_double_half

__all__ = [
    "MVSeries",
    "quantum_dim",
    "quantum_dim_double_product",
    "twist_exponential",
    "build_Z",
    "build_R",
    "mv_normalization",
    "normalized_coefficient",
    "reality_violations",
    "initial_value",
    "initial_value_violations",
    "tau_derivative_rhs",
    "tau_derivative_check",
    "limit_lambda_g",
    "lambda_g_target",
    "limit_elsv",
    "ddd_rhs",
    "ddd_extraction",
    "DDDResult",
    "cubic_from_extraction",
    "clear_caches",
]

_ONE = Rational(1)
_HALF = Rational(1, 2)


# -- building blocks --------------------------------------------------------


@lru_cache(maxsize=None)
def _stripped_sin_product(hs: tuple, order: int) -> LambdaSeries:
    """prod_h (2 sin(h lambda/2))/lambda, valid to lambda^order."""
    out = LambdaSeries.constant(1, order)
    for h in hs:
        out = out * sin_double_half(h, order + 1).shift(-1)
    return out


def _inv_sin_product(hs, order: int) -> LambdaSeries:
    """1/prod_h 2 sin(h lambda/2), valid to lambda^order."""
    hs = tuple(sorted(hs))
    n = len(hs)
    return _stripped_sin_product(hs, order + n).invert().shift(-n)


@lru_cache(maxsize=None)
def quantum_dim(nu, order: int) -> LambdaSeries:
    """V_nu(lambda) = 1/prod_{x in nu} 2 sin(h(x) lambda/2), to lambda^order."""
    nu = Partition(nu)
    if not nu:
        raise PreconditionError("quantum_dim needs a nonempty partition")
    return _inv_sin_product(hooks(nu), order)


def quantum_dim_double_product(nu, order: int) -> LambdaSeries:
    """The same V_nu from the product over pairs of rows and over boxes:

    prod_{a<b} sin((nu_a - nu_b + b - a) lambda/2)/sin((b - a) lambda/2)
      / prod_i prod_{v=1}^{nu_i} 2 sin((v - i + l) lambda/2).
    """
    nu = Partition(nu)
    l = len(nu)
    num = []
    den = []
    for a in range(1, l + 1):
        for b in range(a + 1, l + 1):
            num.append(nu[a - 1] - nu[b - 1] + b - a)
            den.append(b - a)
    for i in range(1, l + 1):
        for v in range(1, nu[i - 1] + 1):
            den.append(v - i + l)
    # each factor written as 2 sin(h lambda/2); the 2s of the ratios cancel
    shift = len(num) - len(den)
    top = _stripped_sin_product(tuple(sorted(num)), order - shift)
    bottom = _stripped_sin_product(tuple(sorted(den)), order - shift).invert()
    return (top * bottom).shift(shift)


@lru_cache(maxsize=None)
def twist_exponential(k: int, order: int) -> LambdaSeries:
    """exp(i (tau + 1/2) k lambda / 2) with exact tau-polynomial coefficients."""
    coeffs = []
    c = Gaussian(1)
    step = Gaussian(0, Rational(k, 2))
    for e in range(order + 1):
        # c = (i k/2)^e / e!; multiply by (tau + 1/2)^e
        binom = [Rational(comb(e, j)) * _HALF ** (e - j) for j in range(e + 1)]
        if c.im:
            coeffs.append(TauPolynomial.from_parts((), [c.im * b for b in binom]))
        else:
            coeffs.append(TauPolynomial.from_parts([c.re * b for b in binom], ()))
        c = c * step / (e + 1)
    return LambdaSeries(0, coeffs, order)


# -- R ----------------------------------------------------------------------


@dataclass(frozen=True)
class MVSeries:
    weight_bound: int
    lambda_order: int
    tau_degree_bound: int
    R: PartitionSeries
    Z: PartitionSeries

    def __getitem__(self, mu) -> LambdaSeries:
        return self.R.get(mu, self.lambda_order)


def _twisted_dims(n: int, order: int) -> dict:
    out = {}
    for nu in partitions_of(n):
        out[nu] = twist_exponential(kappa(nu), order + n) * quantum_dim(nu, order)
    return out


def build_Z(D: int, order: int) -> PartitionSeries:
    """The disconnected series Z (constant term 1) to lambda^order."""
    terms = {EMPTY: LambdaSeries.constant(1, order)}
    for n in range(1, D + 1):
        w = _twisted_dims(n, order)
        table = character_table(n)
        for mu in partitions_of(n):
            acc = None
            for nu, s in w.items():
                chi = table[(nu, mu)]
                if chi:
                    t = s.scale(chi)
                    acc = t if acc is None else acc + t
            terms[mu] = acc.scale(Rational(1, z_order(mu)))
    return PartitionSeries(D, terms)


_r_lock = threading.Lock()
_r_cache: dict = {}


def build_R(D: int, N: int) -> MVSeries:
    """R = log Z to p-weight D and lambda-order N (every R_mu valid to N).

    Cached; a request covered by an earlier, larger computation is served by
    truncating it, since weight-w terms of R only involve weights <= w.
    """
    if D < 1 or N < 0:
        raise PreconditionError("build_R needs D >= 1 and N >= 0")
    with _r_lock:
        if (D, N) in _r_cache:
            return _r_cache[(D, N)]
        for (d2, n2), s in _r_cache.items():
            if d2 >= D and n2 >= N:
                out = _restrict(s, D, N)
                _r_cache[(D, N)] = out
                return out
    out = _compute_R(D, N)
    with _r_lock:
        return _r_cache.setdefault((D, N), out)


def clear_caches() -> None:
    """Drop every memoized series (used for cold-start timings)."""
    with _r_lock:
        _r_cache.clear()
    _stripped_sin_product.cache_clear()
    quantum_dim.cache_clear()
    twist_exponential.cache_clear()


def _restrict(s: MVSeries, D: int, N: int) -> MVSeries:
    R = s.R.truncate(N, D)
    return MVSeries(D, N, max((v.tau_degree() for _, v in R.items()), default=0), R, s.Z.truncate(N, D))


def _compute_R(D: int, N: int) -> MVSeries:
    extra = D - 1
    while True:
        Z = build_Z(D, N + extra)
        R = ps_log(Z)
        low = min((s.order for _, s in R.items()), default=N)
        if low >= N:
            break
        extra += N - low
    R = R.truncate(N)
    Z = Z.truncate(N)
    tdeg = max((s.tau_degree() for _, s in R.items()), default=0)
    return MVSeries(D, N, tdeg, R, Z)


# -- normalization and invariants -------------------------------------------


def mv_normalization(mu) -> Gaussian:
    """sqrt(-1)^{|mu| + l(mu)}: the power dividing R_mu into real coefficients.

    The lambda^e coefficient of R_mu lies in i^{e + |mu|} Q[tau], and e has
    the parity of l(mu), so after dividing by this power the remaining sign
    is (-1)^{(e - l(mu))/2}, real.
    """
    mu = Partition(mu)
    return i_power(mu.weight + mu.length)


def normalized_coefficient(mu, e: int, c: TauPolynomial) -> TauPolynomial:
    return c.scale(Gaussian(1) / mv_normalization(mu))


def reality_violations(mv: MVSeries) -> list[tuple]:
    """(partition, exponent, reason) wherever a coefficient of R breaks the
    parity rule or fails to become real after normalization."""
    out = []
    for mu, s in mv.R.items():
        for e, c in s.items():
            if c.is_zero():
                continue
            if (e - mu.length) % 2:
                out.append((mu, e, "parity"))
            elif not normalized_coefficient(mu, e, c).is_real():
                out.append((mu, e, "imaginary"))
    return out


def initial_value(d: int, order: int) -> LambdaSeries:
    """-sqrt(-1)^{d+1} / (2 d sin(d lambda/2))."""
    return _inv_sin_product((d,), order).scale(-i_power(d + 1) / d)


def initial_value_violations(mv: MVSeries) -> list[tuple]:
    """Check R(lambda; 0; p) = -sum_d i^{d+1} p_d/(2 d sin(d lambda/2))."""
    out = []
    N = mv.lambda_order
    for mu in partitions_up_to(mv.weight_bound):
        at0 = mv[mu].eval_tau(0)
        want = initial_value(mu[0], N) if mu.length == 1 else LambdaSeries.zero(N)
        out.extend((mu, e, j) for e, j in at0.mismatches(want))
    return out


# -- tau derivative of R_(d) --------------------------------------------------


def tau_derivative_rhs(d: int, order: int) -> LambdaSeries:
    """sum_{i+j=d} -sqrt(-1)^{d+1} lambda / (8 sin(i lambda/2) sin(j lambda/2))."""
    acc = LambdaSeries.zero(order)
    for i in range(1, d):
        # lambda/(8 sin sin) = (lambda/2) * [1/(2 sin)] * [1/(2 sin)]
        acc = acc + _inv_sin_product((i, d - i), order - 1).shift(1)
    return acc.scale(-i_power(d + 1) * _HALF)


def tau_derivative_check(d: int, N: int, differentiate: bool = True, mv: MVSeries | None = None) -> list:
    """Mismatches (exponent, tau-degree) between d/dtau|_0 R_(d) and the closed
    form.  ``differentiate=False`` drops the derivative (negative control)."""
    if d < 2:
        raise PreconditionError("tau_derivative_check needs d >= 2")
    if mv is None or mv.weight_bound < d or mv.lambda_order < N:
        mv = build_R(d, N)
    r = mv[(d,)].truncate(N)
    lhs = (r.deriv_tau() if differentiate else r).eval_tau(0)
    return lhs.mismatches(tau_derivative_rhs(d, N), N)


# -- scaled limits -------------------------------------------------------------


def limit_lambda_g(mu, N: int, mv: MVSeries | None = None) -> LambdaSeries:
    """The tau -> 0 limit of the prefactored R_mu, to lambda^N.

    Per lambda-coefficient Q(tau) of R_mu: tau^{l-1} must divide Q exactly;
    the remaining factors evaluate at tau = 0 to prod (mu_i - 1)!, which
    cancels the numerator factorials.  The overall sign is the one carried by
    the geometric side (a factor -1 relative to the displayed prefactor).
    """
    mu = Partition(mu)
    if not mu:
        raise PreconditionError("limit_lambda_g needs a nonempty partition")
    l = mu.length
    need = N + l - 2
    if mv is None or mv.weight_bound < mu.weight or mv.lambda_order < need:
        mv = build_R(mu.weight, max(need, 0))
    r = mv[mu]
    const = Gaussian(-aut_order(mu)) / mv_normalization(mu)
    coeffs = []
    lo = min(r.min_exp, need + 1)
    for e in range(lo, need + 1):
        q = r.coeff(e)
        for j in range(min(l - 1, q.degree + 1)):
            if q[j]:
                raise IdentityViolation(
                    f"limit does not exist at this truncation: tau^{j} term of lambda^{e} in R_{mu}"
                )
        coeffs.append(TauPolynomial.constant(q[l - 1] * const))
    return LambdaSeries(lo, coeffs, need).shift(2 - l)


def lambda_g_target(mu, N: int) -> LambdaSeries:
    """d^{l-3} (d lambda/2)/sin(d lambda/2) with d = |mu|."""
    mu = Partition(mu)
    d, l = mu.weight, mu.length
    s = _stripped_sin_product((d,), N).invert()  # (d lambda/2)/sin(d lambda/2) scaled by 1/d
    return s.scale(Rational(d) ** (l - 2) if l >= 2 else Rational(1, d ** (2 - l)))


def limit_elsv(D: int, N: int, mv: MVSeries | None = None) -> PartitionSeries:
    """Substitute lambda -> lambda tau, tau -> 1/tau, p_k -> (lambda tau)^k p_k
    in R and keep the tau^0 part, to lambda^N.  Raises IdentityViolation if a
    negative tau-power survives."""
    need = max(N - 1, 0)
    if mv is None or mv.weight_bound < D or mv.lambda_order < need:
        mv = build_R(D, need)
    out = {}
    for mu in partitions_up_to(D):
        r = mv[mu]
        n = mu.weight
        coeffs = []
        hi = N - n
        lo = r.min_exp
        for e in range(lo, hi + 1):
            q = r.coeff(e)
            # c lambda^e tau^j -> c lambda^{e+n} tau^{e+n-j}
            if q.degree > e + n:
                raise IdentityViolation(
                    f"negative tau power survives: p_{mu}, lambda^{e}, tau^{q.degree}"
                )
            coeffs.append(TauPolynomial.constant(q[e + n]) if e + n >= 0 else TauPolynomial.constant(0))
        if hi >= lo:
            out[mu] = LambdaSeries(lo + n, coeffs, N)
        else:
            out[mu] = LambdaSeries.zero(N)
    return PartitionSeries(D, out)


# -- polynomial extraction in d ---------------------------------------------------


def _harmonic(m: int):
    return sum((Rational(1, a) for a in range(1, m + 1)), Rational(0))


def ddd_rhs(d: int, order: int) -> LambdaSeries:
    """-H_{d-1} (d lambda/2)/(d sin(d lambda/2)) + sum_{i+j=d} lambda^2/(8 sin(i lambda/2) sin(j lambda/2))."""
    # lambda/(2 sin(d lambda/2)) is already (d lambda/2)/(d sin(d lambda/2))
    first = _stripped_sin_product((d,), order).invert().scale(-_harmonic(d - 1))
    acc = first
    for i in range(1, d):
        acc = acc + _inv_sin_product((i, d - i), order - 2).shift(2).scale(_HALF)
    return acc


def _lagrange_coeffs(xs, ys) -> list:
    """Coefficients (ascending) of the interpolating polynomial, exactly."""
    n = len(xs)
    out = [Rational(0)] * n
    for k in range(n):
        basis = [Rational(1)]
        denom = Rational(1)
        for m in range(n):
            if m == k:
                continue
            # multiply basis by (x - xs[m])
            nb = [Rational(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                nb[t + 1] += c
                nb[t] -= c * xs[m]
            basis = nb
            denom *= xs[k] - xs[m]
        scale = ys[k] / denom
        for t, c in enumerate(basis):
            out[t] += c * scale
    return out


def _eval_poly(cs, x):
    acc = Rational(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class DDDResult:
    cubic: dict
    g_minus_1: dict
    polynomials: dict
    residual_points: dict


def ddd_extraction(gMax: int, dMax: int) -> DDDResult:
    """For g = 1..gMax, interpolate the lambda^{2g} coefficient of the
    right side in d (degree <= 2g - 1) and read off d^1 and d^{2g-1}.

    Sample points beyond the first 2g must lie on the polynomial; at least two
    are required, else PreconditionError.  A point off the polynomial raises
    IdentityViolation.
    """
    if gMax < 1:
        raise PreconditionError("gMax must be >= 1")
    if dMax < 2 * gMax + 2:
        raise PreconditionError(f"dMax must be >= 2*gMax + 2 = {2 * gMax + 2}")
    order = 2 * gMax
    samples = {d: ddd_rhs(d, order) for d in range(1, dMax + 1)}
    cubic, gm1, polys, resid = {}, {}, {}, {}
    for g in range(1, gMax + 1):
        ys = {d: samples[d].scalar_coeff(2 * g) for d in samples}
        for d, y in ys.items():
            if not y.is_real():
                raise IdentityViolation(f"non-real lambda^{2 * g} coefficient at d={d}")
        xs = list(range(1, 2 * g + 1))
        cs = _lagrange_coeffs([Rational(x) for x in xs], [ys[x].re for x in xs])
        extra = [d for d in samples if d > 2 * g]
        for d in extra:
            if _eval_poly(cs, Rational(d)) != ys[d].re:
                raise IdentityViolation(f"lambda^{2 * g} coefficient is not polynomial in d (fails at d={d})")
        polys[g] = cs
        resid[g] = extra
        gm1[g] = cs[2 * g - 1]
        if g >= 2:
            cubic[g] = cs[1]
    return DDDResult(cubic, gm1, polys, resid)


def cubic_from_extraction(g: int, raw) -> Rational:
    """Divide the extracted d^1 coefficient by (-1)^{g-1}(2g-2)."""
    return raw / ((-1) ** (g - 1) * (2 * g - 2))
