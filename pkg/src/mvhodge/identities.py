"""Closed-form Hodge-integral values and the auxiliary identities behind them.

Absolute values of Bernoulli numbers are realized through the sign rule
|B_{2g}| = (-1)^{g-1} B_{2g}, never through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from math import comb, factorial, prod

from .bernoulli import bernoulli, bernoulli_by_series
from .errors import PreconditionError
from .exact import Rational
from .series import LambdaSeries, sin_double_half, sinh_double_half

__all__ = [
    "IdentityReport",
    "abs_b2",
    "b_g",
    "multinomial",
    "lambda_g_value",
    "cubic_lambda",
    "g_minus_1_value",
    "harmonic",
    "power_sum",
    "power_sum_poly",
    "power_sum_check",
    "integration_by_parts_lemmas",
    "f_g1g2_coefficients",
    "f_g1g2_brute",
    "lambda_g_multinomial_check",
    "bernoulli_reports",
]


@dataclass
class IdentityReport:
    name: str
    params: dict
    left: object
    right: object
    passed: bool
    provenance: tuple = ("closedForm", "directSum")
    detail: str = ""
    extra: dict = field(default_factory=dict)


def _report(name, params, left, right, prov=("closedForm", "directSum"), detail="") -> IdentityReport:
    return IdentityReport(name, dict(params), left, right, left == right, prov, detail)


# -- closed forms ---------------------------------------------------------------


def abs_b2(g: int):
    """|B_{2g}| via the sign rule."""
    return bernoulli(2 * g) * (-1) ** (g - 1) if g >= 1 else Rational(1)


def b_g(g: int):
    """Coefficient of t^{2g} in (t/2)/sin(t/2)."""
    if g < 0:
        raise PreconditionError("g must be >= 0")
    if g == 0:
        return Rational(1)
    p = 2 ** (2 * g - 1)
    return Rational(p - 1, p) * abs_b2(g) / factorial(2 * g)


def multinomial(n: int, ks) -> int:
    if sum(ks) != n or any(k < 0 for k in ks):
        return 0
    return factorial(n) // prod(factorial(k) for k in ks)


def lambda_g_value(g: int, k) -> Rational:
    """Integral of psi_1^{k_1}...psi_n^{k_n} lambda_g over M_{g,n}."""
    k = list(k)
    n = len(k)
    if g < 0 or n < 1:
        raise PreconditionError("need g >= 0 and at least one marked point")
    if 2 * g - 2 + n <= 0:
        raise PreconditionError(f"(g, n) = ({g}, {n}) is not stable")
    if any(x < 0 for x in k) or sum(k) != 2 * g - 3 + n:
        raise PreconditionError("dimension constraint violated")
    return multinomial(2 * g - 3 + n, k) * b_g(g)


def cubic_lambda(g: int) -> Rational:
    """Integral of lambda_{g-2} lambda_{g-1} lambda_g over M_g."""
    if g < 2:
        raise PreconditionError("g must be >= 2")
    return (
        Rational(1, 2 * factorial(2 * g - 2))
        * (abs_b2(g - 1) / (2 * g - 2))
        * (abs_b2(g) / (2 * g))
    )


def harmonic(m: int):
    return sum((Rational(1, i) for i in range(1, m + 1)), Rational(0))


def g_minus_1_value(g: int) -> Rational:
    """Integral of lambda_{g-1}/(1 - psi_1) over M_{g,1}."""
    if g < 1:
        raise PreconditionError("g must be >= 1")
    acc = b_g(g) * harmonic(2 * g - 1)
    for g1 in range(1, g):
        g2 = g - g1
        acc -= Rational(factorial(2 * g1 - 1) * factorial(2 * g2 - 1), 2 * factorial(2 * g - 1)) * b_g(g1) * b_g(g2)
    return acc


# -- power sums -------------------------------------------------------------------


def power_sum(m: int, d: int) -> int:
    """sum_{i=1}^{d-1} i^m by direct summation."""
    return sum(i**m for i in range(1, d))


def power_sum_poly(m: int) -> list:
    """Ascending coefficients in d of the Bernoulli expansion of sum_{i=1}^{d-1} i^m.

    For m = 0 the expansion sum_k C(m+1,k)/(m+1) B_k d^{m+1-k} gives d, one more
    than the true count d - 1; the constant is corrected here.
    """
    out = [Rational(0)] * (m + 2)
    for k in range(m + 1):
        out[m + 1 - k] += Rational(comb(m + 1, k), m + 1) * bernoulli(k)
    if m == 0:
        out[0] -= 1
    return out


def _eval(cs, x):
    acc = Rational(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def power_sum_check(m: int, d: int) -> IdentityReport:
    if m < 1 or d < 2:
        raise PreconditionError("need m >= 1 and d >= 2")
    left = Rational(power_sum(m, d))
    right = sum(
        (Rational(comb(m + 1, k), m + 1) * bernoulli(k) * d ** (m + 1 - k) for k in range(m + 1)),
        Rational(0),
    )
    return _report("power-sum", {"m": m, "d": d}, left, right, ("directSum", "closedForm"))


# -- lemmas behind the lambda_{g-1} formula --------------------------------------------


def integration_by_parts_lemmas(g1: int, g2: int) -> IdentityReport:
    if g1 < 1 or g2 < 1:
        raise PreconditionError("g1, g2 must be >= 1")
    g = g1 + g2
    s1 = sum(
        (Rational((-1) ** (2 * g2 - 1 - k) * comb(2 * g2 - 1, k), 2 * g - 1 - k) for k in range(2 * g2)),
        Rational(0),
    )
    r1 = Rational(factorial(2 * g1 - 1) * factorial(2 * g2 - 1), factorial(2 * g - 1))
    s2 = sum((Rational((-1) ** i * comb(2 * g - 1, i), i) for i in range(1, 2 * g)), Rational(0))
    r2 = -harmonic(2 * g - 1)
    rep = IdentityReport(
        "integration-by-parts-lemmas",
        {"g1": g1, "g2": g2},
        [s1, s2],
        [r1, r2],
        s1 == r1 and s2 == r2,
        ("directSum", "closedForm"),
    )
    return rep


def f_g1g2_brute(g1: int, g2: int, d: int):
    """sum_{i+j=d, i,j>=1} i^{2g1-1} j^{2g2-1} by direct summation."""
    return sum(
        (Rational(i) ** (2 * g1 - 1) * Rational(d - i) ** (2 * g2 - 1) for i in range(1, d)),
        Rational(0),
    )


def _f_expansion(g1: int, g2: int):
    """(poly, harmonic_coeff): F(d) = poly(d) + harmonic_coeff d^{2g-1} H_{d-1}.

    Expands (d - i)^{2 g2 - 1} binomially and sums powers of i with
    :func:`power_sum_poly`; a g1 = 0 term i^{-1} d^{2g-1} gives the harmonic part.
    """
    if g1 == 0 and g2 == 0:
        raise PreconditionError("g1 + g2 must be >= 1")
    if g2 == 0:
        # F is symmetric under i <-> j
        return _f_expansion(g2, g1)
    g = g1 + g2
    a = 2 * g1 - 1  # exponent of i
    b = 2 * g2 - 1
    poly = [Rational(0)] * (2 * g + 1)
    harm = Rational(0)
    for k in range(b + 1):
        # (d - i)^b = sum_k C(b,k) d^k (-i)^{b-k}
        coeff = comb(b, k) * (-1) ** (b - k)
        m = a + b - k
        if m == -1:
            harm += coeff  # d^k with k = b = 2g - 1
            continue
        for e, c in enumerate(power_sum_poly(m)):
            poly[e + k] += coeff * c
    return poly, harm


def f_g1g2_coefficients(g1: int, g2: int, d: int | None = None) -> dict:
    """Coefficients of d and d^{2g-1} in the polynomial part of F_{g1,g2}(d),
    with the two stated predictions and an optional brute-force comparison at d."""
    g = g1 + g2
    poly, harm = _f_expansion(g1, g2)
    c1 = poly[1]
    ctop = poly[2 * g - 1]
    want1 = -bernoulli(2 * g - 2)
    if g1 > 0 and g2 > 0:
        wanttop = sum(
            (Rational((-1) ** (2 * g2 - 1 - k) * comb(2 * g2 - 1, k), 2 * g - 1 - k) for k in range(2 * g2)),
            Rational(0),
        )
    else:
        wanttop = sum((Rational((-1) ** i * comb(2 * g - 1, i), i) for i in range(1, 2 * g)), Rational(0))
    out = {
        "coeffOf_d": c1,
        "coeffOf_d2gMinus1": ctop,
        "harmonic": harm,
        "expected_d": want1,
        "expected_d2gMinus1": wanttop,
        "ok": c1 == want1 and ctop == wanttop,
    }
    if d is not None:
        val = _eval(poly, Rational(d)) + harm * Rational(d) ** (2 * g - 1) * harmonic(d - 1)
        brute = f_g1g2_brute(g1, g2, d)
        out["brute"] = brute
        out["value"] = val
        out["ok"] = out["ok"] and val == brute
    return out


# -- lambda_g reformulation ---------------------------------------------------


def lambda_g_multinomial_check(mu, g: int) -> IdentityReport:
    """lambda^{2g} coefficient of d^{n-3}(d lambda/2)/sin(d lambda/2) against
    sum_k prod mu_i^{k_i} * lambda_g_value(g, k), by explicit multinomial sums."""
    mu = tuple(mu)
    n = len(mu)
    d = sum(mu)
    left = Rational(d) ** (n - 3) * b_g(g) * Rational(d) ** (2 * g) if n >= 3 else b_g(g) * Rational(d) ** (2 * g) / Rational(d) ** (3 - n)
    total = 2 * g - 3 + n
    right = Rational(0)
    if total >= 0 and 2 * g - 2 + n > 0:
        for ks in iproduct(range(total + 1), repeat=n):
            if sum(ks) == total:
                right += prod(Rational(m) ** k for m, k in zip(mu, ks)) * lambda_g_value(g, ks)
    elif 2 * g - 2 + n <= 0:
        # unstable g = 0, n <= 2: the series convention d^{n-3} itself
        right = Rational(d) ** (n - 3) if n >= 3 else 1 / Rational(d) ** (3 - n)
    return _report("lambda-g-multinomial", {"mu": list(mu), "g": g}, left, right, ("closedForm", "directSum"))


# -- Bernoulli identities -----------------------------------------------------------


def _half_angle(kind: str, order: int) -> LambdaSeries:
    """(t/2)/sin(t/2), (t/2)/sinh(t/2) or (t/2)coth(t/2) to t^order."""
    if kind == "sin":
        return sin_double_half(1, order + 1).shift(-1).invert()
    if kind == "sinh":
        return sinh_double_half(1, order + 1).shift(-1).invert()
    if kind == "coth":
        cosh = LambdaSeries.from_rationals(
            0, [Rational(1, 2**e * factorial(e)) if e % 2 == 0 else Rational(0) for e in range(order + 1)]
        )
        return cosh * _half_angle("sinh", order)
    raise ValueError(kind)


def bernoulli_reports(max_index: int = 20) -> list[IdentityReport]:
    """Every Bernoulli identity up to index max_index (even), g <= max_index/2."""
    M = max_index
    G = M // 2
    out = []
    rec = [bernoulli(m) for m in range(M + 1)]
    ser = [bernoulli_by_series(m) for m in range(M + 1)]
    out.append(_report("bernoulli-two-ways", {"upto": M}, rec, ser, ("recursion", "seriesDivision")))
    signs_ok = all(bernoulli(2 * n) * (-1) ** (n - 1) > 0 for n in range(1, G + 1)) and all(
        bernoulli(2 * m + 1) == 0 for m in range(1, (M - 1) // 2 + 1)
    )
    out.append(IdentityReport("bernoulli-signs", {"upto": M}, signs_ok, True, signs_ok))
    for m in range(1, M + 1):
        s = sum((comb(m + 1, k) * bernoulli(k) for k in range(m + 1)), Rational(0))
        out.append(_report("bernoulli-recursion", {"m": m}, s, Rational(0)))
    sinh = _half_angle("sinh", M)
    for m in range(M + 1):
        want = Rational(2 ** 1 - 2**m, 2**m) * bernoulli(m) / factorial(m) if m else Rational(1)
        # (1 - 2^{m-1})/2^{m-1} = (2 - 2^m)/2^m
        out.append(_report("sinh-series", {"m": m}, sinh.scalar_coeff(m).re, want, ("seriesDivision", "closedForm")))
    coth = _half_angle("coth", M)
    for n in range(G + 1):
        out.append(
            _report("coth-series", {"n": n}, coth.scalar_coeff(2 * n).re, bernoulli(2 * n) / factorial(2 * n),
                    ("seriesDivision", "closedForm"))
        )
    sin = _half_angle("sin", M)
    for g in range(G + 1):
        out.append(_report("sin-series", {"g": g}, sin.scalar_coeff(2 * g).re, b_g(g), ("seriesDivision", "closedForm")))
    for n in range(G + 1):
        left = sum(
            (
                (1 - Rational(2) ** (1 - 2 * i)) / factorial(2 * i) * bernoulli(2 * i)
                * (1 - Rational(2) ** (1 - 2 * (n - i))) / factorial(2 * (n - i)) * bernoulli(2 * (n - i))
                for i in range(n + 1)
            ),
            Rational(0),
        )
        out.append(_report("bernoulli-square", {"n": n}, left, (1 - 2 * n) * bernoulli(2 * n) / factorial(2 * n)))
    for g in range(1, G + 1):
        left = sum((b_g(g1) * b_g(g - g1) for g1 in range(g + 1)), Rational(0))
        right = abs_b2(g) / (2 * g * factorial(2 * g - 2))
        out.append(_report("b-convolution", {"g": g}, left, right))
    for m in range(1, G + 1):
        for d in range(2, M + 1):
            out.append(power_sum_check(m, d))
    return out
