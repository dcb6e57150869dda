"""Truncated Laurent series in lambda with TauPolynomial coefficients.

A series stores the coefficients of ``lambda^min_exp .. lambda^order``.
Everything below ``min_exp`` is zero; everything above ``order`` is
unknown.  Arithmetic propagates ``order`` so that a coefficient which the
inputs do not determine can never be read back.
"""

from __future__ import annotations

from math import factorial

from .errors import NotAUnitError, PreconditionError, TruncationError
from .exact import Gaussian, Rational
from .poly import TauPolynomial, _ZERO_POLY, as_tau_poly, mul_acc

__all__ = [
    "LambdaSeries",
    "series_arith",
    "series_invert",
    "series_exp",
    "series_log",
    "sin_double_half",
    "sinh_double_half",
]

_Z = Rational(0)


class LambdaSeries:
    __slots__ = ("min_exp", "order", "_coeffs")

    def __init__(self, min_exp: int, coeffs=(), order: int | None = None):
        coeffs = [as_tau_poly(c) for c in coeffs]
        if order is None:
            order = min_exp + len(coeffs) - 1
        keep = order - min_exp + 1
        if keep < len(coeffs):
            coeffs = coeffs[: max(keep, 0)]
        elif keep > len(coeffs):
            coeffs.extend([_ZERO_POLY] * (keep - len(coeffs)))
        self._set(min_exp, order, coeffs)

    def _set(self, min_exp, order, coeffs):
        k = 0
        while k < len(coeffs) and coeffs[k].is_zero():
            k += 1
        self.min_exp = min_exp + k if k < len(coeffs) else order + 1
        self.order = order
        self._coeffs = tuple(coeffs[k:])

    @classmethod
    def _make(cls, min_exp, order, coeffs):
        s = object.__new__(cls)
        s._set(min_exp, order, coeffs)
        return s

    @classmethod
    def zero(cls, order: int) -> "LambdaSeries":
        return cls._make(order + 1, order, [])

    @classmethod
    def constant(cls, c, order: int) -> "LambdaSeries":
        return cls.monomial(c, 0, order)

    @classmethod
    def monomial(cls, c, exp: int, order: int) -> "LambdaSeries":
        if order < exp:
            return cls.zero(order)
        return cls._make(exp, order, [as_tau_poly(c)] + [_ZERO_POLY] * (order - exp))

    @classmethod
    def from_rationals(cls, min_exp: int, values, order: int | None = None) -> "LambdaSeries":
        return cls(min_exp, [TauPolynomial.from_parts((Rational(v),)) for v in values], order)

    # -- inspection -------------------------------------------------------

    def coeff(self, e: int) -> TauPolynomial:
        if e > self.order:
            raise TruncationError(f"coefficient of lambda^{e} requested, series valid only to lambda^{self.order}")
        if e < self.min_exp:
            return _ZERO_POLY
        return self._coeffs[e - self.min_exp]

    __getitem__ = coeff

    def exponents(self):
        return range(self.min_exp, self.order + 1)

    def items(self):
        """(exponent, TauPolynomial) pairs over the stored range."""
        return zip(self.exponents(), self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self):
        return None if self.is_zero() else self.min_exp

    def tau_degree(self) -> int:
        return max((c.degree for c in self._coeffs), default=-1)

    def is_tau_constant(self) -> bool:
        return all(c.is_constant() for c in self._coeffs)

    def scalar_coeff(self, e: int) -> Gaussian:
        """Coefficient of lambda^e when the series does not involve tau."""
        p = self.coeff(e)
        if p.degree > 0:
            raise PreconditionError(f"coefficient of lambda^{e} depends on tau")
        return p[0]

    def scalar_coeffs(self, lo: int | None = None, hi: int | None = None) -> list:
        lo = self.min_exp if lo is None else lo
        hi = self.order if hi is None else hi
        return [self.scalar_coeff(e) for e in range(lo, hi + 1)]

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self.order == other.order and self.min_exp == other.min_exp and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.min_exp, self.order, self._coeffs))

    def __repr__(self):
        terms = [f"{c!r}*lambda^{e}" for e, c in self.items() if c]
        body = " + ".join(terms) if terms else "0"
        return f"LambdaSeries({body} + O(lambda^{self.order + 1}))"

    def mismatches(self, other: "LambdaSeries", upto: int | None = None) -> list[tuple[int, int]]:
        """(lambda-exponent, tau-degree) pairs where the two series differ.

        Compared up to the common validity order (and *upto* if given).
        """
        hi = min(self.order, other.order)
        if upto is not None:
            hi = min(hi, upto)
        lo = min(self.min_exp, other.min_exp)
        out = []
        for e in range(lo, hi + 1):
            p, q = self.coeff(e), other.coeff(e)
            if p != q:
                d = p - q
                out.extend((e, j) for j in range(d.degree + 1) if d[j])
        return out

    # -- arithmetic -------------------------------------------------------

    def _binop(self, other, negate):
        if not isinstance(other, LambdaSeries):
            raise TypeError("series arithmetic needs two LambdaSeries; use scale() for scalars")
        order = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp)
        out = []
        for e in range(lo, order + 1):
            p, q = self.coeff(e), other.coeff(e)
            out.append(p - q if negate else p + q)
        return LambdaSeries._make(lo, order, out)

    def __add__(self, other):
        return self._binop(other, False)

    def __sub__(self, other):
        return self._binop(other, True)

    def __neg__(self):
        return LambdaSeries._make(self.min_exp, self.order, [-c for c in self._coeffs])

    def __mul__(self, other):
        if not isinstance(other, LambdaSeries):
            return self.scale(other)
        a, b = self, other
        lo = a.min_exp + b.min_exp
        hi = min(a.order + b.min_exp, b.order + a.min_exp)
        if hi < lo:
            return LambdaSeries.zero(hi)
        ac, bc = a._coeffs, b._coeffs
        adeg = [c.degree for c in ac]
        bdeg = [c.degree for c in bc]
        out = []
        for k in range(hi - lo + 1):
            size = -1
            for i in range(k + 1):
                if adeg[i] >= 0 and bdeg[k - i] >= 0:
                    s = adeg[i] + bdeg[k - i]
                    if s > size:
                        size = s
            if size < 0:
                out.append(_ZERO_POLY)
                continue
            re = [_Z] * (size + 1)
            im = [_Z] * (size + 1)
            for i in range(k + 1):
                if adeg[i] >= 0 and bdeg[k - i] >= 0:
                    mul_acc(re, im, ac[i], bc[k - i])
            out.append(TauPolynomial.from_parts(re, im))
        return LambdaSeries._make(lo, hi, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "LambdaSeries":
        """Multiply by a Gaussian scalar or a TauPolynomial."""
        if isinstance(c, TauPolynomial):
            return LambdaSeries._make(self.min_exp, self.order, [x * c for x in self._coeffs])
        g = Gaussian.coerce(c)
        if g == 1:
            return self
        return LambdaSeries._make(self.min_exp, self.order, [x.scale(g) for x in self._coeffs])

    def shift(self, k: int) -> "LambdaSeries":
        """Multiply by lambda^k."""
        return LambdaSeries._make(self.min_exp + k, self.order + k, list(self._coeffs))

    def truncate(self, order: int) -> "LambdaSeries":
        if order >= self.order:
            return self
        keep = max(order - self.min_exp + 1, 0)
        return LambdaSeries._make(self.min_exp, order, list(self._coeffs[:keep]))

    def map_coeffs(self, fn) -> "LambdaSeries":
        return LambdaSeries._make(self.min_exp, self.order, [fn(c) for c in self._coeffs])

    def deriv_tau(self) -> "LambdaSeries":
        return self.map_coeffs(TauPolynomial.deriv)

    def eval_tau(self, r) -> "LambdaSeries":
        return self.map_coeffs(lambda c: TauPolynomial.constant(c.eval_at(r)))

    def tau_coefficient(self, j: int) -> "LambdaSeries":
        return self.map_coeffs(lambda c: TauPolynomial.constant(c[j]))

    def deriv_lambda(self) -> "LambdaSeries":
        return LambdaSeries._make(
            self.min_exp - 1, self.order - 1, [c.scale(e) for e, c in self.items()]
        )

    def invert(self) -> "LambdaSeries":
        return series_invert(self)

    def exp(self) -> "LambdaSeries":
        return series_exp(self)

    def log(self) -> "LambdaSeries":
        return series_log(self)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._coeffs)


def series_arith(a: LambdaSeries, b: LambdaSeries, op: str) -> LambdaSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def series_invert(a: LambdaSeries) -> LambdaSeries:
    """Multiplicative inverse.  The leading coefficient must be a nonzero
    tau-constant (a unit of the coefficient ring)."""
    if a.is_zero():
        raise NotAUnitError("leading coefficient not a unit: series is zero to its known order")
    lead = a._coeffs[0]
    if lead.degree != 0:
        raise NotAUnitError(f"leading coefficient not a unit: {lead!r}")
    m = a.min_exp
    rel = a.order - m
    u = a._coeffs
    inv0 = lead[0].inverse()
    v = [TauPolynomial.constant(inv0)]
    for n in range(1, rel + 1):
        acc = _ZERO_POLY
        for k in range(1, n + 1):
            if u[k] and v[n - k]:
                acc = acc + u[k] * v[n - k]
        v.append(acc.scale(-inv0))
    return LambdaSeries._make(-m, a.order - 2 * m, v)


def series_exp(a: LambdaSeries) -> LambdaSeries:
    if a.order < 0:
        raise PreconditionError("exp needs a series known at least to lambda^0")
    if not a.is_zero() and a.min_exp < 1:
        raise PreconditionError("exp needs a series without constant or polar part")
    N = a.order
    ak = [a.coeff(k) for k in range(N + 1)]
    f = [TauPolynomial.constant(1)]
    for n in range(1, N + 1):
        acc = _ZERO_POLY
        for k in range(1, n + 1):
            if ak[k] and f[n - k]:
                acc = acc + (ak[k] * f[n - k]).scale(k)
        f.append(acc.scale(Rational(1, n)))
    return LambdaSeries._make(0, N, f)


def series_log(a: LambdaSeries) -> LambdaSeries:
    if a.order < 0 or a.min_exp != 0 or a.coeff(0) != TauPolynomial.constant(1):
        raise PreconditionError("log needs a series with constant term exactly 1")
    N = a.order
    ak = [a.coeff(k) for k in range(N + 1)]
    b = [_ZERO_POLY]
    for n in range(1, N + 1):
        acc = _ZERO_POLY
        for k in range(1, n):
            if b[k] and ak[n - k]:
                acc = acc + (b[k] * ak[n - k]).scale(k)
        b.append(ak[n] - acc.scale(Rational(1, n)))
    return LambdaSeries._make(0, N, b)


def _odd_trig(h: int, order: int, alternating: bool) -> LambdaSeries:
    if h < 1:
        raise PreconditionError("h must be a positive integer")
    half = Rational(h, 2)
    vals = []
    for e in range(0, order + 1):
        if e % 2 == 0:
            vals.append(_Z)
        else:
            k = (e - 1) // 2
            sign = -1 if (alternating and k % 2) else 1
            vals.append(2 * sign * half**e / factorial(e))
    return LambdaSeries.from_rationals(0, vals, order)


def sin_double_half(h: int, order: int) -> LambdaSeries:
    """``2 sin(h*lambda/2)`` to lambda^order."""
    return _odd_trig(h, order, True)


def sinh_double_half(h: int, order: int) -> LambdaSeries:
    """``2 sinh(h*lambda/2)`` to lambda^order."""
    return _odd_trig(h, order, False)


def exp_scaled(c, order: int) -> LambdaSeries:
    """``exp(c*lambda)`` for a Gaussian or TauPolynomial *c*."""
    c = as_tau_poly(c)
    terms = [TauPolynomial.constant(1)]
    for k in range(1, order + 1):
        terms.append((terms[-1] * c).scale(Rational(1, k)))
    return LambdaSeries._make(0, order, terms)
