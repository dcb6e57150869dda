"""Polynomials in the formal parameter tau over the Gaussian rationals.

Real and imaginary coefficient lists are stored separately.  Almost every
polynomial met in practice is purely real or purely imaginary, and the
split lets products skip the zero half.
"""

from __future__ import annotations

from ._backend import conv_acc
from .exact import Gaussian, Rational, as_rational

__all__ = ["TauPolynomial", "tau_ops"]

_Z = Rational(0)


def _trim(xs):
    n = len(xs)
    while n and not xs[n - 1]:
        n -= 1
    return tuple(xs[:n])


def _vadd(a, b, negate_b=False):
    if len(a) < len(b):
        out = list(a) + [_Z] * (len(b) - len(a))
    else:
        out = list(a)
    if negate_b:
        for k, v in enumerate(b):
            out[k] -= v
    else:
        for k, v in enumerate(b):
            out[k] += v
    return _trim(out)


class TauPolynomial:
    """Immutable polynomial ``sum_j c_j tau^j`` with Gaussian coefficients."""

    __slots__ = ("_re", "_im")

    def __init__(self, coeffs=()):
        re, im = [], []
        for c in coeffs:
            g = Gaussian.coerce(c)
            re.append(g.re)
            im.append(g.im)
        self._re = _trim(re)
        self._im = _trim(im)

    @classmethod
    def from_parts(cls, re=(), im=()):
        p = object.__new__(cls)
        p._re = _trim(list(re))
        p._im = _trim(list(im))
        return p

    @classmethod
    def constant(cls, c) -> "TauPolynomial":
        g = Gaussian.coerce(c)
        return cls.from_parts((g.re,), (g.im,))

    @classmethod
    def tau(cls) -> "TauPolynomial":
        return cls.from_parts((_Z, Rational(1)))

    # -- inspection -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree in tau; -1 for the zero polynomial."""
        return max(len(self._re), len(self._im)) - 1

    @property
    def coefficients(self) -> tuple:
        n = self.degree + 1
        return tuple(self[j] for j in range(n))

    def __getitem__(self, j: int) -> Gaussian:
        re = self._re[j] if 0 <= j < len(self._re) else _Z
        im = self._im[j] if 0 <= j < len(self._im) else _Z
        return Gaussian._raw(re, im)

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.degree <= 0

    def is_real(self) -> bool:
        return not self._im

    def is_imaginary(self) -> bool:
        return not self._re

    def low_degree(self) -> int:
        """Smallest j with a nonzero tau^j coefficient (-1 if zero)."""
        for j in range(self.degree + 1):
            if self[j]:
                return j
        return -1

    def __eq__(self, other):
        if not isinstance(other, TauPolynomial):
            try:
                other = TauPolynomial.constant(other)
            except TypeError:
                return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        return hash((self._re, self._im))

    def __repr__(self):
        if self.is_zero():
            return "TauPolynomial(0)"
        terms = []
        for j, c in enumerate(self.coefficients):
            if c:
                terms.append(f"({c})*tau^{j}" if j else f"({c})")
        return "TauPolynomial(" + " + ".join(terms) + ")"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TauPolynomial):
            other = TauPolynomial.constant(other)
        return TauPolynomial.from_parts(_vadd(self._re, other._re), _vadd(self._im, other._im))

    __radd__ = __add__

    def __neg__(self):
        return TauPolynomial.from_parts([-c for c in self._re], [-c for c in self._im])

    def __sub__(self, other):
        if not isinstance(other, TauPolynomial):
            other = TauPolynomial.constant(other)
        return TauPolynomial.from_parts(
            _vadd(self._re, other._re, True), _vadd(self._im, other._im, True)
        )

    def __rsub__(self, other):
        return TauPolynomial.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, TauPolynomial):
            return self.scale(other)
        n = self.degree + other.degree + 1
        if n <= 0:
            return _ZERO_POLY
        re = [_Z] * n
        im = [_Z] * n
        mul_acc(re, im, self, other)
        return TauPolynomial.from_parts(re, im)

    __rmul__ = __mul__

    def scale(self, c) -> "TauPolynomial":
        g = Gaussian.coerce(c)
        a, b = g.re, g.im
        if not b:
            return TauPolynomial.from_parts([a * x for x in self._re], [a * x for x in self._im])
        ar, ai = self._re, self._im
        n = max(len(ar), len(ai))
        re = [_Z] * n
        im = [_Z] * n
        for k, x in enumerate(ar):
            re[k] += a * x
            im[k] += b * x
        for k, y in enumerate(ai):
            re[k] -= b * y
            im[k] += a * y
        return TauPolynomial.from_parts(re, im)

    def shift(self, k: int) -> "TauPolynomial":
        """Multiply by tau^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative tau shift; use divide_tau_power")
        if self.is_zero():
            return self
        pad = (_Z,) * k
        return TauPolynomial.from_parts(pad + self._re if self._re else (), pad + self._im if self._im else ())

    def divide_tau_power(self, k: int) -> "TauPolynomial":
        """Exact division by tau^k; raises if tau^k does not divide."""
        for j in range(min(k, self.degree + 1)):
            if self[j]:
                raise ArithmeticError(f"tau^{k} does not divide {self!r}")
        return TauPolynomial.from_parts(self._re[k:], self._im[k:])

    def deriv(self) -> "TauPolynomial":
        return TauPolynomial.from_parts(
            [j * c for j, c in enumerate(self._re)][1:], [j * c for j, c in enumerate(self._im)][1:]
        )

    def eval_at(self, r) -> Gaussian:
        """Horner evaluation at a Gaussian rational point."""
        r = Gaussian.coerce(r)
        acc = Gaussian(0)
        for c in reversed(self.coefficients):
            acc = acc * r + c
        return acc

    def real_part(self) -> "TauPolynomial":
        return TauPolynomial.from_parts(self._re, ())

    def imag_part(self) -> "TauPolynomial":
        return TauPolynomial.from_parts(self._im, ())


_ZERO_POLY = TauPolynomial.from_parts((), ())


def mul_acc(re, im, p: TauPolynomial, q: TauPolynomial):
    """Accumulate the product ``p*q`` into coefficient lists *re*, *im*."""
    pr, pi, qr, qi = p._re, p._im, q._re, q._im
    if pr:
        if qr:
            conv_acc(re, pr, qr)
        if qi:
            conv_acc(im, pr, qi)
    if pi:
        if qi:
            conv_acc(re, pi, qi, True)
        if qr:
            conv_acc(im, pi, qr)


def tau_ops(p: TauPolynomial, op: str, r=None):
    """``op='derivTau'`` differentiates; ``op='evalAt'`` evaluates at *r*."""
    if op == "derivTau":
        return p.deriv()
    if op == "evalAt":
        if r is None:
            raise ValueError("evalAt needs a point")
        return p.eval_at(r)
    raise ValueError(f"unknown tau operation {op!r}")


def as_tau_poly(x) -> TauPolynomial:
    if isinstance(x, TauPolynomial):
        return x
    return TauPolynomial.constant(x)


def rational_poly(coeffs) -> TauPolynomial:
    return TauPolynomial.from_parts([as_rational(c) for c in coeffs], ())
