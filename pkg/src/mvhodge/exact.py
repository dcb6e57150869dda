"""Exact scalars: arbitrary-precision rationals and Gaussian rationals.

``Rational`` is :class:`gmpy2.mpq` when gmpy2 is importable and
:class:`fractions.Fraction` otherwise.  Both expose ``numerator`` and
``denominator`` and compare/hash equal to each other, so the rest of the
package never needs to know which one is live.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as Rational
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    Rational = Fraction
    HAVE_GMPY2 = False

__all__ = [
    "Rational",
    "Gaussian",
    "I",
    "ZERO",
    "ONE",
    "HAVE_GMPY2",
    "Q",
    "as_rational",
    "format_rational",
    "parse_rational",
    "i_power",
]

_ZERO_Q = Rational(0)
_ONE_Q = Rational(1)


def Q(num, den=1):
    """Build an exact rational ``num/den``."""
    if isinstance(num, str):
        return parse_rational(num) / Rational(den)
    return Rational(num, den) if den != 1 else Rational(num)


def as_rational(x):
    """Coerce an int/Fraction/mpq to ``Rational``; reject floats."""
    if isinstance(x, float):
        raise TypeError("floating-point values are not exact; pass an int or a rational")
    if isinstance(x, Gaussian):
        if x.im != 0:
            raise TypeError(f"{x} is not real")
        return x.re
    if type(x) is Rational:
        return x
    if isinstance(x, (int, _RationalABC)) or hasattr(x, "denominator"):
        return Rational(x.numerator, x.denominator) if not isinstance(x, int) else Rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x) -> str:
    """Serialize as ``"num/den"``; the denominator is always present."""
    x = as_rational(x)
    return f"{int(x.numerator)}/{int(x.denominator)}"


def parse_rational(s: str):
    s = s.strip().replace("−", "-")
    if "/" in s:
        num, den = s.split("/")
        den_i = int(den)
        if den_i <= 0:
            raise ValueError(f"bad denominator in {s!r}")
        return Rational(int(num), den_i)
    return Rational(int(s))


class Gaussian:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_rational(re)
        self.im = as_rational(im)

    @classmethod
    def _raw(cls, re, im):
        g = object.__new__(cls)
        g.re = re
        g.im = im
        return g

    @classmethod
    def coerce(cls, x) -> "Gaussian":
        if isinstance(x, Gaussian):
            return x
        if isinstance(x, complex):
            raise TypeError("complex floats are not exact")
        return cls._raw(as_rational(x), _ZERO_Q)

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __eq__(self, other):
        try:
            other = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return Gaussian._raw(-self.re, -self.im)

    def __add__(self, other):
        try:
            other = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return Gaussian._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return Gaussian._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Gaussian.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return Gaussian._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self):
        return self.re * self.re + self.im * self.im

    def conjugate(self):
        return Gaussian._raw(self.re, -self.im)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        return Gaussian._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            other = Gaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Gaussian.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Gaussian._raw(_ONE_Q, _ZERO_Q)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_real(self) -> bool:
        return self.im == 0

    def is_imaginary(self) -> bool:
        return self.re == 0


I = Gaussian(0, 1)
ZERO = Gaussian(0, 0)
ONE = Gaussian(1, 0)


def i_power(k: int) -> Gaussian:
    """``sqrt(-1)**k`` for any integer k, exactly."""
    return (ONE, I, -ONE, -I)[k % 4]
