"""Bernoulli numbers B_m with B_1 = -1/2, i.e. t/(e^t - 1) = sum B_m t^m/m!.

Two independent routes, both memoized:

* :func:`bernoulli` -- the recursion ``sum_{k<=m} C(m+1, k) B_k = 0``;
* :func:`bernoulli_by_series` -- inverting ``(e^t - 1)/t`` as a series.
"""

from __future__ import annotations

import threading
from math import comb, factorial

from .exact import Rational
from .series import LambdaSeries

__all__ = ["bernoulli", "bernoulli_numbers", "bernoulli_by_series", "abs_bernoulli"]

_lock = threading.Lock()
_rec_cache: list = [Rational(1)]
_series_cache: list = [Rational(1)]


def bernoulli(m: int):
    if m < 0:
        raise ValueError("m must be >= 0")
    with _lock:
        while len(_rec_cache) <= m:
            n = len(_rec_cache)
            s = sum((comb(n + 1, k) * _rec_cache[k] for k in range(n)), Rational(0))
            _rec_cache.append(-s / (n + 1))
        return _rec_cache[m]


def bernoulli_numbers(n: int) -> list:
    """[B_0, ..., B_n]."""
    bernoulli(n)
    with _lock:
        return list(_rec_cache[: n + 1])


def bernoulli_by_series(m: int):
    if m < 0:
        raise ValueError("m must be >= 0")
    with _lock:
        if len(_series_cache) <= m:
            # make room generously so repeated calls reuse one inversion
            top = max(m, 2 * len(_series_cache))
            denom = LambdaSeries.from_rationals(0, [Rational(1, factorial(k + 1)) for k in range(top + 1)])
            inv = denom.invert()
            _series_cache[:] = [inv.scalar_coeff(k).re * factorial(k) for k in range(top + 1)]
        return _series_cache[m]


def abs_bernoulli(m: int):
    """|B_m|, realized by sign rules rather than abs(): B_{2n} has sign (-1)^{n-1}."""
    b = bernoulli(m)
    if m % 2 == 0 and m > 0 and (m // 2) % 2 == 0:
        return -b
    if m == 1:
        return -b
    return b
