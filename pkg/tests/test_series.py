from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvhodge.errors import NotAUnitError, PreconditionError, TruncationError
from mvhodge.exact import Gaussian, Q, Rational
from mvhodge.poly import TauPolynomial
from mvhodge.series import LambdaSeries, exp_scaled, sin_double_half, sinh_double_half

small = st.integers(-20, 20).flatmap(lambda n: st.integers(1, 12).map(lambda d: Rational(n, d)))


def series_strategy(min_exp=st.integers(-2, 2), length=st.integers(1, 6), order_pad=st.integers(0, 2)):
    return st.builds(
        lambda m, vals, pad: LambdaSeries.from_rationals(m, vals, m + len(vals) - 1 + pad),
        min_exp,
        length.flatmap(lambda n: st.lists(small, min_size=n, max_size=n)),
        order_pad,
    )


def real_coeffs(s, lo, hi):
    return [s.scalar_coeff(e).re for e in range(lo, hi + 1)]


def test_exponent_cancellation():
    a = LambdaSeries.monomial(1, -1, 4)
    b = LambdaSeries.monomial(1, 1, 4)
    p = a * b
    assert p.scalar_coeff(0) == Gaussian(1)
    assert all(p.scalar_coeff(e) == Gaussian(0) for e in range(1, p.order + 1))


def test_difference_of_squares():
    a = LambdaSeries.from_rationals(0, [1, 1], 2)
    b = LambdaSeries.from_rationals(0, [1, -1], 2)
    assert real_coeffs(a * b, 0, 2) == [1, 0, -1]


def test_order_bookkeeping_for_polar_factors():
    a = LambdaSeries.from_rationals(-1, [1, 1, 1, 1, 1, 1], 4)
    p = a * a
    assert p.order <= 3
    with pytest.raises(TruncationError):
        p.coeff(p.order + 1)


def test_invert_matches_half_angle_series():
    a = LambdaSeries.from_rationals(0, [1, 0, Q(-1, 24), 0, Q(1, 1920)], 4)
    assert real_coeffs(a.invert(), 0, 4) == [1, 0, Q(1, 24), 0, Q(7, 5760)]
    assert real_coeffs(LambdaSeries.constant(2, 3).invert(), 0, 0) == [Q(1, 2)]


def test_invert_requires_unit_leading_coefficient():
    with pytest.raises(NotAUnitError, match="not a unit"):
        LambdaSeries(0, [TauPolynomial.tau(), TauPolynomial.constant(1)], 2).invert()
    with pytest.raises(NotAUnitError):
        LambdaSeries.zero(3).invert()


def test_exp_examples():
    assert real_coeffs(LambdaSeries.zero(3).exp(), 0, 3) == [1, 0, 0, 0]
    assert real_coeffs(LambdaSeries.monomial(1, 1, 3).exp(), 0, 3) == [1, 1, Q(1, 2), Q(1, 6)]
    c = TauPolynomial([Gaussian(0, Q(1, 2)), Gaussian(0, 1)])  # i(tau + 1/2)
    e = LambdaSeries(1, [c], 2).exp()
    half = TauPolynomial([Q(1, 2), 1])
    assert e.coeff(1) == c
    assert e.coeff(2) == (half * half).scale(Q(-1, 2))
    with pytest.raises(PreconditionError):
        LambdaSeries.constant(1, 3).exp()


def test_log_examples():
    assert LambdaSeries.constant(1, 3).log().is_zero()
    assert real_coeffs(exp_scaled(1, 4).log(), 0, 4) == [0, 1, 0, 0, 0]
    assert real_coeffs(LambdaSeries.from_rationals(0, [1, 1, Q(1, 2)], 2).log(), 0, 2) == [0, 1, 0]
    with pytest.raises(PreconditionError):
        LambdaSeries.constant(2, 3).log()


def test_sine_series():
    assert real_coeffs(sin_double_half(1, 5), 0, 5) == [0, 1, 0, Q(-1, 24), 0, Q(1, 1920)]
    assert real_coeffs(sin_double_half(2, 3), 0, 3) == [0, 2, 0, Q(-1, 3)]
    for h in range(1, 6):
        assert sin_double_half(h, 6).scalar_coeff(0) == Gaussian(0)
        assert sinh_double_half(h, 6).scalar_coeff(0) == Gaussian(0)


@given(series_strategy(), series_strategy(), series_strategy())
def test_ring_axioms(a, b, c):
    assert (a * b).mismatches(b * a) == []
    assert ((a + b) * c).mismatches(a * c + b * c) == []
    assert ((a * b) * c).mismatches(a * (b * c)) == []


@given(series_strategy())
def test_inverse_property(a):
    if a.is_zero():
        return
    p = a * a.invert()
    assert p.mismatches(LambdaSeries.constant(1, p.order)) == []


@given(st.lists(small, min_size=1, max_size=6))
def test_exp_log_inverse(vals):
    a = LambdaSeries.from_rationals(1, vals, len(vals))
    assert a.exp().log().mismatches(a) == []


@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=5))
def test_exp_is_homomorphism(u, v):
    n = min(len(u), len(v))
    a = LambdaSeries.from_rationals(1, u[:n], n)
    b = LambdaSeries.from_rationals(1, v[:n], n)
    assert (a + b).exp().mismatches(a.exp() * b.exp()) == []


@given(series_strategy())
def test_derivative_leibniz(a):
    b = LambdaSeries.from_rationals(0, [1, 2, 3], a.order + 2)
    lhs = (a * b).deriv_lambda()
    rhs = a.deriv_lambda() * b + a * b.deriv_lambda()
    assert lhs.mismatches(rhs) == []


def test_tau_coefficient_dependence_guarded():
    s = LambdaSeries(0, [TauPolynomial.tau()], 2)
    with pytest.raises(PreconditionError):
        s.scalar_coeff(0)
    assert s.deriv_tau().scalar_coeff(0) == Gaussian(1)
    assert s.eval_tau(Gaussian(3)).scalar_coeff(0) == Gaussian(3)
