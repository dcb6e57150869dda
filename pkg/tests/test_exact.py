from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvhodge.exact import Gaussian, Q, Rational, as_rational, format_rational, i_power, parse_rational
from mvhodge.poly import TauPolynomial, tau_ops

rationals = st.fractions(max_denominator=10**6).map(lambda f: Rational(f.numerator, f.denominator))
gaussians = st.builds(Gaussian, rationals, rationals)


def test_format_always_has_denominator():
    assert format_rational(Rational(1)) == "1/1"
    assert format_rational(Q(-7, 5760)) == "-7/5760"
    assert format_rational(Fraction(2, 4)) == "1/2"


def test_parse_accepts_unicode_minus():
    assert parse_rational("−7/5760") == Q(-7, 5760)
    assert parse_rational("3") == 3
    with pytest.raises(ValueError):
        parse_rational("1/0")


@given(rationals)
def test_rational_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        Gaussian(0.5)


def test_i_power_cycle():
    assert [i_power(k) for k in range(4)] == [Gaussian(1), Gaussian(0, 1), Gaussian(-1), Gaussian(0, -1)]
    assert i_power(-1) == Gaussian(0, -1)
    assert i_power(7) == i_power(3)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if a != Gaussian(0):
        assert a * a.inverse() == Gaussian(1)


def test_tau_ops_examples():
    p = TauPolynomial([0, 3, 1])  # tau^2 + 3 tau
    assert tau_ops(p, "derivTau") == TauPolynomial([3, 2])
    assert tau_ops(TauPolynomial([Q(1, 2), 1]), "evalAt", 0) == Gaussian(Q(1, 2))
    c = Gaussian(Q(2, 3), 5)
    assert tau_ops(TauPolynomial.constant(c), "evalAt", Gaussian(7, -1)) == c


@given(st.lists(gaussians, max_size=5), st.lists(gaussians, max_size=5), gaussians)
def test_tau_eval_is_ring_hom(p, q, r):
    P, Qp = TauPolynomial(p), TauPolynomial(q)
    assert (P * Qp).eval_at(r) == P.eval_at(r) * Qp.eval_at(r)
    assert (P + Qp).eval_at(r) == P.eval_at(r) + Qp.eval_at(r)
