from __future__ import annotations

from math import comb

from hypothesis import given
from hypothesis import strategies as st

from mvhodge.bernoulli import abs_bernoulli, bernoulli, bernoulli_by_series, bernoulli_numbers
from mvhodge.exact import Q


def test_first_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Q(-1, 2)
    assert bernoulli(2) == Q(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Q(-1, 30)
    assert bernoulli(20) == Q(-174611, 330)


def test_two_computations_agree():
    assert [bernoulli_by_series(m) for m in range(21)] == bernoulli_numbers(20)


@given(st.integers(1, 30))
def test_recursion_identity(m):
    assert sum(comb(m + 1, k) * bernoulli(k) for k in range(m + 1)) == 0


@given(st.integers(1, 15))
def test_sign_pattern(n):
    assert (bernoulli(2 * n) > 0) == (n % 2 == 1)
    assert bernoulli(2 * n + 1) == 0
    assert abs_bernoulli(2 * n) == abs(bernoulli(2 * n))
