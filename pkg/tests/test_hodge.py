from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvhodge.errors import PreconditionError
from mvhodge.exact import Q
from mvhodge.hodge import (
    HodgeClass,
    MumfordIdeal,
    _monomials_of_degree,
    _sum_k_ch,
    _tpoly_deriv,
    _tpoly_eval,
    check_ch_displays,
    check_derivative1,
    check_mumford_product,
    chern_char,
    chern_char_newton,
    lam,
    lambda_dual,
    mumford_generator,
    mumford_ideal,
    verify_derivative_lemma,
)


def is_zero(x):
    return mumford_ideal(x.genus).reduce(x).is_zero


def test_reduce_examples():
    g = 2
    assert is_zero(lam(g, 1) * lam(g, 1) - lam(g, 2).scale(2))
    assert not is_zero(lam(g, 1))
    res = mumford_ideal(g).reduce(HodgeClass.zero(g))
    assert res.is_zero and res.witness == []


def test_degree_guard():
    ideal = MumfordIdeal(2, max_degree=3)
    with pytest.raises(PreconditionError):
        ideal.reduce(lam(2, 2) * lam(2, 2))


def test_chern_char_examples():
    g = 2
    assert chern_char(g, 2) == (lam(g, 1) * lam(g, 1) - lam(g, 2).scale(2)).scale(Q(1, 2))
    assert is_zero(chern_char(g, 2))
    assert is_zero(chern_char(g, 3).scale(6) - (lam(g, 1) * lam(g, 2)).scale((-1) ** (g - 1)))
    for g in range(1, 5):
        for n in range(2 * g, 2 * g + 3):
            assert is_zero(chern_char(g, n))


@pytest.mark.parametrize("g", range(1, 6))
def test_chern_char_forms_agree_modulo_relations(g):
    for n in range(1, 2 * g + 2):
        assert is_zero(chern_char(g, n) - chern_char_newton(g, n))


def strict_partitions_count(d, g):
    """Strict partitions of d with parts <= g: the Hilbert function of the quotient."""
    ways = [1] + [0] * d
    for part in range(1, g + 1):
        for s in range(d, part - 1, -1):
            ways[s] += ways[s - part]
    return ways[d]


@pytest.mark.parametrize("g", range(1, 5))
def test_ideal_ranks_match_quotient_dimension(g):
    ideal = mumford_ideal(g)
    for d in range(0, 3 * g + 1):
        total = len(list(_monomials_of_degree(g, d)))
        assert ideal.rank(d) == total - strict_partitions_count(d, g)


@pytest.mark.parametrize("g", range(1, 7))
def test_all_display_checks(g):
    checks = check_mumford_product(g) + check_derivative1(g) + check_ch_displays(g) + verify_derivative_lemma(g)
    assert [c.name for c in checks if not c.passed] == []


def test_negative_controls():
    # the first derivative identity without the (-1)^g sign fails in odd genus
    for g, should_hold in [(1, False), (2, True), (3, False)]:
        a = lambda_dual(g)
        lhs = _tpoly_eval(a, 1, g) * _tpoly_eval(_tpoly_deriv(a), -1, g)
        rhs = HodgeClass.one(g).scale((-1) ** (g - 1) * g) + _sum_k_ch(g)
        assert is_zero(lhs - rhs) == should_hold
    # the top power of lambda_1 survives
    for g in range(1, 4):
        assert not is_zero(lam(g, 1) ** (g * (g + 1) // 2))
    # a lone generator lambda_g is never in the ideal
    for g in range(1, 5):
        assert not is_zero(lam(g, g))


@st.composite
def ideal_element(draw, g):
    acc = HodgeClass.zero(g)
    for _ in range(draw(st.integers(1, 3))):
        k = draw(st.integers(1, g))
        d = draw(st.integers(0, max(0, 3 * g - 2 * k)))
        mons = list(_monomials_of_degree(g, d))
        m = draw(st.sampled_from(mons))
        c = draw(st.integers(-4, 4))
        acc = acc + HodgeClass(g, {m: c}) * mumford_generator(g, k)
    return acc


@given(st.integers(1, 4).flatmap(lambda g: ideal_element(g)))
def test_ideal_elements_reduce_with_valid_witness(x):
    ideal = mumford_ideal(x.genus)
    res = ideal.reduce(x)
    assert res.is_zero
    assert ideal.expand_witness(res.witness) == x


@given(st.integers(1, 4).flatmap(lambda g: st.tuples(ideal_element(g), st.integers(1, g))))
def test_reduction_ignores_ideal_shifts(pair):
    x, i = pair
    g = x.genus
    y = lam(g, i)
    assert is_zero(y + x) == is_zero(y)
