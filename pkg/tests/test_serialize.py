from __future__ import annotations

import json

from hypothesis import given
from hypothesis import strategies as st

from mvhodge.exact import Gaussian, Rational
from mvhodge.hurwitz import burnside_phi, hurwitz_table
from mvhodge.mv import build_R, quantum_dim
from mvhodge.partitions import Partition
from mvhodge.serialize import (
    dumps,
    gaussian_from_json,
    hurwitz_csv,
    pseries_from_json,
    series_from_json,
    to_jsonable,
)
from mvhodge.series import LambdaSeries

rat = st.fractions(max_denominator=10**9).map(lambda f: Rational(f.numerator, f.denominator))


@given(rat, rat)
def test_gaussian_round_trip(a, b):
    g = Gaussian(a, b)
    assert gaussian_from_json(json.loads(json.dumps(to_jsonable(g)))) == g


@given(st.integers(-3, 3), st.lists(rat, max_size=6), st.integers(0, 3))
def test_series_round_trip(m, vals, pad):
    s = LambdaSeries.from_rationals(m, vals, m + len(vals) - 1 + pad)
    back = series_from_json(json.loads(dumps(s)))
    assert back.order == s.order and back.mismatches(s) == []


def test_series_schema():
    d = to_jsonable(quantum_dim((1,), 1))
    assert d["minExp"] == -1 and d["order"] == 1
    assert d["coeffs"][0] == [{"re": "1/1", "im": "0/1"}]
    assert d["coeffs"][1] == []


def test_partition_series_round_trip_with_tau():
    R = build_R(3, 4).R.truncate(4)
    data = json.loads(dumps(R))
    assert list(data) == ["1", "2", "1.1", "3", "2.1", "1.1.1"]
    assert pseries_from_json(data, 3) == R


def test_dumps_deterministic():
    phi = burnside_phi(4, 6)
    assert dumps(phi) == dumps(burnside_phi(4, 6))


def test_hurwitz_csv():
    text = hurwitz_csv(hurwitz_table(1, 0, ("oracle",)))
    assert text == "g,mu,r,H,method\n0,1,0,1/1,oracle\n"
    assert to_jsonable(Partition((3, 1, 1))) == [3, 1, 1]
