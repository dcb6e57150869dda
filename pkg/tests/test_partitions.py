from __future__ import annotations

from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvhodge.partitions import (
    EMPTY,
    Partition,
    canonical_key,
    character,
    character_table,
    character_table_csv,
    conjugacy_class_size,
    dim,
    kappa,
    partition_stats,
    partitions_of,
    partitions_up_to,
    z_order,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_enumeration_examples():
    assert partitions_of(1) == [(1,)]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions_of(5)) == 7
    assert [len(partitions_of(n)) for n in range(11)] == PARTITION_COUNTS


def test_canonical_order():
    ps = partitions_up_to(4, include_empty=True)
    assert ps[0] == EMPTY
    assert ps == sorted(ps, key=canonical_key)
    assert Partition((3,)) < Partition((2, 1)) < Partition((1, 1, 1)) < Partition((4,))


def test_string_forms():
    assert str(Partition((3, 1, 1))) == "3.1.1"
    assert str(EMPTY) == "0"
    assert Partition.parse("1.3.1") == (3, 1, 1)
    assert Partition.parse("2,1") == (2, 1)
    assert Partition.parse("0") == EMPTY
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_stats_examples():
    assert partition_stats(Partition((1,))) == {"z": 1, "autOrder": 1, "kappa": 0, "hooks": [1], "dim": 1}
    s = partition_stats(Partition((2, 1)))
    assert (s["z"], s["autOrder"], s["hooks"], s["dim"]) == (2, 1, [3, 1, 1], 2)
    assert kappa((2,)) == 2 and kappa((1, 1)) == -2


def test_character_examples():
    for mu in partitions_of(4):
        assert character((4,), mu) == 1
    assert character((1, 1), (2,)) == -1
    assert character((2, 1), (3,)) == -1
    with pytest.raises(ValueError):
        character((2,), (1, 1, 1))


def test_class_sizes():
    assert conjugacy_class_size((1, 1, 1)) == 1
    assert conjugacy_class_size((2, 1)) == 3
    assert conjugacy_class_size((3,)) == 2


@pytest.mark.parametrize("n", range(1, 9))
def test_character_table_orthogonality(n):
    parts = partitions_of(n)
    tab = character_table(n)
    for a in parts:
        for b in parts:
            col = sum(tab[(nu, a)] * tab[(nu, b)] for nu in parts)
            assert col == (z_order(a) if a == b else 0)
    ident = (1,) * n
    for nu in parts:
        assert tab[(nu, Partition(ident))] == dim(nu)
    assert sum(dim(nu) ** 2 for nu in parts) == factorial(n)


@given(st.integers(1, 10).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_conjugation_properties(mu):
    c = mu.conjugate()
    assert c.conjugate() == mu
    assert c.weight == mu.weight
    assert kappa(c) == -kappa(mu)
    assert dim(c) == dim(mu)
    assert sum(conjugacy_class_size(nu) for nu in partitions_of(mu.weight)) == factorial(mu.weight)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def test_sign_twist(pair):
    nu, mu = pair
    sign = (-1) ** (mu.weight - mu.length)
    assert character(nu.conjugate(), mu) == sign * character(nu, mu)


def test_csv_export():
    text = character_table_csv(3)
    assert text.splitlines()[0] == "nu\\mu,3,2.1,1.1.1"
    assert text.splitlines()[2] == "2.1,-1,0,2"
