"""Partitions and symmetric-group representation data.

Canonical order everywhere: by weight, then decreasing lexicographic within
a weight, so ``(3) < (2,1) < (1,1,1)``.  The sort key is :func:`canonical_key`.
"""

from __future__ import annotations

import csv
import io
import threading
from collections import Counter
from functools import lru_cache
from math import factorial, prod

from ._backend import mn_character

__all__ = [
    "Partition",
    "partitions_of",
    "partitions_up_to",
    "canonical_key",
    "partition_stats",
    "z_order",
    "aut_order",
    "kappa",
    "hooks",
    "dim",
    "character",
    "character_table",
    "character_table_csv",
    "conjugacy_class_size",
    "EMPTY",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts):
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def union(self, other) -> "Partition":
        return Partition._trusted(tuple(sorted(self + tuple(other), reverse=True)))

    def remove_part(self, i: int) -> "Partition":
        k = self.index(i)
        return Partition._trusted(self[:k] + self[k + 1:])

    def add_part(self, i: int) -> "Partition":
        return self.union((i,))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition._trusted(tuple(sum(1 for p in self if p > j) for j in range(self[0])))

    def __str__(self):
        return ".".join(map(str, self)) if self else "0"

    def __repr__(self):
        return f"Partition({list(self)})"

    @classmethod
    def parse(cls, s) -> "Partition":
        """Accepts "3.1.1", "3,1,1", "0" / "" (empty) or an integer list."""
        if isinstance(s, (list, tuple)):
            return cls(s)
        s = str(s).strip().strip("()[]")
        if s in ("", "0"):
            return EMPTY
        sep = "." if "." in s else ","
        return cls(int(x) for x in s.split(sep) if x.strip())

    # tuple ordering is decreasing-lex reversed; make sorting canonical
    def __lt__(self, other):
        return canonical_key(self) < canonical_key(other)

    def __le__(self, other):
        return canonical_key(self) <= canonical_key(other)

    def __gt__(self, other):
        return canonical_key(self) > canonical_key(other)

    def __ge__(self, other):
        return canonical_key(self) >= canonical_key(other)

    def __eq__(self, other):
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return tuple.__ne__(self, other)

    __hash__ = tuple.__hash__


EMPTY = Partition._trusted(())


def canonical_key(mu) -> tuple:
    return (sum(mu), tuple(-p for p in mu))


@lru_cache(maxsize=None)
def _partitions_tuple(n: int) -> tuple:
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(Partition._trusted(tuple(acc)))
            return
        for p in range(min(remaining, cap), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of *n* in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_tuple(n))


def partitions_up_to(d: int, include_empty: bool = False) -> list[Partition]:
    out = [EMPTY] if include_empty else []
    for n in range(1, d + 1):
        out.extend(_partitions_tuple(n))
    return out


def z_order(mu) -> int:
    """Centralizer order prod_j j^{m_j} m_j!."""
    return prod(j**m * factorial(m) for j, m in Counter(mu).items())


def aut_order(mu) -> int:
    return prod(factorial(m) for m in Counter(mu).values())


def kappa(nu) -> int:
    return sum(p * (p - 2 * i + 1) for i, p in enumerate(nu, start=1))


def hooks(nu) -> list[int]:
    """Hook lengths, row by row."""
    conj = Partition(nu).conjugate()
    return [nu[i] - j + conj[j] - i - 1 for i in range(len(nu)) for j in range(nu[i])]


def dim(nu) -> int:
    return factorial(sum(nu)) // prod(hooks(nu))


def conjugacy_class_size(mu) -> int:
    return factorial(sum(mu)) // z_order(mu)


def partition_stats(mu) -> dict:
    h = hooks(mu)
    return {
        "z": z_order(mu),
        "autOrder": aut_order(mu),
        "kappa": kappa(mu),
        "hooks": sorted(h, reverse=True),
        "dim": factorial(sum(mu)) // prod(h),
    }


_table_lock = threading.Lock()
_tables: dict[int, dict] = {}


def character_table(n: int) -> dict:
    """{(nu, mu): chi_nu(C(mu))} for all partitions of *n*, cached per weight."""
    with _table_lock:
        tab = _tables.get(n)
    if tab is not None:
        return tab
    parts = partitions_of(n)
    tab = {(nu, mu): mn_character(tuple(nu), tuple(mu)) for nu in parts for mu in parts}
    with _table_lock:
        return _tables.setdefault(n, tab)


def character(nu, mu) -> int:
    n = sum(nu)
    if n != sum(mu):
        raise ValueError(f"weight mismatch: |{tuple(nu)}| != |{tuple(mu)}|")
    if n == 0:
        return 1
    return character_table(n)[(Partition(nu), Partition(mu))]


def character_table_csv(n: int) -> str:
    parts = partitions_of(n)
    tab = character_table(n)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["nu\\mu"] + [str(m) for m in parts])
    for nu in parts:
        w.writerow([str(nu)] + [tab[(nu, mu)] for mu in parts])
    return buf.getvalue()
