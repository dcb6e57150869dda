"""Polynomials in lambda_1..lambda_g modulo Mumford's relations.

Mumford's relations are c_t(E) c_{-t}(E) = 1, i.e. for k = 1..g

    R_{2k} = sum_{i+j=2k} (-1)^i lambda_i lambda_j = 0      (lambda_0 = 1).

Membership in the ideal is decided degree by degree: the degree-d piece of
the ideal is spanned by m * R_{2k} with deg m = d - 2k, and a semi-echelon
basis (distinct leading monomials) of that span is built once per genus.
Each basis row remembers which multiples it came from, so a zero answer
comes with an explicit witness.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .errors import PreconditionError
from .exact import Rational

__all__ = [
    "HodgeClass",
    "MumfordIdeal",
    "ReduceResult",
    "mumford_ideal",
    "lam",
    "mumford_generator",
    "chern_char",
    "chern_char_newton",
    "lambda_dual",
    "check_mumford_product",
    "check_derivative1",
    "check_ch_displays",
    "verify_derivative_lemma",
    "HodgeCheck",
]

_Z = Rational(0)


def _mono_degree(m: tuple) -> int:
    return sum((i + 1) * e for i, e in enumerate(m))


class HodgeClass:
    """Element of Q[lambda_1..lambda_g]; monomials are exponent tuples of length g."""

    __slots__ = ("genus", "terms")

    def __init__(self, genus: int, terms=None):
        if genus < 0:
            raise ValueError("genus must be >= 0")
        self.genus = genus
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != genus:
                raise ValueError(f"monomial {m} has wrong length for genus {genus}")
            c = Rational(c)
            if c:
                clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, genus, terms):
        h = object.__new__(cls)
        h.genus = genus
        h.terms = terms
        return h

    @classmethod
    def one(cls, genus: int) -> "HodgeClass":
        return cls._raw(genus, {(0,) * genus: Rational(1)})

    @classmethod
    def zero(cls, genus: int) -> "HodgeClass":
        return cls._raw(genus, {})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({_mono_degree(m) for m in self.terms})

    def max_degree(self) -> int:
        return max((_mono_degree(m) for m in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "HodgeClass":
        return HodgeClass._raw(self.genus, {m: c for m, c in self.terms.items() if _mono_degree(m) == d})

    def __eq__(self, other):
        """Raw equality of polynomials; use :meth:`equiv` for equality mod the ideal."""
        if not isinstance(other, HodgeClass):
            return NotImplemented
        return self.genus == other.genus and self.terms == other.terms

    def __hash__(self):
        return hash((self.genus, tuple(sorted(self.terms.items()))))

    def _coerce(self, other) -> "HodgeClass":
        if isinstance(other, HodgeClass):
            if other.genus != self.genus:
                raise ValueError("genus mismatch")
            return other
        return HodgeClass.one(self.genus).scale(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, _Z) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return HodgeClass._raw(self.genus, out)

    __radd__ = __add__

    def __neg__(self):
        return HodgeClass._raw(self.genus, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "HodgeClass":
        c = Rational(c)
        if not c:
            return HodgeClass.zero(self.genus)
        return HodgeClass._raw(self.genus, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HodgeClass):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, _Z) + c1 * c2
        return HodgeClass._raw(self.genus, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = HodgeClass.one(self.genus)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        if not self.terms:
            return f"HodgeClass(g={self.genus}, 0)"
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            name = "*".join(
                f"l{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            ) or "1"
            parts.append(f"({c})*{name}")
        return f"HodgeClass(g={self.genus}, " + " + ".join(parts) + ")"

    def equiv(self, other) -> bool:
        return mumford_ideal(self.genus).reduce(self - self._coerce(other)).is_zero


def lam(g: int, i: int) -> HodgeClass:
    """lambda_i in genus g; lambda_0 = 1 and lambda_i = 0 outside 0..g."""
    if i == 0:
        return HodgeClass.one(g)
    if i < 0 or i > g:
        return HodgeClass.zero(g)
    m = [0] * g
    m[i - 1] = 1
    return HodgeClass._raw(g, {tuple(m): Rational(1)})


def mumford_generator(g: int, k: int) -> HodgeClass:
    """R_{2k} = sum_{i+j=2k} (-1)^i lambda_i lambda_j."""
    acc = HodgeClass.zero(g)
    for i in range(0, 2 * k + 1):
        term = lam(g, i) * lam(g, 2 * k - i)
        acc = acc + (term if i % 2 == 0 else -term)
    return acc


@lru_cache(maxsize=None)
def _monomials_of_degree(g: int, d: int) -> tuple:
    out = []

    def rec(i, remaining, acc):
        if i == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for e in range(remaining // i, -1, -1):
            acc[i - 1] = e
            rec(i - 1, remaining - e * i, acc)
        acc[i - 1] = 0

    if g == 0:
        return ((),) if d == 0 else ()
    rec(g, d, [0] * g)
    return tuple(out)


@dataclass
class ReduceResult:
    is_zero: bool
    witness: list = field(default_factory=list)  # [((multiplier monomial, k), coefficient)]
    failing_degree: int | None = None


class MumfordIdeal:
    """Per-degree semi-echelon bases of the Mumford ideal in genus g."""

    def __init__(self, g: int, max_degree: int | None = None):
        if g < 0:
            raise ValueError("genus must be >= 0")
        self.genus = g
        self.max_degree = 3 * g if max_degree is None else max_degree
        self._gens = {k: mumford_generator(g, k) for k in range(1, g + 1)}
        self._bases: dict[int, dict] = {}
        self._lock = threading.Lock()

    def _basis(self, d: int) -> dict:
        with self._lock:
            b = self._bases.get(d)
            if b is None:
                b = self._build(d)
                self._bases[d] = b
            return b

    def _build(self, d: int) -> dict:
        """{leading monomial: (vector, combo)}, vectors as dicts."""
        pivots: dict = {}
        g = self.genus
        for k in range(1, g + 1):
            if 2 * k > d:
                break
            gen = self._gens[k]
            for m in _monomials_of_degree(g, d - 2 * k):
                vec = {}
                for gm, c in gen.terms.items():
                    key = tuple(a + b for a, b in zip(gm, m))
                    vec[key] = vec.get(key, _Z) + c
                vec = {x: c for x, c in vec.items() if c}
                combo = {(m, k): Rational(1)}
                vec, combo = self._eliminate(pivots, vec, combo)
                if vec:
                    lead = max(vec)
                    inv = 1 / vec[lead]
                    pivots[lead] = (
                        {x: c * inv for x, c in vec.items()},
                        {x: c * inv for x, c in combo.items()},
                    )
        return pivots

    @staticmethod
    def _eliminate(pivots, vec, combo):
        vec = dict(vec)
        combo = dict(combo) if combo is not None else None
        while vec:
            lead = max(vec)
            row = pivots.get(lead)
            if row is None:
                break
            f = vec[lead]
            pv, pc = row
            for x, c in pv.items():
                v = vec.get(x, _Z) - f * c
                if v:
                    vec[x] = v
                else:
                    vec.pop(x, None)
            if combo is not None:
                for x, c in pc.items():
                    v = combo.get(x, _Z) - f * c
                    if v:
                        combo[x] = v
                    else:
                        combo.pop(x, None)
        return vec, combo

    def reduce(self, x: HodgeClass) -> ReduceResult:
        if x.genus != self.genus:
            raise ValueError("genus mismatch")
        if x.max_degree() > self.max_degree:
            raise PreconditionError(
                f"degree {x.max_degree()} exceeds the configured bound {self.max_degree}"
            )
        witness: dict = {}
        for d in x.degrees():
            part = x.homogeneous_part(d).terms
            rem, combo = self._eliminate(self._basis(d), part, {})
            if rem:
                return ReduceResult(False, [], d)
            # part - sum(basis rows used) = 0 and combo = -(rows used), so part = -combo
            for key, c in combo.items():
                witness[key] = witness.get(key, _Z) - c
        items = sorted(((k, c) for k, c in witness.items() if c), key=lambda kc: (kc[0][1], kc[0][0]))
        return ReduceResult(True, items)

    def expand_witness(self, witness) -> HodgeClass:
        g = self.genus
        acc = HodgeClass.zero(g)
        for (m, k), c in witness:
            acc = acc + HodgeClass._raw(g, {tuple(m): Rational(1)}) * self._gens[k].scale(c)
        return acc

    def rank(self, d: int) -> int:
        return len(self._basis(d))


_ideal_lock = threading.Lock()
_ideals: dict = {}


def mumford_ideal(g: int) -> MumfordIdeal:
    with _ideal_lock:
        ideal = _ideals.get(g)
        if ideal is None:
            ideal = _ideals[g] = MumfordIdeal(g)
        return ideal


# -- Chern character ---------------------------------------------------------------


def chern_char(g: int, n: int) -> HodgeClass:
    """(1/n!) sum_{i+j=n} (-1)^{i-1} i lambda_i lambda_j."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    acc = HodgeClass.zero(g)
    for i in range(1, n + 1):
        term = (lam(g, i) * lam(g, n - i)).scale(i)
        acc = acc + (term if i % 2 == 1 else -term)
    return acc.scale(Rational(1, factorial(n)))


def chern_char_newton(g: int, n: int) -> HodgeClass:
    """ch_n = p_n/n! with p_n the Chern-root power sum, from Newton's identities
    in the free polynomial ring (no relations used)."""
    p = [None]
    for k in range(1, n + 1):
        acc = lam(g, k).scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + (lam(g, i) * p[k - i]).scale((-1) ** (i - 1))
        p.append(acc)
    return p[n].scale(Rational(1, factorial(n)))


def lambda_dual(g: int) -> list[HodgeClass]:
    """Coefficients (ascending in t) of Lambda_g^vee(t) = sum_i (-1)^i lambda_i t^{g-i}."""
    return [lam(g, g - k).scale((-1) ** (g - k)) for k in range(g + 1)]


def _tpoly_mul(a, b, g):
    out = [HodgeClass.zero(g) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _tpoly_eval(a, x, g) -> HodgeClass:
    acc = HodgeClass.zero(g)
    for c in reversed(a):
        acc = acc.scale(x) + c
    return acc


def _tpoly_deriv(a):
    return [c.scale(k) for k, c in enumerate(a)][1:]


def _tpoly_compose_affine(a, s, c, g):
    """a(s*tau + c) as a polynomial in tau."""
    out = [HodgeClass.zero(g) for _ in range(len(a))]
    for k, coef in enumerate(a):
        for j in range(k + 1):
            w = comb(k, j) * Rational(s) ** j * Rational(c) ** (k - j)
            if w:
                out[j] = out[j] + coef.scale(w)
    return out


@dataclass
class HodgeCheck:
    name: str
    genus: int
    passed: bool
    detail: str = ""
    failing_degree: int | None = None


def _check(name, g, x: HodgeClass, detail="") -> HodgeCheck:
    res = mumford_ideal(g).reduce(x)
    return HodgeCheck(name, g, res.is_zero, detail, res.failing_degree)


def check_mumford_product(g: int) -> list[HodgeCheck]:
    """Lambda(t) Lambda(-t) - (-1)^g t^{2g}: every t-coefficient in the ideal."""
    a = lambda_dual(g)
    b = _tpoly_compose_affine(a, -1, 0, g)
    prod_ = _tpoly_mul(a, b, g)
    out = []
    for k, c in enumerate(prod_):
        if k == 2 * g:
            c = c - (-1) ** g
        out.append(_check("mumford-product", g, c, f"t^{k}"))
    return out


def _sum_k_ch(g: int) -> HodgeClass:
    """sum_{k>=1} k! (-1)^{k-1} ch_k (terms with k > 2g vanish identically)."""
    acc = HodgeClass.zero(g)
    for k in range(1, 2 * g + 1):
        acc = acc + chern_char(g, k).scale(factorial(k) * (-1) ** (k - 1))
    return acc


def check_derivative1(g: int, order: int | None = None) -> list[HodgeCheck]:
    """sum_n n! t^{n-1} ch_n = c_t(E) c'_{-t}(E), ch_n from Newton's identities."""
    order = 2 * g if order is None else order
    ct = [lam(g, i) for i in range(g + 1)]
    # c'_s at s = -t:  sum_i i lambda_i (-t)^{i-1}
    cprime = [lam(g, k + 1).scale((k + 1) * (-1) ** k) for k in range(g)]
    rhs = _tpoly_mul(ct, cprime, g) if g else []
    out = []
    for n in range(1, order + 1):
        lhs = chern_char_newton(g, n).scale(factorial(n))
        r = rhs[n - 1] if n - 1 < len(rhs) else HodgeClass.zero(g)
        out.append(_check("derivative1", g, lhs - r, f"t^{n - 1}"))
    return out


def check_ch_displays(g: int) -> list[HodgeCheck]:
    out = []
    for m in range(1, g + 1):
        out.append(_check("ch-even", g, chern_char(g, 2 * m), f"ch_{2 * m}"))
    for k in range(2 * g, 2 * g + 2):
        out.append(_check("ch-vanish", g, chern_char(g, k), f"ch_{k}"))
    if g >= 1:
        lhs = chern_char(g, 2 * g - 1).scale(factorial(2 * g - 1))
        rhs = (lam(g, g - 1) * lam(g, g)).scale((-1) ** (g - 1))
        out.append(_check("ch-2g-1", g, lhs - rhs, f"ch_{2 * g - 1}"))
    if g >= 2:
        lhs = chern_char(g, 2 * g - 3).scale(factorial(2 * g - 3))
        rhs = (lam(g, g - 3) * lam(g, g)).scale(3) - lam(g, g - 1) * lam(g, g - 2)
        out.append(_check("ch-2g-3", g, lhs - rhs.scale((-1) ** (g - 1)), f"ch_{2 * g - 3}"))
    return out


def verify_derivative_lemma(g: int) -> list[HodgeCheck]:
    """Both identities of the derivative lemma, plus the degree 3g-3 claim (g >= 2).

    The first identity is checked in the form its derivation produces:
    Lambda(1) Lambda'(-1) = (-1)^{g-1} g + (-1)^g sum_k k! (-1)^{k-1} ch_k.
    """
    if g < 1:
        raise PreconditionError("g must be >= 1")
    a = lambda_dual(g)
    S = _sum_k_ch(g)
    one = HodgeClass.one(g)
    lhs1 = _tpoly_eval(a, 1, g) * _tpoly_eval(_tpoly_deriv(a), -1, g)
    rhs1 = one.scale((-1) ** (g - 1) * g) + S.scale((-1) ** g)
    out = [_check("lemma-derivative-1", g, lhs1 - rhs1)]

    # d/dtau at 0 of Lambda(1) Lambda(tau) Lambda(-tau-1)
    prod_ = _tpoly_mul(a, _tpoly_compose_affine(a, -1, -1, g), g)
    lhs2 = _tpoly_eval(a, 1, g) * (prod_[1] if len(prod_) > 1 else HodgeClass.zero(g))
    rhs2 = -lam(g, g - 1) + lam(g, g).scale(g) - lam(g, g) * S
    out.append(_check("lemma-derivative-2", g, lhs2 - rhs2))
    if g >= 2:
        part = lhs2.homogeneous_part(3 * g - 3)
        want = (lam(g, g) * lam(g, g - 1) * lam(g, g - 2)).scale((-1) ** (g - 1))
        out.append(_check("lemma-degree-3g-3", g, part - want))
    return out
