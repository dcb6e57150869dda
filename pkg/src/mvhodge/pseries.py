"""Power series in p_1, p_2, ... with LambdaSeries coefficients.

A :class:`PartitionSeries` stores ``sum_mu F_mu p_mu`` for |mu| <= D; p_mu is
the plain product of the p_{mu_k} (no z_mu normalization), so
``d p_mu / d p_i = m_i(mu) p_{mu - i}``.  Terms of weight above D are
unknown rather than zero.
"""

from __future__ import annotations

from collections import Counter

from .errors import PreconditionError, TruncationError
from .exact import Gaussian
from .partitions import EMPTY, Partition, canonical_key, partitions_up_to
from .series import LambdaSeries

__all__ = [
    "PartitionSeries",
    "ps_mul",
    "ps_log",
    "ps_exp",
    "cut_join_apply",
    "cut_join_linear",
    "linear_cut_join_monomial",
    "verify_cut_join",
]


def _acc(out: dict, key, s: LambdaSeries):
    prev = out.get(key)
    out[key] = s if prev is None else prev + s


class PartitionSeries:
    """Immutable map Partition -> LambdaSeries truncated at p-weight D."""

    __slots__ = ("weight_bound", "_terms")

    def __init__(self, weight_bound: int, terms=None):
        if weight_bound < 0:
            raise ValueError("weight bound must be nonnegative")
        self.weight_bound = weight_bound
        clean = {}
        for mu, s in (terms or {}).items():
            mu = mu if isinstance(mu, Partition) else Partition(mu)
            if mu.weight > weight_bound:
                continue
            if not isinstance(s, LambdaSeries):
                raise TypeError("PartitionSeries values must be LambdaSeries")
            if not s.is_zero():
                clean[mu] = s
        self._terms = dict(sorted(clean.items(), key=lambda kv: canonical_key(kv[0])))

    @classmethod
    def monomial(cls, mu, coeff: LambdaSeries, weight_bound: int) -> "PartitionSeries":
        return cls(weight_bound, {Partition(mu): coeff})

    # -- inspection -------------------------------------------------------

    def __getitem__(self, mu) -> LambdaSeries | None:
        """Coefficient of p_mu, or None when it is (known to be) zero."""
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        if mu.weight > self.weight_bound:
            raise TruncationError(f"weight {mu.weight} beyond bound {self.weight_bound}")
        return self._terms.get(mu)

    def get(self, mu, order: int) -> LambdaSeries:
        s = self[mu]
        return LambdaSeries.zero(order) if s is None else s

    def keys(self):
        return self._terms.keys()

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def constant_term(self) -> LambdaSeries | None:
        return self._terms.get(EMPTY)

    def min_order(self) -> int | None:
        return min((s.order for s in self._terms.values()), default=None)

    def __eq__(self, other):
        if not isinstance(other, PartitionSeries):
            return NotImplemented
        return self.weight_bound == other.weight_bound and self._terms == other._terms

    def __repr__(self):
        inner = ", ".join(f"{mu}: {s!r}" for mu, s in self._terms.items())
        return f"PartitionSeries(D={self.weight_bound}, {{{inner}}})"

    # -- linear structure -------------------------------------------------

    def _check(self, other):
        if not isinstance(other, PartitionSeries):
            raise TypeError("expected a PartitionSeries")
        if other.weight_bound != self.weight_bound:
            raise PreconditionError(
                f"weight bounds differ: {self.weight_bound} vs {other.weight_bound}"
            )

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for mu, s in other._terms.items():
            _acc(out, mu, s)
        return PartitionSeries(self.weight_bound, out)

    def __neg__(self):
        return self.map(lambda s: -s)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PartitionSeries):
            return ps_mul(self, other)
        return self.scale(other)

    def scale(self, c) -> "PartitionSeries":
        return self.map(lambda s: s.scale(c))

    def map(self, fn) -> "PartitionSeries":
        return PartitionSeries(self.weight_bound, {mu: fn(s) for mu, s in self._terms.items()})

    def map_items(self, fn) -> "PartitionSeries":
        return PartitionSeries(self.weight_bound, {mu: fn(mu, s) for mu, s in self._terms.items()})

    def truncate(self, order: int | None = None, weight_bound: int | None = None) -> "PartitionSeries":
        d = self.weight_bound if weight_bound is None else min(weight_bound, self.weight_bound)
        terms = {
            mu: (s if order is None else s.truncate(order))
            for mu, s in self._terms.items()
            if mu.weight <= d
        }
        return PartitionSeries(d, terms)

    def deriv_tau(self) -> "PartitionSeries":
        return self.map(LambdaSeries.deriv_tau)

    def deriv_lambda(self) -> "PartitionSeries":
        return self.map(LambdaSeries.deriv_lambda)

    def eval_tau(self, r) -> "PartitionSeries":
        return self.map(lambda s: s.eval_tau(r))

    def deriv_p(self, i: int) -> "PartitionSeries":
        """Formal d/dp_i; the result's weight bound drops by i."""
        out = {}
        for mu, s in self._terms.items():
            m = mu.multiplicity(i)
            if m:
                out[mu.remove_part(i)] = s.scale(m)
        return PartitionSeries(max(self.weight_bound - i, 0), out)


def ps_mul(a: PartitionSeries, b: PartitionSeries) -> PartitionSeries:
    a._check(b)
    d = a.weight_bound
    out: dict = {}
    for alpha, sa in a.items():
        wa = alpha.weight
        for beta, sb in b.items():
            if wa + beta.weight <= d:
                _acc(out, alpha.union(beta), sa * sb)
    return PartitionSeries(d, out)


def _is_exact_one(s: LambdaSeries | None) -> bool:
    if s is None or s.min_exp != 0:
        return False
    return all((e == 0 and c == 1) or (e != 0 and c.is_zero()) for e, c in s.items())


def _sub_multisets(mu: Partition):
    """All (alpha, beta) with alpha + beta = mu as multisets, both nonempty."""
    counts = sorted(Counter(mu).items(), reverse=True)

    def rec(k):
        if k == len(counts):
            yield (), ()
            return
        part, m = counts[k]
        for a_rest, b_rest in rec(k + 1):
            for t in range(m + 1):
                yield (part,) * t + a_rest, (part,) * (m - t) + b_rest

    for a, b in rec(0):
        if a and b:
            yield Partition._trusted(a), Partition._trusted(b)


def ps_log(z: PartitionSeries) -> PartitionSeries:
    """Formal logarithm of a series with constant term exactly 1.

    Uses the Euler-operator relation E(Z) = Z * E(R), E = sum_i i p_i d/dp_i,
    which on p_mu reads
    ``|mu| R_mu = |mu| Z_mu - sum_{alpha+beta=mu} |alpha| R_alpha Z_beta``.
    The result carries whatever validity order the products leave; callers
    that need a definite order should feed extra precision and truncate.
    """
    if not _is_exact_one(z.constant_term()):
        raise PreconditionError("ps_log needs constant term exactly 1")
    r: dict = {}
    for mu in partitions_up_to(z.weight_bound):
        n = mu.weight
        zmu = z[mu]
        acc = None if zmu is None else zmu.scale(n)
        for alpha, beta in _sub_multisets(mu):
            ra, zb = r.get(alpha), z[beta]
            if ra is None or zb is None:
                continue
            term = (ra * zb).scale(alpha.weight)
            acc = -term if acc is None else acc - term
        if acc is not None:
            r[mu] = acc.scale(Gaussian(1) / n) if n != 1 else acc
    return PartitionSeries(z.weight_bound, r)


def ps_exp(g: PartitionSeries) -> PartitionSeries:
    """Formal exponential of a series with zero constant term.

    ``|mu| Z_mu = sum_{alpha+beta=mu, alpha nonempty} |alpha| G_alpha Z_beta``.
    """
    c = g.constant_term()
    if c is not None and not c.is_zero():
        raise PreconditionError("ps_exp needs zero constant term")
    order = g.min_order()
    if order is None:
        order = 0
    one = LambdaSeries.constant(1, order)
    z: dict = {EMPTY: one}
    for mu in partitions_up_to(g.weight_bound):
        n = mu.weight
        acc = None
        gmu = g[mu]
        if gmu is not None:
            acc = gmu.scale(n)
        for alpha, beta in _sub_multisets(mu):
            ga, zb = g[alpha], z.get(beta)
            if ga is None or zb is None:
                continue
            term = (ga * zb).scale(alpha.weight)
            acc = term if acc is None else acc + term
        if acc is not None:
            z[mu] = acc.scale(Gaussian(1) / n) if n != 1 else acc
    return PartitionSeries(g.weight_bound, z)


# -- cut-and-join ----------------------------------------------------------


def linear_cut_join_monomial(mu: Partition) -> dict:
    """Linear part of the operator on p_mu: {partition: integer coefficient}.

    join: sum_{i,j} i j p_{i+j} d^2/dp_i dp_j;  cut: sum_{i,j} (i+j) p_i p_j d/dp_{i+j}.
    """
    out: Counter = Counter()
    mult = Counter(mu)
    parts = sorted(mult)
    for a_idx, i in enumerate(parts):
        for j in parts[a_idx:]:
            if i == j:
                c = i * i * mult[i] * (mult[i] - 1)
                if c:
                    out[mu.remove_part(i).remove_part(i).add_part(2 * i)] += c
            else:
                # ordered pairs (i,j) and (j,i)
                out[mu.remove_part(i).remove_part(j).add_part(i + j)] += 2 * i * j * mult[i] * mult[j]
    for k in parts:
        base = mu.remove_part(k)
        for i in range(1, k):
            out[base.union((i, k - i))] += k * mult[k]
    return {nu: c for nu, c in out.items() if c}


def cut_join_linear(f: PartitionSeries) -> PartitionSeries:
    out: dict = {}
    for mu, s in f.items():
        for nu, c in linear_cut_join_monomial(mu).items():
            _acc(out, nu, s.scale(c))
    return PartitionSeries(f.weight_bound, out)


def cut_join_apply(f: PartitionSeries) -> PartitionSeries:
    """The full cut-and-join operator (without scalar prefactor):

    sum_{i,j>=1} ( i j p_{i+j} d2F/dp_i dp_j + i j p_{i+j} dF/dp_i dF/dp_j
                   + (i+j) p_i p_j dF/dp_{i+j} ).
    """
    d = f.weight_bound
    out = dict(cut_join_linear(f).items())
    # quadratic term: group by i via the partial derivatives G_i = dF/dp_i
    grads: dict[int, list] = {}
    for mu, s in f.items():
        for i, m in Counter(mu).items():
            grads.setdefault(i, []).append((mu.remove_part(i), s.scale(m)))
    idx = sorted(grads)
    for a, i in enumerate(idx):
        for j in idx[a:]:
            if i + j > d:
                continue
            factor = i * j if i == j else 2 * i * j
            for alpha, sa in grads[i]:
                for beta, sb in grads[j]:
                    w = alpha.weight + beta.weight + i + j
                    if w > d:
                        continue
                    key = alpha.union(beta).add_part(i + j)
                    _acc(out, key, (sa * sb).scale(factor))
    return PartitionSeries(d, out)


def verify_cut_join(
    f: PartitionSeries,
    lhs: PartitionSeries,
    scalar=1,
    lambda_power: int = 0,
    upto: int | None = None,
) -> list[tuple[Partition, int, int]]:
    """Compare ``lhs`` with ``scalar * lambda^lambda_power * CJ(F)``.

    Returns every (partition, lambda-exponent, tau-degree) where they differ,
    compared up to the common validity order.  With *upto*, both sides must
    be valid at least that far, otherwise TruncationError.
    """
    if f.weight_bound != lhs.weight_bound:
        raise PreconditionError(
            f"truncation bounds differ: {f.weight_bound} vs {lhs.weight_bound}"
        )
    rhs = cut_join_apply(f).map(lambda s: s.scale(scalar).shift(lambda_power))
    keys = sorted(set(lhs.keys()) | set(rhs.keys()), key=canonical_key)
    out = []
    for mu in keys:
        a, b = lhs[mu], rhs[mu]
        ref = a if a is not None else b
        if a is None:
            a = LambdaSeries.zero(ref.order)
        if b is None:
            b = LambdaSeries.zero(ref.order)
        if upto is not None and min(a.order, b.order) < upto:
            raise TruncationError(
                f"p_{mu}: sides valid to lambda^{min(a.order, b.order)}, need lambda^{upto}"
            )
        out.extend((mu, e, j) for e, j in a.mismatches(b, upto))
    return out
