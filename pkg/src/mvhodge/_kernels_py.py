"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_kernels`` extension; used
when the extension is not built or ``MVHODGE_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

BACKEND = "python"


def conv_acc(acc, x, y, negate=False):
    """In place ``acc[i+j] += x[i]*y[j]`` (``-=`` when *negate*).

    *acc* must have at least ``len(x) + len(y) - 1`` slots.
    """
    ly = len(y)
    if negate:
        for i, xi in enumerate(x):
            if xi:
                for j in range(ly):
                    acc[i + j] -= xi * y[j]
    else:
        for i, xi in enumerate(x):
            if xi:
                for j in range(ly):
                    acc[i + j] += xi * y[j]


def mn_character(nu, mu):
    """Murnaghan–Nakayama: chi^nu evaluated on the class of cycle type mu.

    Partitions are given as tuples; rim hooks are removed on the beta-set
    (abacus) of *nu*, one part of *mu* at a time, largest part first.
    """
    n = len(nu)
    beta = tuple(sorted(nu[i] + (n - 1 - i) for i in range(n)))
    memo = {}
    return _mn(beta, tuple(sorted(mu, reverse=True)), 0, memo)


def _mn(beta, mu, pos, memo):
    if pos == len(mu):
        return 1
    key = (beta, pos)
    hit = memo.get(key)
    if hit is not None:
        return hit
    k = mu[pos]
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in occupied:
            continue
        between = 0
        for c in beta:
            if t < c < b:
                between += 1
        nb = tuple(sorted([c for c in beta if c != b] + [t]))
        sub = _mn(nb, mu, pos + 1, memo)
        total += -sub if between & 1 else sub
    memo[key] = total
    return total


def count_transitive_factorizations(sigma, r):
    """Count tuples of transpositions (t_1, ..., t_r) in S_n with
    ``t_r ... t_1 sigma = id`` and <sigma, t_1, ..., t_r> transitive.

    *sigma* is a permutation in one-line notation (a tuple of images of
    0..n-1).  The search walks the tuples one transposition at a time and
    merges identical partial states (current product, orbit partition),
    pruning states that cannot reach the identity in the remaining steps.
    """
    n = len(sigma)
    sigma = tuple(sigma)
    labels = _orbit_labels_of(sigma)
    states = {(sigma, labels): 1}
    transpositions = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for step in range(r):
        remaining = r - step - 1
        nxt = {}
        for (perm, lab), cnt in states.items():
            for a, b in transpositions:
                # t o perm: swap the values a and b in the image list
                new = list(perm)
                for x in range(n):
                    v = perm[x]
                    if v == a:
                        new[x] = b
                    elif v == b:
                        new[x] = a
                new = tuple(new)
                dist = n - _cycle_count(new)
                if dist > remaining or (remaining - dist) & 1:
                    continue
                la, lb = lab[a], lab[b]
                if la != lb:
                    lo, hi = (la, lb) if la < lb else (lb, la)
                    merged = [lo if v == hi else v for v in lab]
                    newlab = _relabel(merged)
                else:
                    newlab = lab
                if max(newlab) > remaining:
                    # more blocks than merges left
                    continue
                key = (new, newlab)
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    ident = tuple(range(n))
    return states.get((ident, (0,) * n), 0)


def _cycle_count(perm):
    n = len(perm)
    seen = [False] * n
    c = 0
    for s in range(n):
        if not seen[s]:
            c += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
    return c


def _orbit_labels_of(perm):
    n = len(perm)
    lab = [-1] * n
    nxt = 0
    for s in range(n):
        if lab[s] < 0:
            x = s
            while lab[x] < 0:
                lab[x] = nxt
                x = perm[x]
            nxt += 1
    return tuple(lab)


def _relabel(lab):
    seen = {}
    out = []
    for v in lab:
        if v not in seen:
            seen[v] = len(seen)
        out.append(seen[v])
    return tuple(out)
