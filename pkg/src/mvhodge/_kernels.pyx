# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors mvhodge._kernels_py exactly."""

BACKEND = "cython"

DEF MAXN = 16


def conv_acc(list acc, x, y, bint negate=False):
    cdef Py_ssize_t i, j, lx = len(x), ly = len(y)
    cdef object xi
    cdef list xs = list(x), ys = list(y)
    if negate:
        for i in range(lx):
            xi = xs[i]
            if xi:
                for j in range(ly):
                    acc[i + j] = acc[i + j] - xi * ys[j]
    else:
        for i in range(lx):
            xi = xs[i]
            if xi:
                for j in range(ly):
                    acc[i + j] = acc[i + j] + xi * ys[j]


cdef long _mn(int* beta, int nb, int* mu, int nmu, int pos, dict memo) except? -999999999:
    cdef int i, j, k, b, t, between, ok
    cdef long total, sub
    cdef int nbeta[MAXN * 2]
    if pos == nmu:
        return 1
    cdef bytearray raw = bytearray(nb)
    for i in range(nb):
        raw[i] = beta[i]
    key = (bytes(raw), pos)
    hit = memo.get(key)
    if hit is not None:
        return hit
    k = mu[pos]
    total = 0
    for i in range(nb):
        b = beta[i]
        t = b - k
        if t < 0:
            continue
        ok = 1
        between = 0
        for j in range(nb):
            if beta[j] == t:
                ok = 0
                break
            if t < beta[j] < b:
                between += 1
        if not ok:
            continue
        # beta is sorted; build sorted copy with b replaced by t
        for j in range(nb):
            nbeta[j] = beta[j]
        nbeta[i] = t
        j = i
        while j > 0 and nbeta[j - 1] > nbeta[j]:
            nbeta[j - 1], nbeta[j] = nbeta[j], nbeta[j - 1]
            j -= 1
        sub = _mn(nbeta, nb, mu, nmu, pos + 1, memo)
        if between & 1:
            total -= sub
        else:
            total += sub
    memo[key] = total
    return total


def mn_character(nu, mu):
    cdef int n = len(nu), m = len(mu), i
    cdef int beta[MAXN * 2]
    cdef int mus[MAXN * 2]
    if n > 2 * MAXN or m > 2 * MAXN:
        raise ValueError("partition too long for the compiled kernel")
    vals = []
    for i in range(n):
        vals.append(nu[i] + (n - 1 - i))
    vals.sort()
    if n and vals[n - 1] > 255:
        raise ValueError("partition too large for the compiled kernel")
    for i in range(n):
        beta[i] = vals[i]
    smu = sorted(mu, reverse=True)
    for i in range(m):
        mus[i] = smu[i]
    return _mn(beta, n, mus, m, 0, {})


cdef int _cycle_count(int* perm, int n):
    cdef int seen[MAXN]
    cdef int s, x, c = 0
    for s in range(n):
        seen[s] = 0
    for s in range(n):
        if not seen[s]:
            c += 1
            x = s
            while not seen[x]:
                seen[x] = 1
                x = perm[x]
    return c


cdef object _encode(int* perm, int* lab, int n):
    cdef long long acc = 0
    cdef int i
    # 2n nibbles, n <= 8 and every digit < 8: fits a signed 64-bit int
    for i in range(n):
        acc = acc * 16 + perm[i]
    for i in range(n):
        acc = acc * 16 + lab[i]
    return acc


cdef void _decode(long long code, int* perm, int* lab, int n):
    cdef int i
    for i in range(n - 1, -1, -1):
        lab[i] = code & 15
        code >>= 4
    for i in range(n - 1, -1, -1):
        perm[i] = code & 15
        code >>= 4


def count_transitive_factorizations(sigma, int r):
    cdef int n = len(sigma)
    cdef int perm[MAXN]
    cdef int lab[MAXN]
    cdef int new[MAXN]
    cdef int newlab[MAXN]
    cdef int remap[MAXN]
    cdef int i, x, a, b, v, la, lb, lo, hi, step, remaining, dist, nxtlab, maxlab
    cdef long long code
    cdef dict states, nxt
    if n > 8:
        raise ValueError("degree too large for the compiled kernel")
    for i in range(n):
        perm[i] = sigma[i]
        lab[i] = -1
    nxtlab = 0
    for i in range(n):
        if lab[i] < 0:
            x = i
            while lab[x] < 0:
                lab[x] = nxtlab
                x = perm[x]
            nxtlab += 1
    states = {_encode(perm, lab, n): 1}
    for step in range(r):
        remaining = r - step - 1
        nxt = {}
        for key, cnt in states.items():
            code = key
            _decode(code, perm, lab, n)
            for a in range(n):
                for b in range(a + 1, n):
                    for x in range(n):
                        v = perm[x]
                        if v == a:
                            new[x] = b
                        elif v == b:
                            new[x] = a
                        else:
                            new[x] = v
                    dist = n - _cycle_count(new, n)
                    if dist > remaining or ((remaining - dist) & 1):
                        continue
                    la = lab[a]
                    lb = lab[b]
                    if la != lb:
                        lo = la if la < lb else lb
                        hi = lb if la < lb else la
                        for i in range(n):
                            remap[i] = -1
                        nxtlab = 0
                        maxlab = 0
                        for i in range(n):
                            v = lab[i]
                            if v == hi:
                                v = lo
                            if remap[v] < 0:
                                remap[v] = nxtlab
                                nxtlab += 1
                            newlab[i] = remap[v]
                        maxlab = nxtlab - 1
                    else:
                        maxlab = 0
                        for i in range(n):
                            newlab[i] = lab[i]
                            if lab[i] > maxlab:
                                maxlab = lab[i]
                    if maxlab > remaining:
                        continue
                    nk = _encode(new, newlab, n)
                    nxt[nk] = nxt.get(nk, 0) + cnt
        states = nxt
    for i in range(n):
        perm[i] = i
        lab[i] = 0
    return states.get(_encode(perm, lab, n), 0)
