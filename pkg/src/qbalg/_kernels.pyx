# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the functions in ``_pykernels``.

Same encodings, same signatures, same results.
"""
from libc.stdlib cimport malloc, free


cdef long *_to_c(seq, Py_ssize_t length) except NULL:
    cdef long *buf = <long *> malloc(length * sizeof(long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(length):
        buf[i] = seq[i]
    return buf


def orbit_labels(rmap, long n, long m):
    cdef long size = n ** m
    cdef long nn = n * n
    cdef long nw = m - 1
    cdef long *r = _to_c(rmap, nn)
    cdef long *labels = <long *> malloc(size * sizeof(long))
    cdef long *stack = <long *> malloc(size * sizeof(long))
    cdef long *weights = <long *> malloc((nw if nw > 0 else 1) * sizeof(long))
    cdef long start, label, code, pv, nxt, w, count, top, i
    sizes = []
    try:
        if labels == NULL or stack == NULL or weights == NULL:
            raise MemoryError()
        for i in range(nw):
            weights[i] = n ** (m - 2 - i)
        for i in range(size):
            labels[i] = -1
        label = 0
        for start in range(size):
            if labels[start] != -1:
                continue
            labels[start] = label
            stack[0] = start
            top = 1
            count = 1
            while top > 0:
                top -= 1
                code = stack[top]
                for i in range(nw):
                    w = weights[i]
                    pv = (code // w) % nn
                    nxt = code + (r[pv] - pv) * w
                    if labels[nxt] == -1:
                        labels[nxt] = label
                        count += 1
                        stack[top] = nxt
                        top += 1
            sizes.append(count)
            label += 1
        out = [labels[i] for i in range(size)]
    finally:
        free(r)
        free(labels)
        free(stack)
        free(weights)
    return out, sizes


cdef inline long _r12(long *r, long n, long c):
    cdef long pv = c // n
    return c + (r[pv] - pv) * n


cdef inline long _r23(long *r, long nn, long c):
    cdef long pv = c % nn
    return c + r[pv] - pv


def braid_holds(rmap, long n):
    cdef long nn = n * n
    cdef long *r = _to_c(rmap, nn)
    cdef long c
    cdef bint ok = True
    try:
        for c in range(n * nn):
            if _r12(r, n, _r23(r, nn, _r12(r, n, c))) != \
                    _r23(r, nn, _r12(r, n, _r23(r, nn, c))):
                ok = False
                break
    finally:
        free(r)
    return ok


def canonical_form(rmap, long n, perms):
    cdef long nn = n * n
    cdef long *r = _to_c(rmap, nn)
    cdef long *best = <long *> malloc(nn * sizeof(long))
    cdef long *cand = <long *> malloc(nn * sizeof(long))
    cdef long *perm = <long *> malloc(n * sizeof(long))
    cdef long *inv = <long *> malloc(n * sizeof(long))
    cdef long k, u, v, img, val, i
    cdef bint have = False, equal, worse
    try:
        if best == NULL or cand == NULL or perm == NULL or inv == NULL:
            raise MemoryError()
        for p in perms:
            for i in range(n):
                perm[i] = p[i]
                inv[perm[i]] = i
            equal = have
            worse = False
            for k in range(nn):
                u = k // n
                v = k % n
                img = r[inv[u] * n + inv[v]]
                val = perm[img // n] * n + perm[img % n]
                cand[k] = val
                if equal:
                    if val > best[k]:
                        worse = True
                        break
                    if val < best[k]:
                        equal = False
            if worse:
                continue
            if not have or not equal:
                for k in range(nn):
                    best[k] = cand[k]
                have = True
        result = tuple([best[k] for k in range(nn)])
    finally:
        free(r)
        free(best)
        free(cand)
        free(perm)
        free(inv)
    return result


cdef void _search(long k, long noff, long *off, long n, long *rmap,
                  long *row, long *col, list out) except *:
    cdef long p, q, x, y, a, b, t
    while k < noff and rmap[off[k]] != -1:
        k += 1
    if k == noff:
        out.append(tuple([rmap[t] for t in range(n * n)]))
        return
    p = off[k]
    x = p // n
    y = p % n
    for t in range(k + 1, noff):
        q = off[t]
        if rmap[q] != -1:
            continue
        a = q // n
        b = q % n
        if a == x or b == y:
            continue
        if (row[x] >> a) & 1 or (col[y] >> b) & 1 \
                or (row[a] >> x) & 1 or (col[b] >> y) & 1:
            continue
        rmap[p] = q
        rmap[q] = p
        row[x] |= 1 << a
        col[y] |= 1 << b
        row[a] |= 1 << x
        col[b] |= 1 << y
        _search(k + 1, noff, off, n, rmap, row, col, out)
        row[x] ^= 1 << a
        col[y] ^= 1 << b
        row[a] ^= 1 << x
        col[b] ^= 1 << y
        rmap[p] = -1
        rmap[q] = -1


def quantum_binomial_search(long n):
    cdef long nn = n * n
    cdef long noff = nn - n
    cdef long *rmap = <long *> malloc((nn if nn > 0 else 1) * sizeof(long))
    cdef long *off = <long *> malloc((noff if noff > 0 else 1) * sizeof(long))
    cdef long *row = <long *> malloc((n if n > 0 else 1) * sizeof(long))
    cdef long *col = <long *> malloc((n if n > 0 else 1) * sizeof(long))
    cdef long x, y, t
    out = []
    try:
        if rmap == NULL or off == NULL or row == NULL or col == NULL:
            raise MemoryError()
        for t in range(nn):
            rmap[t] = -1
        t = 0
        for x in range(n):
            rmap[x * n + x] = x * n + x
            row[x] = 1 << x
            col[x] = 1 << x
            for y in range(n):
                if x != y:
                    off[t] = x * n + y
                    t += 1
        if n > 0:
            _search(0, noff, off, n, rmap, row, col, out)
    finally:
        free(rmap)
        free(off)
        free(row)
        free(col)
    return out
