"""Pure-Python reference versions of the hot loops.

Every function here has a twin in ``_kernels.pyx`` with the same
signature and the same results. A word of length ``m`` over ``[0, n)`` is
encoded big-endian in base ``n``, so numeric order is lexicographic order.
Pairs are encoded as ``a * n + b`` and ``rmap[p]`` is the image of pair ``p``.
"""


def orbit_labels(rmap, n, m):
    """Label every word of length m by its orbit under the maps r^{i,i+1}.

    Orbits are numbered in order of their smallest member, so the
    representative of orbit k is the first code carrying label k.
    Returns ``(labels, sizes)``.
    """
    size = n ** m
    nn = n * n
    weights = [n ** (m - 2 - i) for i in range(m - 1)]
    labels = [-1] * size
    sizes = []
    for start in range(size):
        if labels[start] != -1:
            continue
        label = len(sizes)
        labels[start] = label
        stack = [start]
        count = 1
        while stack:
            code = stack.pop()
            for w in weights:
                pv = (code // w) % nn
                nxt = code + (rmap[pv] - pv) * w
                if labels[nxt] == -1:
                    labels[nxt] = label
                    count += 1
                    stack.append(nxt)
        sizes.append(count)
    return labels, sizes


def braid_holds(rmap, n):
    """True iff r12 r23 r12 == r23 r12 r23 on every triple."""
    nn = n * n

    def r12(c):
        pv = c // n
        return c + (rmap[pv] - pv) * n

    def r23(c):
        pv = c % nn
        return c + rmap[pv] - pv

    for c in range(n ** 3):
        if r12(r23(r12(c))) != r23(r12(r23(c))):
            return False
    return True


def canonical_form(rmap, n, perms):
    """Lexicographically least relabelling of rmap over the given perms.

    Relabelling by P sends r to P r P^{-1}, i.e. the new table maps
    ``(P a, P b)`` to ``P r(a, b)``.
    """
    best = None
    nn = n * n
    for perm in perms:
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        cand = [0] * nn
        # build lazily and abandon as soon as it exceeds the best so far
        worse = False
        equal = best is not None
        for k in range(nn):
            u, v = divmod(k, n)
            img = rmap[inv[u] * n + inv[v]]
            a, b = divmod(img, n)
            val = perm[a] * n + perm[b]
            cand[k] = val
            if equal:
                if val > best[k]:
                    worse = True
                    break
                if val < best[k]:
                    equal = False
        if worse:
            continue
        if best is None or not equal:
            best = cand
    return tuple(best)


def quantum_binomial_search(n):
    """Every involutive, square-free, nondegenerate rmap on n points.

    Off-diagonal pairs are matched up two at a time (involutivity is built
    in); the partial left and right action tables are kept Latin, which
    is exactly nondegeneracy once every pair is matched.
    """
    nn = n * n
    rmap = [-1] * nn
    for x in range(n):
        rmap[x * n + x] = x * n + x
    row = [1 << x for x in range(n)]
    col = [1 << y for y in range(n)]
    off = [x * n + y for x in range(n) for y in range(n) if x != y]
    out = []

    def rec(k):
        while k < len(off) and rmap[off[k]] != -1:
            k += 1
        if k == len(off):
            out.append(tuple(rmap))
            return
        p = off[k]
        x, y = divmod(p, n)
        for q in off[k + 1:]:
            if rmap[q] != -1:
                continue
            a, b = divmod(q, n)
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
            rec(k + 1)
            row[x] ^= 1 << a
            col[y] ^= 1 << b
            row[a] ^= 1 << x
            col[b] ^= 1 << y
            rmap[p] = -1
            rmap[q] = -1

    if n > 0:
        rec(0)
    return out
