"""Orbits of the group generated by r^{i,i+1} acting on words of length m.

For an involutive r two words are equal in the monoid S(X, r) exactly when
they have the same length and lie in the same orbit, so the orbit count in
degree m is dim of the degree-m part of the monoid algebra.
"""
from dataclasses import dataclass
from enum import Enum
from math import comb

from . import kernels
from .errors import TheoremViolation
from .quadratic_set import QuadraticSet

DEFAULT_MAX_DEGREE = 6
MAX_WORDS = 10 ** 6


class OrbitType(str, Enum):
    DIAGONAL = "diagonal"
    TYPE_II = "type_ii"
    SQUARE_FREE = "square_free"
    OTHER = "other"


@dataclass(frozen=True)
class Orbit:
    size: int
    representative: tuple
    type: OrbitType = None
    # members in (Delta_2 x X u X x Delta_2) minus Delta_3; degree 3 only
    edge_count: int = None


@dataclass(frozen=True)
class OrbitCensus:
    n: int
    m: int
    orbit_of: tuple
    orbits: tuple

    def __len__(self):
        return len(self.orbits)

    @property
    def q(self):
        return sum(o.type is OrbitType.SQUARE_FREE for o in self.orbits)

    def sizes_of(self, kind):
        return sorted(o.size for o in self.orbits if o.type is kind)

    @property
    def type_ii_sizes(self):
        return self.sizes_of(OrbitType.TYPE_II)

    @property
    def square_free_sizes(self):
        return self.sizes_of(OrbitType.SQUARE_FREE)

    def members(self, orbit_id):
        return [decode(c, self.n, self.m)
                for c, k in enumerate(self.orbit_of) if k == orbit_id]


def encode(word, n):
    code = 0
    for c in word:
        code = code * n + c
    return code


def decode(code, n, m):
    out = [0] * m
    for i in range(m - 1, -1, -1):
        code, out[i] = divmod(code, n)
    return tuple(out)


def _classify3(word_codes, n):
    diag = edge = 0
    for c in word_codes:
        a, b, d = decode(c, n, 3)
        if a == b == d:
            diag += 1
        elif a == b or b == d:
            edge += 1
    return diag, edge


def enumerate_orbits(qs: QuadraticSet, m: int, max_degree=DEFAULT_MAX_DEGREE):
    if m < 2 or m > max_degree:
        raise ValueError(f"degree {m} outside [2, {max_degree}]")
    if qs.n ** m > MAX_WORDS:
        raise ValueError(f"{qs.n}^{m} words exceeds the bound {MAX_WORDS}")
    return _census(qs, m)


_CACHE = {}


def _census(qs, m):
    key = (qs.n, qs.rmap, m)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    n = qs.n
    labels, sizes = kernels.orbit_labels(qs.rmap, n, m)
    reps = [None] * len(sizes)
    groups = [[] for _ in sizes] if m == 3 else None
    for code, k in enumerate(labels):
        if reps[k] is None:
            reps[k] = code
        if groups is not None:
            groups[k].append(code)
    orbits = []
    for k, size in enumerate(sizes):
        rep = decode(reps[k], n, m)
        if m != 3:
            orbits.append(Orbit(size, rep))
            continue
        diag, edge = _classify3(groups[k], n)
        if diag:
            kind = OrbitType.DIAGONAL if size == 1 else OrbitType.OTHER
        elif edge:
            kind = OrbitType.TYPE_II
        else:
            kind = OrbitType.SQUARE_FREE
        orbits.append(Orbit(size, rep, kind, edge))
    census = OrbitCensus(n, m, tuple(labels), tuple(orbits))
    if len(_CACHE) > 256:
        _CACHE.clear()
    _CACHE[key] = census
    return census


def _apply(qs, word, i):
    a, b = qs.r(word[i], word[i + 1])
    return word[:i] + (a, b) + word[i + 2:]


def words_equal(qs: QuadraticSet, w1, w2, max_degree=DEFAULT_MAX_DEGREE) -> bool:
    w1, w2 = tuple(w1), tuple(w2)
    if len(w1) != len(w2):
        return False
    m = len(w1)
    if m < 2 or w1 == w2:
        return w1 == w2
    if m <= max_degree and qs.n ** m <= MAX_WORDS:
        census = _census(qs, m)
        return census.orbit_of[encode(w1, qs.n)] == census.orbit_of[encode(w2, qs.n)]
    seen = {w1}
    stack = [w1]
    while stack:
        w = stack.pop()
        for i in range(m - 1):
            v = _apply(qs, w, i)
            if v == w2:
                return True
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def monoid_dimension(qs: QuadraticSet, m: int, max_degree=DEFAULT_MAX_DEGREE) -> int:
    if not qs.predicates.involutive:
        raise ValueError("orbit counts give monoid dimensions only for involutive r")
    if m < 0:
        raise ValueError("degree must be non-negative")
    if m < 2:
        return qs.n ** m
    return len(enumerate_orbits(qs, m, max_degree))


def _require_quantum_binomial(qs):
    if not qs.predicates.quantum_binomial:
        raise ValueError("requires a quantum binomial set "
                         "(nondegenerate, involutive, square-free)")


def symmetric_via_orbits(qs: QuadraticSet) -> bool:
    """Decide the braid relation from the degree-3 orbit census alone."""
    _require_quantum_binomial(qs)
    census = _census(qs, 3)
    by_count = census.q == comb(qs.n, 3)
    by_sizes = (all(s == 3 for s in census.type_ii_sizes)
                and all(s == 6 for s in census.square_free_sizes))
    if by_count != by_sizes:
        raise TheoremViolation(
            f"q = {census.q} vs orbit sizes disagree on symmetry", witness=qs)
    return by_count


def check_cyclic_condition(qs: QuadraticSet) -> bool:
    """Every type-(ii) orbit has exactly three elements.

    Cross-checked against the pointwise identities
    ``L_{R_y(x)}(y) = L_x(y)`` and ``R_{L_x(y)}(x) = R_y(x)``.
    """
    _require_quantum_binomial(qs)
    census = _census(qs, 3)
    by_orbits = all(s == 3 for s in census.type_ii_sizes)
    L, R = qs.left, qs.right
    n = qs.n
    pointwise = all(
        L[R[y][x]][y] == L[x][y] and R[L[x][y]][x] == R[y][x]
        for x in range(n) for y in range(n))
    if by_orbits != pointwise:
        raise TheoremViolation(
            "cyclic condition: orbit sizes and pointwise identities disagree",
            witness=qs)
    return by_orbits


def profile(census: OrbitCensus) -> dict:
    """Summary used in reports and census invariants (degree 3)."""
    counts = {t.value: 0 for t in OrbitType}
    for o in census.orbits:
        counts[o.type.value] += 1
    return {
        "orbits": len(census),
        "counts": counts,
        "q": census.q,
        "type_ii_sizes": census.type_ii_sizes,
        "square_free_sizes": census.square_free_sizes,
    }
