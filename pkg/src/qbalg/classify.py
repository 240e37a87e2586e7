"""Quantum binomial sets on small X up to isomorphism, and the equivalence
matrix for quantum binomial algebras."""
from dataclasses import dataclass, field
from itertools import permutations
from math import comb
import random

from . import kernels
from .errors import TheoremViolation
from .graphs import build_graphs, polynomial_growth, global_dimension
from .orbits import enumerate_orbits, profile
from .pbw import certify_skew_polynomial_ring, check_pbw, pbw_search
from .quadratic_set import QuadraticSet
from .relations import (RelationSet, check_R_yangbaxter, dim_A, dim_A_dual,
                        hilbert_by_rank, is_quantum_binomial,
                        is_quantum_grassmann, koszul_dual_relations,
                        relations_from_set)

MAX_CLASSIFY_N = 5


def canonical_form(qs: QuadraticSet) -> QuadraticSet:
    """Lexicographically least rmap over all n! relabelings."""
    perms = list(permutations(range(qs.n)))
    return QuadraticSet(qs.n, kernels.canonical_form(qs.rmap, qs.n, perms))


def iter_quantum_binomial(n, rng=None):
    """Yield every quantum binomial rmap on n points.

    Off-diagonal pairs are matched two at a time, so involutivity comes for
    free; the left/right action tables are kept partially Latin while
    matching. With ``rng`` the candidate partners are tried in shuffled
    order, which is how random samples are drawn.
    """
    nn = n * n
    rmap = [-1] * nn
    for x in range(n):
        rmap[x * n + x] = x * n + x
    row = [1 << x for x in range(n)]
    col = [1 << y for y in range(n)]
    off = [x * n + y for x in range(n) for y in range(n) if x != y]

    def rec(k):
        while k < len(off) and rmap[off[k]] != -1:
            k += 1
        if k == len(off):
            yield tuple(rmap)
            return
        p = off[k]
        x, y = divmod(p, n)
        cands = off[k + 1:]
        if rng is not None:
            cands = list(cands)
            rng.shuffle(cands)
        for q in cands:
            if rmap[q] != -1:
                continue
            a, b = divmod(q, n)
            if a == x or b == y:
                continue
            if (row[x] >> a) & 1 or (col[y] >> b) & 1 \
                    or (row[a] >> x) & 1 or (col[b] >> y) & 1:
                continue
            rmap[p], rmap[q] = q, p
            row[x] |= 1 << a
            col[y] |= 1 << b
            row[a] |= 1 << x
            col[b] |= 1 << y
            yield from rec(k + 1)
            row[x] ^= 1 << a
            col[y] ^= 1 << b
            row[a] ^= 1 << x
            col[b] ^= 1 << y
            rmap[p] = rmap[q] = -1

    if n > 0:
        yield from rec(0)


def sample_quantum_binomial(n, rng: random.Random) -> QuadraticSet:
    """A random quantum binomial set: first hit of a shuffled search."""
    return QuadraticSet(n, next(iter_quantum_binomial(n, rng)))


@dataclass
class SolutionCensus:
    n: int
    total_quantum_binomial: int
    total_symmetric: int
    representatives: list
    # per representative: orbit profile, dims, class size, pbw order count
    invariants: list = field(default_factory=list)

    @property
    def symmetric_classes(self):
        return sum(inv["symmetric"] for inv in self.invariants)


def enumerate_quantum_binomial(n, with_pbw=True, max_n=MAX_CLASSIFY_N) -> SolutionCensus:
    if n < 1 or n > max_n:
        raise ValueError(f"n = {n} outside the search bound 1..{max_n}")
    perms = list(permutations(range(n)))
    classes = {}
    total = total_sym = 0
    for rmap in kernels.quantum_binomial_search(n):
        total += 1
        key = kernels.canonical_form(rmap, n, perms)
        if key in classes:
            classes[key][0] += 1
            total_sym += classes[key][1]
        else:
            sym = kernels.braid_holds(rmap, n)
            classes[key] = [1, sym]
            total_sym += sym
    reps = []
    invariants = []
    for key in sorted(classes):
        size, sym = classes[key]
        qs = QuadraticSet(n, key)
        reps.append(qs)
        inv = {"class_size": size, "symmetric": bool(sym)}
        if n >= 3:
            census = enumerate_orbits(qs, 3)
            inv.update(profile(census))
            inv["dim_A3"] = len(census)
        else:
            inv["dim_A3"] = comb(n + 2, 3) if n else 0
        if with_pbw:
            inv["pbw_order_count"] = len(pbw_search(relations_from_set(qs)))
        invariants.append(inv)
    return SolutionCensus(n, total, total_sym, reps, invariants)


CONDITIONS = ("i_pbw_finite_gldim", "ii_pbw_polynomial_growth",
              "iii_as_regular_pbw", "iv_yang_baxter", "v_skew_polynomial_ring",
              "vi_dim_A3", "vii_hilbert_series", "viii_dual_grassmann")


@dataclass(frozen=True)
class EquivalenceMatrix:
    n: int
    conditions: dict
    details: dict

    @property
    def value(self):
        return next(iter(self.conditions.values()))


def _as_relations(obj):
    if isinstance(obj, QuadraticSet):
        return relations_from_set(obj)
    return obj


def theorem3_harness(obj, bound=4) -> EquivalenceMatrix:
    """Evaluate the eight equivalent conditions for a quantum binomial
    algebra independently and insist they agree.

    Condition (iii) is not computed homologically; it is reported equal to
    the skew polynomial certificate, which implies it.
    """
    rs = _as_relations(obj)
    if not is_quantum_binomial(rs):
        raise ValueError("the equivalence matrix needs quantum binomial relations")
    n = rs.n
    pbw_orders = pbw_search(rs)
    gldims, growths = [], []
    for order in pbw_orders:
        gn, gw = build_graphs(check_pbw(rs, order).obstructions, n)
        gldims.append(global_dimension(gw))
        growths.append(polynomial_growth(gn)[0])
    cert = certify_skew_polynomial_ring(rs)
    a3 = dim_A(rs, 3) == comb(n + 2, 3)
    a3_dual = dim_A_dual(rs, 3) == comb(n, 3)
    if a3 != a3_dual:
        raise TheoremViolation("dim A_3 and dim A!_3 criteria disagree", witness=rs)
    hilbert = hilbert_by_rank(rs, bound)
    conds = {
        "i_pbw_finite_gldim": any(g is not None for g in gldims),
        "ii_pbw_polynomial_growth": any(growths),
        "iii_as_regular_pbw": cert is not None,
        "iv_yang_baxter": check_R_yangbaxter(rs),
        "v_skew_polynomial_ring": cert is not None,
        "vi_dim_A3": a3,
        "vii_hilbert_series": hilbert == [comb(n + m - 1, m) for m in range(bound + 1)],
        "viii_dual_grassmann": is_quantum_grassmann(koszul_dual_relations(rs)),
    }
    details = {
        "pbw_order_count": len(pbw_orders),
        "certificate": cert.perm if cert else None,
        "hilbert": hilbert,
        "dim_A3": dim_A(rs, 3),
        "dim_A3_dual": dim_A_dual(rs, 3),
    }
    if len(set(conds.values())) != 1:
        raise TheoremViolation(f"equivalence matrix disagrees: {conds}", witness=rs)
    return EquivalenceMatrix(n, conds, details)


def yang_baxter_triangle(rs: RelationSet):
    """(R solves YBE, skew polynomial certificate, dim A_3 = C(n+2, 3))."""
    n = rs.n
    return (check_R_yangbaxter(rs),
            certify_skew_polynomial_ring(rs) is not None,
            dim_A(rs, 3) == comb(n + 2, 3))
