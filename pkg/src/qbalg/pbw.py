"""Deg-lex orders, degree-3 overlap resolution and PBW searches.

For quadratic relations the diamond lemma reduces the Groebner basis
question to the degree-3 overlaps ``uvw`` with both ``uv`` and ``vw``
leading monomials, so nothing beyond degree 3 is ever completed.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb

from .relations import RelationSet

MAX_SEARCH_N = 8


@dataclass(frozen=True)
class DegLexOrder:
    """perm[0] < perm[1] < ... < perm[n-1]."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation")
        object.__setattr__(self, "perm", perm)
        rank = [0] * len(perm)
        for pos, g in enumerate(perm):
            rank[g] = pos
        object.__setattr__(self, "rank", tuple(rank))

    def key(self, word):
        rank = self.rank
        return (len(word), tuple(rank[c] for c in word))

    def greater(self, u, v):
        return self.key(u) > self.key(v)

    @classmethod
    def from_names(cls, names, ascending):
        """Order from generator names listed smallest first."""
        return cls(tuple(names.index(s) for s in ascending))


@dataclass(frozen=True)
class Rule:
    """lead -> coeff * tail, with lead > tail in the order."""

    lead: tuple
    tail: tuple
    coeff: Fraction


@dataclass(frozen=True)
class PbwReport:
    order: DegLexOrder
    rules: tuple
    obstructions: frozenset
    overlaps: tuple
    is_pbw: bool
    # (word, normal form via left rewrite, normal form via right rewrite)
    failing_overlap: tuple = None


def orient_relations(rs: RelationSet, order: DegLexOrder):
    """Rewrite each relation with its larger monomial as the leading term."""
    rules = []
    for rel in rs.rels:
        if rel.lhs == rel.rhs:
            raise ValueError(f"degenerate relation on {rs.word(rel.lhs)}")
        if order.greater(rel.lhs, rel.rhs):
            rules.append(Rule(rel.lhs, rel.rhs, rel.coeff))
        else:
            rules.append(Rule(rel.rhs, rel.lhs, 1 / rel.coeff))
    return tuple(rules)


def normal_form(poly, table, order):
    """Reduce ``{word: coeff}`` by always rewriting the leftmost reducible
    pair of the largest reducible word."""
    poly = {w: c for w, c in poly.items() if c}
    while True:
        target = None
        for w in poly:
            if any(w[i:i + 2] in table for i in range(len(w) - 1)):
                if target is None or order.greater(w, target):
                    target = w
        if target is None:
            return poly
        c = poly.pop(target)
        i = next(i for i in range(len(target) - 1) if target[i:i + 2] in table)
        tail, f = table[target[i:i + 2]]
        new = target[:i] + tail + target[i + 2:]
        val = poly.get(new, 0) + c * f
        if val:
            poly[new] = val
        else:
            poly.pop(new, None)


def check_pbw(rs: RelationSet, order: DegLexOrder) -> PbwReport:
    rules = orient_relations(rs, order)
    table = {r.lead: (r.tail, r.coeff) for r in rules}
    W = frozenset(table)
    n = rs.n
    overlaps = []
    failing = None
    for u in range(n):
        for v in range(n):
            if (u, v) not in W:
                continue
            for w in range(n):
                if (v, w) not in W:
                    continue
                word = (u, v, w)
                overlaps.append(word)
                t1, c1 = table[(u, v)]
                t2, c2 = table[(v, w)]
                left = normal_form({t1 + (w,): c1}, table, order)
                right = normal_form({(u,) + t2: c2}, table, order)
                if left != right and failing is None:
                    failing = (word, left, right)
    overlaps.sort(key=order.key, reverse=True)
    return PbwReport(order, rules, W, tuple(overlaps), failing is None, failing)


def _check_bound(rs, max_n):
    if rs.n > max_n:
        raise ValueError(f"{rs.n}! orders exceeds the search bound n <= {max_n}")


def pbw_search(rs: RelationSet, max_n=MAX_SEARCH_N):
    """Every enumeration of X for which the relations are a Groebner basis."""
    _check_bound(rs, max_n)
    found = []
    for perm in permutations(range(rs.n)):
        order = DegLexOrder(perm)
        if check_pbw(rs, order).is_pbw:
            found.append(order)
    return found


def is_skew_polynomial_type(rs: RelationSet, order: DegLexOrder) -> bool:
    """Index conditions of a binomial skew polynomial ring (no Groebner test).

    In positions of ``order`` every rule must read x_j x_i -> c x_i' x_j'
    with j > i, j > i', i' < j', and every x_i x_j with i < j must occur
    as some right-hand side.
    """
    n = rs.n
    if len(rs.rels) != comb(n, 2):
        return False
    rank = order.rank
    tails = set()
    for rule in orient_relations(rs, order):
        j, i = rank[rule.lead[0]], rank[rule.lead[1]]
        ip, jp = rank[rule.tail[0]], rank[rule.tail[1]]
        if not (j > i and j > ip and ip < jp):
            return False
        tails.add((ip, jp))
    return len(tails) == comb(n, 2)


def certify_skew_polynomial_ring(rs: RelationSet, max_n=MAX_SEARCH_N):
    """First order (lexicographic in perm) making rs a binomial skew
    polynomial ring, or None."""
    _check_bound(rs, max_n)
    for perm in permutations(range(rs.n)):
        order = DegLexOrder(perm)
        if is_skew_polynomial_type(rs, order) and check_pbw(rs, order).is_pbw:
            return order
    return None


def normal_words(report: PbwReport, m: int):
    """Words of length m with no adjacent pair in the obstruction set."""
    if m < 0:
        raise ValueError("length must be non-negative")
    if not report.is_pbw:
        raise ValueError("normal words form a basis only for a PBW order")
    n = len(report.order.perm)
    W = report.obstructions
    words = [()]
    for k in range(m):
        words = [w + (c,) for w in words for c in range(n)
                 if k == 0 or (w[-1], c) not in W]
    return words
