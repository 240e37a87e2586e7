"""Quadratic relations with exact rational coefficients.

A binomial relation ``xy - c * y'x'`` is stored as ``Relation((x, y), (y', x'), c)``.
The coefficient belongs to the left monomial: the associated linear map
sends ``x(x)y`` to ``c * y'(x)x'`` and ``y'(x)x'`` to ``c^-1 * x(x)y``.

General (not necessarily binomial) quadratic presentations, such as the
Koszul dual, are ``RelationSpace`` objects: a list of sparse vectors over
the n^2 monomials of length two.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb

from .errors import TheoremViolation
from .linalg import Echelon, nullspace, rank
from .quadratic_set import QuadraticSet

MAX_MONOMIALS = 10 ** 6


@dataclass(frozen=True)
class Relation:
    lhs: tuple
    rhs: tuple
    coeff: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            raise ValueError("relation coefficient must be non-zero")

    def vector(self, n):
        """Coefficient vector over pair codes."""
        a = self.lhs[0] * n + self.lhs[1]
        b = self.rhs[0] * n + self.rhs[1]
        return {a: Fraction(1), b: -self.coeff}


@dataclass(frozen=True)
class RelationSpace:
    """Span of arbitrary quadratic relations; rows are ((pair_code, coeff), ...)."""

    n: int
    rows: tuple
    names: tuple = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(sorted((int(c), Fraction(v)) for c, v in dict(r).items()
                                  if v != 0))
                     for r in self.rows)
        object.__setattr__(self, "rows", tuple(r for r in rows if r))
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.n)))

    @property
    def space(self):
        return self

    def vectors(self):
        return [dict(r) for r in self.rows]

    @cached_property
    def dimension(self):
        """dim of the span of the relations inside V (x) V."""
        return rank(self.vectors())


@dataclass(frozen=True)
class RelationSet:
    """Binomial quadratic relations; every monomial occurs at most once."""

    n: int
    rels: tuple
    names: tuple = field(default=None, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("need at least one generator")
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(n)))
        rels = tuple(r if isinstance(r, Relation) else Relation(*r) for r in self.rels)
        seen = set()
        for rel in rels:
            for mono in (rel.lhs, rel.rhs):
                if len(mono) != 2 or not all(0 <= c < n for c in mono):
                    raise ValueError(f"bad monomial {mono}")
            if rel.lhs == rel.rhs:
                raise ValueError(f"degenerate relation on {rel.lhs}: both sides equal")
            for mono in (rel.lhs, rel.rhs):
                if mono in seen:
                    raise ValueError(f"monomial {self.word(mono)} occurs twice")
                seen.add(mono)
        object.__setattr__(self, "rels", rels)

    def word(self, mono):
        return "".join(self.names[c] for c in mono)

    @cached_property
    def derived_r(self) -> QuadraticSet:
        n = self.n
        rmap = list(range(n * n))
        for rel in self.rels:
            a = rel.lhs[0] * n + rel.lhs[1]
            b = rel.rhs[0] * n + rel.rhs[1]
            rmap[a], rmap[b] = b, a
        return QuadraticSet(n, tuple(rmap), self.names)

    @cached_property
    def derived_R(self) -> dict:
        """pair code -> (coeff, pair code); pairs not listed are fixed with coeff 1."""
        n = self.n
        out = {}
        for rel in self.rels:
            a = rel.lhs[0] * n + rel.lhs[1]
            b = rel.rhs[0] * n + rel.rhs[1]
            out[a] = (rel.coeff, b)
            out[b] = (1 / rel.coeff, a)
        return out

    @cached_property
    def space(self) -> RelationSpace:
        return RelationSpace(self.n, tuple(r.vector(self.n) for r in self.rels),
                             self.names)


def relations_from_set(qs: QuadraticSet) -> RelationSet:
    """One relation xy - y'x' for each unordered pair {p, r(p)} with r(p) != p.

    The lexicographically smaller monomial is written on the left.
    """
    if not qs.predicates.involutive:
        raise ValueError("relations of a quadratic set need r involutive")
    n = qs.n
    rels = []
    for p in range(n * n):
        q = qs.rmap[p]
        if p < q:
            rels.append(Relation(divmod(p, n), divmod(q, n)))
    return RelationSet(n, tuple(rels), qs.names)


def is_quantum_binomial(rs: RelationSet) -> bool:
    """Square-free, each monomial at most once, nondegenerate derived r."""
    if any(m[0] == m[1] for rel in rs.rels for m in (rel.lhs, rel.rhs)):
        return False
    if not rs.derived_r.predicates.nondegenerate:
        return False
    if len(rs.rels) != comb(rs.n, 2):
        raise TheoremViolation(
            f"quantum binomial relations on {rs.n} generators must number "
            f"{comb(rs.n, 2)}, found {len(rs.rels)}", witness=rs)
    return True


def check_R_yangbaxter(rs: RelationSet) -> bool:
    """R12 R23 R12 == R23 R12 R23 on every basis tensor, scalars included."""
    n = rs.n
    nn = n * n
    R = rs.derived_R
    one = Fraction(1)

    def r12(state):
        c, code = state
        pv = code // n
        f, img = R.get(pv, (one, pv))
        return c * f, img * n + code % n

    def r23(state):
        c, code = state
        pv = code % nn
        f, img = R.get(pv, (one, pv))
        return c * f, code - pv + img

    for code in range(n ** 3):
        s = (one, code)
        if r12(r23(r12(s))) != r23(r12(r23(s))):
            return False
    return True


def _as_space(pres):
    if isinstance(pres, (RelationSet, RelationSpace)):
        return pres.space
    raise TypeError(f"expected RelationSet or RelationSpace, got {type(pres).__name__}")


def dim_A(pres, m, max_monomials=MAX_MONOMIALS) -> int:
    """Dimension of the degree-m part of T(V)/(R) by exact rank."""
    space = _as_space(pres)
    if m < 0:
        raise ValueError("degree must be non-negative")
    if space.n ** m > max_monomials:
        raise ValueError(f"{space.n}^{m} monomials exceeds the bound {max_monomials}")
    return _dim(space, m)


def independent_relations(space):
    basis = Echelon()
    return [row for row in space.vectors() if basis.add(row)]


def ideal_rows(space, m):
    """Spanning vectors v (x) rho (x) w of the degree-m part of the ideal."""
    n = space.n
    rels = independent_relations(space)
    for i in range(m - 1):
        tail = n ** (m - 2 - i)
        shift = n * n * tail
        for v in range(n ** i):
            base_v = v * shift
            for rel in rels:
                for w in range(tail):
                    yield {base_v + c * tail + w: val for c, val in rel.items()}


@lru_cache(maxsize=512)
def _dim(space, m):
    n = space.n
    if m < 2:
        return n ** m
    ech = Echelon()
    for row in ideal_rows(space, m):
        ech.add(row)
    return n ** m - ech.rank


def koszul_dual_relations(pres) -> RelationSpace:
    """Orthogonal complement of the relation space under the standard pairing."""
    space = _as_space(pres)
    n = space.n
    return RelationSpace(n, tuple(nullspace(space.vectors(), n * n)), space.names)


def dim_A_dual(pres, m, max_monomials=MAX_MONOMIALS) -> int:
    space = _as_space(pres)
    dual = koszul_dual_relations(space)
    value = dim_A(dual, m, max_monomials)
    if m == 3:
        n = space.n
        formula = n ** 3 - 2 * n * dim_A(space, 2) + dim_A(space, 3, max_monomials)
        if formula != value:
            raise TheoremViolation(
                f"dual dimension {value} disagrees with the degree-3 formula {formula}",
                witness=space)
    return value


def is_quantum_grassmann(pres, max_monomials=MAX_MONOMIALS) -> bool:
    """Dimensions C(n, i) in degrees 0..n and zero in degree n + 1.

    Only the dimension profile is checked, not the perfect pairing.
    """
    space = _as_space(pres)
    n = space.n
    for i in range(n + 2):
        want = comb(n, i) if i <= n else 0
        if dim_A(space, i, max_monomials) != want:
            return False
    return True


def hilbert_by_rank(pres, bound, max_monomials=MAX_MONOMIALS):
    return [dim_A(pres, m, max_monomials) for m in range(bound + 1)]


def monomial_relations(W, n, names=None) -> RelationSpace:
    """The presentation k<X>/(W) of a quadratic monomial algebra."""
    return RelationSpace(n, tuple({a * n + b: 1} for a, b in sorted(W)), names)


def ordered_monomials(perm, m):
    """Codes of y_1^a1 ... y_n^an of total degree m, y_k = perm[k-1]."""
    n = len(perm)
    out = []

    def rec(code, start, left):
        if not left:
            out.append(code)
            return
        for k in range(start, n):
            rec(code * n + perm[k], k, left - 1)

    rec(0, 0, m)
    return out


@lru_cache(maxsize=64)
def _ideal_echelon(space, m):
    ech = Echelon()
    for row in ideal_rows(space, m):
        ech.add(row)
    return ech


def ordered_monomials_form_basis(pres, perm, m) -> bool:
    """Do the ordered monomials in the enumeration ``perm`` project to a
    basis of the degree-m component? Decided by exact rank."""
    space = _as_space(pres)
    mons = ordered_monomials(perm, m)
    if len(mons) != dim_A(space, m):
        return False
    if m < 2:
        return True
    ideal = _ideal_echelon(space, m)
    # independence modulo the ideal, and the count already equals dim A_m
    quotient = Echelon()
    return all(quotient.add(ideal.reduce({code: 1})) for code in mons)
