"""Finite quadratic sets (X, r) stored as a table on pairs.

Elements of X are the integers ``0..n-1``; names are only for display.
A pair ``(i, j)`` is encoded as ``i * n + j`` and ``rmap[i * n + j]`` is the
code of ``r(i, j)``. The left action is the first coordinate of ``r`` and
the right action the second one: ``r(x, y) = (L_x(y), R_y(x))``.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Sequence

from . import kernels


@dataclass(frozen=True)
class SetPredicates:
    involutive: bool
    nondegenerate: bool
    square_free: bool
    braided: bool

    @property
    def quantum_binomial(self) -> bool:
        return self.nondegenerate and self.involutive and self.square_free

    @property
    def symmetric(self) -> bool:
        return self.braided and self.involutive

    def as_dict(self) -> dict:
        return {
            "involutive": self.involutive,
            "nondegenerate": self.nondegenerate,
            "square_free": self.square_free,
            "braided": self.braided,
            "quantum_binomial": self.quantum_binomial,
            "symmetric": self.symmetric,
        }


@dataclass(frozen=True)
class QuadraticSet:
    """A bijection r of X x X, |X| = n.

    Equality and hashing ignore ``names``.
    """

    n: int
    rmap: tuple
    names: tuple = field(default=None, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("a quadratic set needs at least one element")
        rmap = tuple(int(v) for v in self.rmap)
        if len(rmap) != n * n:
            raise ValueError(f"rmap must have {n * n} entries, got {len(rmap)}")
        if sorted(rmap) != list(range(n * n)):
            raise ValueError("rmap is not a bijection of X x X")
        names = self.names
        if names is None:
            names = tuple(f"x{i + 1}" for i in range(n))
        names = tuple(str(s) for s in names)
        if len(names) != n or len(set(names)) != n or not all(names):
            raise ValueError("names must be n distinct non-empty strings")
        object.__setattr__(self, "rmap", rmap)
        object.__setattr__(self, "names", names)
        # eager: every downstream module branches on these
        object.__setattr__(self, "predicates", _compute_predicates(self))

    def r(self, i, j):
        return divmod(self.rmap[i * self.n + j], self.n)

    @cached_property
    def left(self):
        """left[x][y] = L_x(y), the first coordinate of r(x, y)."""
        n = self.n
        return tuple(tuple(self.rmap[x * n + y] // n for y in range(n))
                     for x in range(n))

    @cached_property
    def right(self):
        """right[y][x] = R_y(x), the second coordinate of r(x, y)."""
        n = self.n
        return tuple(tuple(self.rmap[x * n + y] % n for x in range(n))
                     for y in range(n))

    def relabel(self, perm: Sequence[int]) -> "QuadraticSet":
        """The isomorphic copy obtained by renaming element i to perm[i]."""
        n = self.n
        new = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                a, b = self.r(i, j)
                new[perm[i] * n + perm[j]] = perm[a] * n + perm[b]
        names = [None] * n
        for i in range(n):
            names[perm[i]] = self.names[i]
        return QuadraticSet(n, tuple(new), tuple(names))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def word(self, text) -> tuple:
        """Translate a word given as a sequence of names into indices."""
        if isinstance(text, str) and all(len(s) == 1 for s in self.names):
            text = list(text)
        return tuple(self.index(s) for s in text)


def _is_permutation(seq, n):
    return sorted(seq) == list(range(n))


def load_from_lmap(n, left_actions, names=None) -> QuadraticSet:
    """Build r(x, y) = (L_x(y), L_y^{-1}(x)) from the left actions L_x.

    ``left_actions[x][y]`` is L_x(y). Raises ValueError when some L_x is
    not a permutation of ``range(n)`` or the resulting r is not bijective.
    """
    if len(left_actions) != n:
        raise ValueError(f"expected {n} left actions, got {len(left_actions)}")
    inverses = []
    for x, perm in enumerate(left_actions):
        if len(perm) != n or not _is_permutation(perm, n):
            raise ValueError(f"left action of element {x} is not a permutation")
        inv = [0] * n
        for a, b in enumerate(perm):
            inv[b] = a
        inverses.append(inv)
    rmap = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            rmap[x * n + y] = left_actions[x][y] * n + inverses[y][x]
    return QuadraticSet(n, tuple(rmap), names)


def check_involutive(qs: QuadraticSet) -> bool:
    rm = qs.rmap
    return all(rm[rm[p]] == p for p in range(len(rm)))


def check_nondegenerate(qs: QuadraticSet) -> bool:
    n = qs.n
    return (all(_is_permutation(row, n) for row in qs.left)
            and all(_is_permutation(col, n) for col in qs.right))


def check_square_free(qs: QuadraticSet) -> bool:
    n = qs.n
    return all(qs.rmap[x * n + x] == x * n + x for x in range(n))


def check_braid(qs: QuadraticSet) -> bool:
    return kernels.braid_holds(qs.rmap, qs.n)


def _compute_predicates(qs):
    return SetPredicates(
        involutive=check_involutive(qs),
        nondegenerate=check_nondegenerate(qs),
        square_free=check_square_free(qs),
        braided=check_braid(qs),
    )


def predicates(qs: QuadraticSet) -> SetPredicates:
    return qs.predicates


def transposition_set(n, names=None) -> QuadraticSet:
    """The trivial solution r(x, y) = (y, x)."""
    return QuadraticSet(n, tuple(j * n + i for i in range(n) for j in range(n)),
                        names)


def all_relabelings(n):
    return list(permutations(range(n)))
