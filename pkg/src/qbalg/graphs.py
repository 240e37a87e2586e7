"""The graph of normal words and the graph of obstructions.

For a set W of length-two monomials, Gamma_W has an edge x -> y for every
xy in W and Gamma_N is its complement inside X^2 (loops included). Paths
in Gamma_N count normal words, so they give the Hilbert series and the
growth; paths in Gamma_W are Anick chains, so they give the global
dimension.
"""
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from itertools import permutations
from math import comb

from .errors import TheoremViolation

NORMAL = "normal"
OBSTRUCTION = "obstruction"


@dataclass(frozen=True)
class QuadGraph:
    n: int
    edges: frozenset
    kind: str = OBSTRUCTION

    def successors(self, v):
        return sorted(b for a, b in self.edges if a == v)

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for a, b in sorted(self.edges):
            adj[a].append(b)
        return adj


@dataclass(frozen=True)
class GrowthReport:
    polynomial: bool
    degree: int = None
    gldim: int = None
    hilbert: tuple = ()


def build_graphs(W, n):
    """Return (Gamma_N, Gamma_W) for obstructions W on n vertices."""
    W = frozenset(tuple(w) for w in W)
    for a, b in W:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"monomial {(a, b)} is not in X^2")
    everything = {(a, b) for a in range(n) for b in range(n)}
    return (QuadGraph(n, frozenset(everything - W), NORMAL),
            QuadGraph(n, W, OBSTRUCTION))


def hilbert_coefficients(gn: QuadGraph, bound: int):
    """Number of paths with m vertices for m = 0..bound (1 for m = 0)."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    out = [1]
    counts = [1] * gn.n
    adj = gn.adjacency()
    for m in range(1, bound + 1):
        if m > 1:
            nxt = [0] * gn.n
            for a in range(gn.n):
                if counts[a]:
                    for b in adj[a]:
                        nxt[b] += counts[a]
            counts = nxt
        out.append(sum(counts))
    return out


def strongly_connected_components(g: QuadGraph):
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    adj = g.adjacency()
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = 0
    for root in range(g.n):
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            if i < len(adj[v]):
                work.append((v, i + 1))
                w = adj[v][i]
                if w not in index:
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def _component_edges(g, comp):
    members = set(comp)
    return sum(1 for a, b in g.edges if a in members and b in members)


def polynomial_growth(gn: QuadGraph):
    """(polynomial?, degree): no two distinct cycles share a vertex, and the
    degree is the largest number of cycles met along one path."""
    comps = strongly_connected_components(gn)
    comp_of = {}
    cyclic = []
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
        e = _component_edges(gn, comp)
        # strongly connected with |E| = |V| is exactly one simple cycle
        if len(comp) == 1:
            cyclic.append(e == 1)
        elif e == len(comp):
            cyclic.append(True)
        else:
            return False, None
    # longest weighted path in the condensation; comps come sinks first
    succ = [set() for _ in comps]
    for a, b in gn.edges:
        if comp_of[a] != comp_of[b]:
            succ[comp_of[a]].add(comp_of[b])
    best = [0] * len(comps)
    for k in range(len(comps)):
        best[k] = int(cyclic[k]) + max((best[j] for j in succ[k]), default=0)
    return True, max(best, default=0)


def global_dimension(gw: QuadGraph):
    """Longest path length in Gamma_W plus one, None when Gamma_W has a
    loop or a cycle of any length."""
    if any(a == b for a, b in gw.edges):
        return None
    deps = {v: set() for v in range(gw.n)}
    for a, b in gw.edges:
        deps[a].add(b)
    try:
        order = list(TopologicalSorter(deps).static_order())
    except CycleError:
        return None
    longest = {}
    for v in order:  # sinks first
        longest[v] = max((longest[w] + 1 for w in deps[v]), default=0)
    return max(longest.values(), default=0) + 1


def growth_and_gldim(gn: QuadGraph, gw: QuadGraph, bound=8) -> GrowthReport:
    if gn.edges & gw.edges or len(gn.edges) + len(gw.edges) != gn.n ** 2:
        raise ValueError("graphs are not complementary")
    poly, degree = polynomial_growth(gn)
    return GrowthReport(poly, degree, global_dimension(gw),
                        tuple(hilbert_coefficients(gn, bound)))


def is_acyclic_tournament(gw: QuadGraph) -> bool:
    n = gw.n
    if any(a == b for a, b in gw.edges):
        return False
    for a in range(n):
        for b in range(a + 1, n):
            if ((a, b) in gw.edges) == ((b, a) in gw.edges):
                return False
    return global_dimension(gw) is not None


def tournament_relabel(gw: QuadGraph):
    """Labels y_1..y_n (as a tuple of vertices) with every edge y_j -> y_i, i < j."""
    if not is_acyclic_tournament(gw):
        raise ValueError("graph is not an acyclic tournament")
    deps = {v: {b for a, b in gw.edges if a == v} for v in range(gw.n)}
    return tuple(TopologicalSorter(deps).static_order())


def to_edge_list(g: QuadGraph, names=None):
    names = names or [str(i) for i in range(g.n)]
    return "".join(f"{names[a]} -> {names[b]}\n" for a, b in sorted(g.edges))


@dataclass(frozen=True)
class MonomialVerdict:
    conditions: tuple
    growth: GrowthReport
    relabel: tuple = None

    @property
    def holds(self):
        return self.conditions[0]


def _ordered_words(perm, m):
    out = set()

    def rec(prefix, start):
        if len(prefix) == m:
            out.add(tuple(prefix))
            return
        for i in range(start, len(perm)):
            rec(prefix + [perm[i]], i)

    rec([], 0)
    return out


def _normal_words(n, W, m):
    words = [()]
    for k in range(m):
        words = [w + (c,) for w in words for c in range(n)
                 if k == 0 or (w[-1], c) not in W]
    return set(words)


def monomial_algebra_check(W, n, bound=8) -> MonomialVerdict:
    """Evaluate the seven equivalent characterisations of k<X>/(W) having
    polynomial growth and finite global dimension, each on its own."""
    W = frozenset(tuple(w) for w in W)
    gn, gw = build_graphs(W, n)
    growth = growth_and_gldim(gn, gw, bound)
    finite = growth.gldim is not None
    pairs = comb(n, 2)
    c1 = finite and growth.polynomial
    c2 = finite and len(W) == pairs
    c3 = growth.polynomial and all(a != b for a, b in W) and len(W) == pairs
    c4 = is_acyclic_tournament(gw)
    c5 = list(growth.hilbert) == [comb(n + m - 1, m) for m in range(bound + 1)]
    depth = min(bound, 3)
    normal = {m: _normal_words(n, W, m) for m in range(depth + 1)}
    c6 = any(all(normal[m] == _ordered_words(p, m) for m in range(depth + 1))
             for p in permutations(range(n)))
    c7 = any(W == {(p[j], p[i]) for i in range(n) for j in range(i + 1, n)}
             for p in permutations(range(n)))
    conds = (c1, c2, c3, c4, c5, c6, c7)
    if len(set(conds)) != 1:
        raise TheoremViolation(
            f"monomial algebra conditions disagree: {conds}", witness=sorted(W))
    return MonomialVerdict(conds, growth, tournament_relabel(gw) if c4 else None)
