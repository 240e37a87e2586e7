"""Each theorem as an executable all-equal assertion over instance streams.

A check takes one instance and returns ``(ok, detail)``; raising
TheoremViolation counts as a failure too. Failing instances are written
as JSON witness files that ``replay_witness`` can re-run on their own.
"""
import json
import os
import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb

from . import fixture, kernels
from .classify import (iter_quantum_binomial, sample_quantum_binomial,
                       theorem3_harness, yang_baxter_triangle)
from .errors import TheoremViolation
from .graphs import (build_graphs, global_dimension, hilbert_coefficients,
                     is_acyclic_tournament, monomial_algebra_check,
                     polynomial_growth, tournament_relabel)
from .io import emit_presentation, parse_presentation
from .orbits import (OrbitType, check_cyclic_condition, enumerate_orbits,
                     monoid_dimension, symmetric_via_orbits, words_equal)
from .pbw import DegLexOrder, check_pbw, pbw_search
from .quadratic_set import QuadraticSet
from .relations import (RelationSet, check_R_yangbaxter, dim_A, dim_A_dual,
                        monomial_relations, ordered_monomials_form_basis,
                        relations_from_set)

SCOPES = ("fixtures", "exhaustive-n<=3", "sampled-n<=5", "census-n<=4")
RANK_WORD_LIMIT = 1000


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)  # (detail, witness path or None)

    @property
    def passed(self):
        return not self.failures

    def as_dict(self):
        return {"instances": self.instances, "passed": self.passed,
                "failures": [{"detail": d, "witness": w} for d, w in self.failures]}


@dataclass
class SuiteResult:
    scope: str
    seed: int
    checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c.passed for c in self.checks.values())

    def as_dict(self):
        return {"scope": self.scope, "seed": self.seed, "passed": self.passed,
                "checks": {k: v.as_dict() for k, v in sorted(self.checks.items())}}


# ---------------------------------------------------------------- set checks

def _census3(qs):
    return enumerate_orbits(qs, 3)


def check_orbit_profile(qs):
    """Orbit types in degree 3 of a quantum binomial set."""
    n = qs.n
    c = _census3(qs)
    kinds = [o.type for o in c.orbits]
    problems = []
    if kinds.count(OrbitType.DIAGONAL) != n:
        problems.append(f"{kinds.count(OrbitType.DIAGONAL)} diagonal orbits")
    if kinds.count(OrbitType.TYPE_II) != n * (n - 1):
        problems.append(f"{kinds.count(OrbitType.TYPE_II)} type-(ii) orbits")
    if OrbitType.OTHER in kinds:
        problems.append("orbit meeting the diagonal with more than one element")
    if any(s < 3 for s in c.type_ii_sizes):
        problems.append(f"type-(ii) sizes {c.type_ii_sizes}")
    if any(o.edge_count != 2 for o in c.orbits if o.type is OrbitType.TYPE_II):
        problems.append("type-(ii) orbit without exactly two edge words")
    if any(s < 6 for s in c.square_free_sizes):
        problems.append(f"square-free sizes {c.square_free_sizes}")
    return not problems, "; ".join(problems)


def check_counting_identity(qs):
    n = qs.n
    c = _census3(qs)
    total = n + sum(c.type_ii_sizes) + sum(c.square_free_sizes)
    return total == n ** 3, f"n + sum = {total}, n^3 = {n ** 3}"


def check_q_bound(qs):
    q = _census3(qs).q
    return q <= comb(qs.n, 3), f"q = {q} > C(n,3)"


def check_four_way(qs):
    """braid <=> q = C(n,3) <=> dim A_3 = C(n+2,3) <=> skew certificate."""
    n = qs.n
    rs = relations_from_set(qs)
    braid = kernels.braid_holds(qs.rmap, n)
    by_orbits = symmetric_via_orbits(qs)
    yb, cert, a3 = yang_baxter_triangle(rs)
    cyclic = check_cyclic_condition(qs)
    verdicts = {"braid": braid, "q": by_orbits, "R_ybe": yb,
                "certificate": cert, "dim_A3": a3}
    ok = len(set(verdicts.values())) == 1 and (cyclic or not braid)
    return ok, f"verdicts {verdicts}, cyclic {cyclic}"


def check_orbit_vs_rank(qs):
    rs = relations_from_set(qs)
    bad = []
    for m in (2, 3):
        a, b = monoid_dimension(qs, m), dim_A(rs, m)
        if a != b:
            bad.append(f"degree {m}: orbits {a}, rank {b}")
    return not bad, "; ".join(bad)


def check_yang_baxter_lift(qs):
    rs = relations_from_set(qs)
    a, b = check_R_yangbaxter(rs), kernels.braid_holds(qs.rmap, qs.n)
    return a == b, f"linear YBE {a}, braid {b}"


def check_dual_formula(obj):
    rs = relations_from_set(obj) if isinstance(obj, QuadraticSet) else obj
    dim_A_dual(rs, 3)  # raises on disagreement
    return True, ""


def check_words_equal(qs):
    """Same orbit <=> equal in the monoid, tested on orbit representatives."""
    c = _census3(qs)
    for k, orbit in enumerate(c.orbits):
        members = c.members(k)
        if not words_equal(qs, orbit.representative, members[-1]):
            return False, f"{orbit.representative} vs {members[-1]}"
    reps = [o.representative for o in c.orbits[:6]]
    for a, b in combinations(reps, 2):
        if words_equal(qs, a, b):
            return False, f"distinct orbits {a} {b} reported equal"
    return True, ""


def check_equivalence_matrix(obj):
    m = theorem3_harness(obj)
    return True, f"value {m.value}"


SET_CHECKS = {
    "orbit_profile": check_orbit_profile,
    "counting_identity": check_counting_identity,
    "q_bound": check_q_bound,
    "four_way_symmetric": check_four_way,
    "orbit_vs_rank": check_orbit_vs_rank,
    "yang_baxter_lift": check_yang_baxter_lift,
    "dual_formula": check_dual_formula,
    "words_equal": check_words_equal,
    "equivalence_matrix": check_equivalence_matrix,
}


# ----------------------------------------------------------- monomial checks

def check_monomial_seven(W, n, bound=8):
    v = monomial_algebra_check(W, n, bound)
    return True, f"value {v.holds}"


def check_tournament(W, n, bound=8):
    """Hilbert series, gldim and growth degree of an acyclic tournament."""
    gn, gw = build_graphs(W, n)
    if not is_acyclic_tournament(gw):
        return True, "not a tournament"
    h = hilbert_coefficients(gn, bound)
    want = [comb(n + m - 1, m) for m in range(bound + 1)]
    poly, degree = polynomial_growth(gn)
    gl = global_dimension(gw)
    p = tournament_relabel(gw)
    proper = all((p[j], p[i]) in gw.edges for i in range(n) for j in range(i + 1, n))
    ok = h == want and poly and degree == n and gl == n and proper
    return ok, f"hilbert {h}, degree {degree}, gldim {gl}, proper {proper}"


def _rank_depth(n, bound):
    depth = min(2, bound)
    while depth < bound and n ** (depth + 1) <= RANK_WORD_LIMIT:
        depth += 1
    return depth


def pbw_equivalence_check(pres, obstructions, bound=8):
    """The four conditions for a PBW algebra with obstruction set W.

    Growth, gldim and the Hilbert series come from the graphs of W; the
    series is matched against exact rank, and the ordered-monomial basis
    decided by rank, in the degrees whose word count stays within
    RANK_WORD_LIMIT.
    Returns the condition tuple; raises TheoremViolation on disagreement.
    """
    space = pres.space
    n = space.n
    W = frozenset(obstructions)
    gn, gw = build_graphs(W, n)
    gl = global_dimension(gw)
    poly, _ = polynomial_growth(gn)
    depth = _rank_depth(n, bound)
    by_rank = [dim_A(space, m) for m in range(depth + 1)]
    by_paths = hilbert_coefficients(gn, bound)
    if by_rank != by_paths[:depth + 1]:
        raise TheoremViolation(
            f"normal words {by_paths[:depth + 1]} do not count dim A_m {by_rank}: "
            "W is not the obstruction set of a PBW presentation", witness=sorted(W))
    c1 = poly and gl is not None
    c2 = space.dimension == comb(n, 2) and gl is not None
    c3 = by_paths == [comb(n + m - 1, m) for m in range(bound + 1)]
    # try the orders whose descending pairs are exactly W first
    perms = sorted(permutations(range(n)),
                   key=lambda p: W != {(p[j], p[i]) for i in range(n)
                                       for j in range(i + 1, n)})
    c4 = c3 and any(all(ordered_monomials_form_basis(space, p, m)
                        for m in range(2, depth + 1)) for p in perms)
    conds = (c1, c2, c3, c4)
    if len(set(conds)) != 1:
        raise TheoremViolation(f"PBW conditions disagree: {conds}", witness=sorted(W))
    return conds


def check_pbw_conditions_monomial(W, n, bound=8):
    pbw_equivalence_check(monomial_relations(W, n), W, bound)
    return True, ""


MONOMIAL_CHECKS = {
    "monomial_equivalence": check_monomial_seven,
    "tournament_series": check_tournament,
    "pbw_conditions_monomial": check_pbw_conditions_monomial,
}


# ---------------------------------------------------------- relation checks

def check_pbw_conditions(rs, perm, bound=8):
    report = check_pbw(rs, DegLexOrder(perm))
    if not report.is_pbw:
        return False, f"order {perm} is not PBW"
    pbw_equivalence_check(rs, report.obstructions, bound)
    return True, ""


def check_fixture_claims(name):
    """The properties the three worked examples are stated to have."""
    obj = fixture(name)
    bad = []
    if name == "example1":
        p = obj.predicates
        if not (p.quantum_binomial and p.symmetric):
            bad.append(f"predicates {p.as_dict()}")
        rs = relations_from_set(obj)
        if dim_A(rs, 3) != 35 or monoid_dimension(obj, 3) != 35:
            bad.append("dim A_3 != 35")
        order = DegLexOrder((0, 2, 1, 3, 4))
        from .pbw import is_skew_polynomial_type
        if not (check_pbw(rs, order).is_pbw and is_skew_polynomial_type(rs, order)):
            bad.append("reordering y = x1 x3 x2 x4 x5 is not a skew PBW order")
    elif name == "example2":
        qs = obj.derived_r
        c = _census3(qs)
        shape = (len(c), c.q, c.type_ii_sizes, c.square_free_sizes)
        if shape != (18, 2, [3] * 8 + [6] * 4, [6, 6]):
            bad.append(f"orbit census {shape}")
        if qs.predicates.braided or pbw_search(obj):
            bad.append("braided or PBW")
        if dim_A(obj, 3) != 18 or monoid_dimension(qs, 3) != 18:
            bad.append("dim A_3 != 18")
    elif name == "example3":
        orders = pbw_search(obj)
        if not obj.derived_r.predicates.braided or len(orders) != 8:
            bad.append(f"braided {obj.derived_r.predicates.braided}, {len(orders)} orders")
        dims = [dim_A(obj, m) for m in range(6)]
        dual = [dim_A_dual(obj, m) for m in range(6)]
        if dims != [1, 4, 10, 20, 35, 56] or dual != [1, 4, 6, 4, 1, 0]:
            bad.append(f"dims {dims}, dual {dual}")
    return not bad, "; ".join(bad)


# ------------------------------------------------------------------ witnesses

def _instance_of(kind, inst):
    if kind == "set":
        return {"kind": "set", "presentation": emit_presentation(inst)}
    if kind == "relations":
        return {"kind": "relations", "presentation": emit_presentation(inst)}
    if kind == "pbw":
        rs, perm = inst
        return {"kind": "pbw", "presentation": emit_presentation(rs),
                "order": list(perm)}
    if kind == "monomial":
        W, n = inst
        return {"kind": "monomial", "n": n, "W": sorted(list(w) for w in W)}
    return {"kind": "fixture", "name": inst}


def _rebuild(instance):
    kind = instance["kind"]
    if kind in ("set", "relations"):
        obj = parse_presentation(instance["presentation"])
        return obj
    if kind == "pbw":
        return parse_presentation(instance["presentation"]), tuple(instance["order"])
    if kind == "monomial":
        return frozenset(tuple(w) for w in instance["W"]), instance["n"]
    return instance["name"]


def _lookup(name):
    for kind, table in (("set", SET_CHECKS), ("monomial", MONOMIAL_CHECKS)):
        if name in table:
            return kind, table[name]
    if name == "pbw_conditions":
        return "pbw", check_pbw_conditions
    if name == "fixture_claims":
        return "fixture", check_fixture_claims
    raise KeyError(f"unknown check {name!r}")


def _call(fn, kind, inst):
    try:
        if kind == "monomial":
            return fn(*inst)
        if kind == "pbw":
            return fn(*inst)
        return fn(inst)
    except TheoremViolation as exc:
        return False, f"theorem violation: {exc}"


def _shrink_monomial(fn, W, n):
    """Greedily drop obstructions while the check keeps failing."""
    W = set(W)
    changed = True
    while changed:
        changed = False
        for w in sorted(W):
            trial = frozenset(W - {w})
            if not _call(fn, "monomial", (trial, n))[0]:
                W.discard(w)
                changed = True
    return frozenset(W)


def replay_witness(path):
    """Re-run the check recorded in a witness file; returns (ok, detail)."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    kind, fn = _lookup(doc["check"])
    inst = _rebuild(doc["instance"])
    if kind == "set" and isinstance(inst, RelationSet):
        inst = inst.derived_r
    return _call(fn, kind, inst)


class _Runner:
    def __init__(self, scope, seed, witness_dir):
        self.result = SuiteResult(scope, seed)
        self.witness_dir = witness_dir
        self.counter = 0

    def run(self, name, inst):
        kind, fn = _lookup(name)
        res = self.result.checks.setdefault(name, CheckResult(name))
        res.instances += 1
        ok, detail = _call(fn, kind, inst)
        if ok:
            return
        if kind == "monomial":
            inst = (_shrink_monomial(fn, *inst), inst[1])
        res.failures.append((detail, self._write(name, kind, inst, detail)))

    def _write(self, name, kind, inst, detail):
        if self.witness_dir is None:
            return None
        os.makedirs(self.witness_dir, exist_ok=True)
        self.counter += 1
        path = os.path.join(self.witness_dir, f"{self.counter:04d}_{name}.json")
        doc = {"check": name, "detail": detail, "scope": self.result.scope,
               "seed": self.result.seed, "instance": _instance_of(kind, inst)}
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
        return path

    def sets(self, sets, skip=()):
        for qs in sets:
            for name in SET_CHECKS:
                if name not in skip:
                    self.run(name, qs)

    def monomials(self, pairs, bound=8):
        for W, n in pairs:
            for name in MONOMIAL_CHECKS:
                self.run(name, (frozenset(W), n))


def _all_subsets(n):
    pairs = [(a, b) for a in range(n) for b in range(n)]
    for mask in range(1 << len(pairs)):
        yield frozenset(p for k, p in enumerate(pairs) if mask >> k & 1), n


def random_tournament(n, rng):
    p = list(range(n))
    rng.shuffle(p)
    return frozenset((p[j], p[i]) for i in range(n) for j in range(i + 1, n))


def run_suite(scope, seed=0, samples=200, witness_dir=None) -> SuiteResult:
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {', '.join(SCOPES)}")
    rng = random.Random(seed)
    runner = _Runner(scope, seed, witness_dir)
    if scope == "fixtures":
        for name in ("example1", "example2", "example3"):
            runner.run("fixture_claims", name)
            obj = fixture(name)
            qs = obj if isinstance(obj, QuadraticSet) else obj.derived_r
            runner.sets([qs])
            rs = relations_from_set(qs) if isinstance(obj, QuadraticSet) else obj
            for order in pbw_search(rs):
                runner.run("pbw_conditions", (rs, order.perm))
                runner.monomials([(check_pbw(rs, order).obstructions, rs.n)])
    elif scope == "exhaustive-n<=3":
        for n in (1, 2, 3):
            runner.sets(QuadraticSet(n, r) for r in iter_quantum_binomial(n))
            runner.monomials(_all_subsets(n))
    elif scope == "sampled-n<=5":
        for _ in range(samples):
            n = rng.randint(2, 5)
            qs = sample_quantum_binomial(n, rng)
            # the n! order search in the equivalence matrix dominates at n = 5
            runner.sets([qs], skip=("equivalence_matrix",) if n == 5 else ())
            pairs = [(a, b) for a in range(n) for b in range(n)]
            W = frozenset(p for p in pairs if rng.random() < 0.4)
            runner.monomials([(W, n), (random_tournament(n, rng), n)])
    else:
        # every labelled set, not only class representatives
        for n in (1, 2, 3, 4):
            runner.sets(QuadraticSet(n, r) for r in kernels.quantum_binomial_search(n))
    return runner.result
