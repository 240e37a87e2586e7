"""Plain-dict reports behind the CLI commands; serialize with io.emit_report."""
from math import comb

from .classify import enumerate_quantum_binomial, yang_baxter_triangle, theorem3_harness
from .io import format_scalar
from .graphs import (build_graphs, growth_and_gldim, monomial_algebra_check,
                     to_edge_list)
from .orbits import enumerate_orbits, monoid_dimension, profile
from .pbw import DegLexOrder, check_pbw, is_skew_polynomial_type, pbw_search
from .quadratic_set import QuadraticSet
from .relations import (RelationSet, check_R_yangbaxter, dim_A, dim_A_dual,
                        is_quantum_binomial, is_quantum_grassmann,
                        koszul_dual_relations, relations_from_set)

MAX_REPORT_WORDS = 10 ** 5


def as_relations(obj):
    if isinstance(obj, QuadraticSet):
        return relations_from_set(obj)
    return obj


def as_set(obj):
    return obj if isinstance(obj, QuadraticSet) else obj.derived_r


def parse_order(text, names):
    """``t>x>z>y``, ``y<z<x<t``, ``t x z y`` or ``txzy`` (largest first)."""
    text = text.strip()
    if ">" in text:
        desc = [s.strip() for s in text.split(">")]
    elif "<" in text:
        desc = [s.strip() for s in text.split("<")][::-1]
    else:
        desc = text.replace(",", " ").split()
        if len(desc) == 1 and desc[0] not in names:
            desc = list(desc[0])
    if sorted(desc) != sorted(names):
        raise ValueError(f"order {text!r} must list each of {' '.join(names)} once")
    return DegLexOrder.from_names(list(names), desc[::-1])


def order_text(order, names):
    return " > ".join(names[g] for g in reversed(order.perm))


def _word(names, w):
    return "".join(names[c] for c in w)


def _degrees(n, bound):
    return [m for m in range(bound + 1) if n ** m <= MAX_REPORT_WORDS]


def check_report(obj):
    qs = as_set(obj)
    out = {"n": qs.n, "generators": list(qs.names),
           "predicates": qs.predicates.as_dict()}
    if isinstance(obj, RelationSet):
        out["relations"] = len(obj.rels)
        out["quantum_binomial_algebra"] = is_quantum_binomial(obj)
    return out


def orbit_report(obj, degree=3):
    qs = as_set(obj)
    census = enumerate_orbits(qs, degree)
    names = qs.names
    orbits = [{"representative": _word(names, o.representative), "size": o.size,
               **({"type": o.type.value} if o.type else {})}
              for o in census.orbits]
    out = {"degree": degree, "count": len(census), "orbits": orbits,
           "sizes_total": sum(o.size for o in census.orbits)}
    if degree == 3:
        out["profile"] = profile(census)
    return out


def dims_report(obj, bound=5):
    rs = as_relations(obj)
    n = rs.n
    degs = _degrees(n, bound)
    dims = {m: dim_A(rs, m) for m in degs}
    dual = {m: dim_A_dual(rs, m) for m in degs}
    out = {"dim_A": dims, "dim_A_dual": dual,
           "quantum_grassmann_dual": is_quantum_grassmann(koszul_dual_relations(rs))
           if n ** (n + 1) <= MAX_REPORT_WORDS else None}
    qs = as_set(obj)
    if qs.predicates.involutive:
        orbit = {m: monoid_dimension(qs, m) for m in degs if 2 <= m <= 6} | \
                {m: n ** m for m in degs if m < 2}
        out["dim_monoid"] = orbit
        out["oracles_agree"] = all(orbit[m] == dims[m] for m in orbit)
    if 3 in degs:
        formula = n ** 3 - 2 * n * dims.get(2, dim_A(rs, 2)) + dims[3]
        out["dual_formula_degree3"] = {"formula": formula, "rank": dual[3],
                                       "holds": formula == dual[3]}
    return out


def pbw_report(obj, order=None, search=False):
    rs = as_relations(obj)
    names = rs.names
    out = {}
    if order is not None:
        rep = check_pbw(rs, order)
        out["order"] = order_text(order, names)
        out["is_pbw"] = rep.is_pbw
        out["rules"] = [f"{_word(names, r.lead)} -> "
                        + ("" if r.coeff == 1 else f"{format_scalar(r.coeff)} * ")
                        + _word(names, r.tail) for r in rep.rules]
        out["obstructions"] = sorted(_word(names, w) for w in rep.obstructions)
        out["overlaps"] = [_word(names, w) for w in rep.overlaps]
        out["skew_polynomial_type"] = is_skew_polynomial_type(rs, order)
        if rep.failing_overlap:
            word, left, right = rep.failing_overlap
            out["failing_overlap"] = {
                "word": _word(names, word),
                "left": {_word(names, w): c for w, c in sorted(left.items())},
                "right": {_word(names, w): c for w, c in sorted(right.items())}}
    if search:
        orders = pbw_search(rs)
        out["pbw_orders"] = [order_text(o, names) for o in orders]
        out["pbw_order_count"] = len(orders)
    return out


def graphs_report(obj, order, bound=8):
    rs = as_relations(obj)
    names = rs.names
    rep = check_pbw(rs, order)
    gn, gw = build_graphs(rep.obstructions, rs.n)
    g = growth_and_gldim(gn, gw, bound)
    verdict = monomial_algebra_check(rep.obstructions, rs.n, bound)
    return {
        "order": order_text(order, names),
        "is_pbw": rep.is_pbw,
        "gamma_N": to_edge_list(gn, names).splitlines(),
        "gamma_W": to_edge_list(gw, names).splitlines(),
        "polynomial_growth": g.polynomial,
        "growth_degree": g.degree,
        "gldim": g.gldim,
        "hilbert": list(g.hilbert),
        "monomial_conditions": list(verdict.conditions),
        "tournament_relabel": [names[v] for v in verdict.relabel]
        if verdict.relabel else None,
    }


def harness_report(obj, bound=4):
    from .harness import pbw_equivalence_check
    rs = as_relations(obj)
    names = rs.names
    out = {}
    qb = is_quantum_binomial(rs)
    out["quantum_binomial"] = qb
    if qb:
        m = theorem3_harness(rs, bound)
        out["equivalence_matrix"] = {"conditions": m.conditions,
                           "details": {k: v for k, v in m.details.items()
                                       if k != "certificate"}}
        if m.details["certificate"] is not None:
            out["equivalence_matrix"]["certificate"] = order_text(
                DegLexOrder(m.details["certificate"]), names)
        yb, cert, a3 = yang_baxter_triangle(rs)
        out["triangle"] = {"yang_baxter": yb, "skew_certificate": cert,
                           "dim_A3_maximal": a3}
    per_order = {}
    for order in pbw_search(rs):
        rep = check_pbw(rs, order)
        per_order[order_text(order, names)] = {
            "pbw_conditions": list(pbw_equivalence_check(rs, rep.obstructions)),
            "monomial": list(monomial_algebra_check(rep.obstructions, rs.n).conditions),
        }
    out["pbw_orders"] = per_order
    return out


def full_report(obj, bound=5):
    """Everything for one presentation; keys are stable for golden files."""
    rs = as_relations(obj)
    qs = as_set(obj)
    out = check_report(obj)
    if qs.n ** 3 <= MAX_REPORT_WORDS:
        out["orbits"] = profile(enumerate_orbits(qs, 3)) if qs.predicates.involutive \
            else None
    out.update(dims_report(obj, bound))
    out["yang_baxter"] = check_R_yangbaxter(rs)
    out.update(pbw_report(obj, search=True))
    try:
        out["harness"] = harness_report(obj)
    except ValueError as exc:
        out["harness"] = {"skipped": str(exc)}
    return out


def classify_report(n, with_pbw=True):
    c = enumerate_quantum_binomial(n, with_pbw=with_pbw)
    from .io import emit_presentation
    reps = []
    for qs, inv in zip(c.representatives, c.invariants):
        reps.append({"presentation": emit_presentation(qs).splitlines(), **inv})
    return {"n": n, "total_quantum_binomial": c.total_quantum_binomial,
            "total_symmetric": c.total_symmetric, "classes": len(reps),
            "symmetric_classes": c.symmetric_classes,
            "expected_dim_A3_if_symmetric": comb(n + 2, 3),
            "representatives": reps}
