import random
from math import comb

import pytest

import oracles
from qbalg.errors import TheoremViolation
from qbalg.graphs import (QuadGraph, build_graphs, global_dimension,
                          growth_and_gldim, hilbert_coefficients,
                          is_acyclic_tournament, monomial_algebra_check,
                          polynomial_growth, strongly_connected_components,
                          to_edge_list, tournament_relabel)
from qbalg.harness import random_tournament


def test_complementary():
    gn, gw = build_graphs({(0, 1)}, 2)
    assert len(gn.edges) + len(gw.edges) == 4
    assert not gn.edges & gw.edges
    with pytest.raises(ValueError):
        build_graphs({(0, 2)}, 2)


def test_hilbert_matches_word_count():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 4)
        W = {(a, b) for a in range(n) for b in range(n) if rng.random() < 0.5}
        gn, _ = build_graphs(W, n)
        h = hilbert_coefficients(gn, 5)
        assert h == [oracles.normal_word_count(W, n, m) if m else 1 for m in range(6)]


def test_gldim_matches_chain_oracle():
    rng = random.Random(6)
    for _ in range(60):
        n = rng.randint(1, 5)
        W = {(a, b) for a in range(n) for b in range(n) if rng.random() < 0.3}
        _, gw = build_graphs(W, n)
        longest = oracles.longest_chain(W, n)
        assert global_dimension(gw) == (None if longest is None else longest + 1)


def test_gldim_free_algebra_is_one():
    _, gw = build_graphs(set(), 3)
    assert global_dimension(gw) == 1


def test_loop_means_infinite_gldim():
    _, gw = build_graphs({(0, 0)}, 2)
    assert global_dimension(gw) is None


def test_polynomial_growth():
    # Gamma_N = two loops joined by an edge: degree 2
    g = QuadGraph(2, frozenset({(0, 0), (0, 1), (1, 1)}))
    assert polynomial_growth(g) == (True, 2)
    # a vertex on two cycles: exponential
    g = QuadGraph(2, frozenset({(0, 0), (0, 1), (1, 0)}))
    assert polynomial_growth(g) == (False, None)
    # nilpotent: no cycles at all
    assert polynomial_growth(QuadGraph(2, frozenset({(0, 1)}))) == (True, 0)
    # one 3-cycle
    g = QuadGraph(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    assert polynomial_growth(g) == (True, 1)


def test_scc_sinks_first():
    g = QuadGraph(3, frozenset({(0, 1), (1, 0), (1, 2)}))
    comps = strongly_connected_components(g)
    assert comps == [[2], [0, 1]]


def test_example3_graphs(ex3):
    from qbalg.pbw import DegLexOrder, check_pbw
    rep = check_pbw(ex3, DegLexOrder((1, 2, 0, 3)))
    gn, gw = build_graphs(rep.obstructions, 4)
    g = growth_and_gldim(gn, gw, 5)
    assert g.hilbert == (1, 4, 10, 20, 35, 56)
    assert g.gldim == 4 and g.polynomial and g.degree == 4
    assert is_acyclic_tournament(gw)


def test_not_complementary():
    gn = QuadGraph(2, frozenset({(0, 0)}))
    gw = QuadGraph(2, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        growth_and_gldim(gn, gw)


def test_tournament_relabel_proper():
    rng = random.Random(7)
    for n in range(1, 7):
        W = random_tournament(n, rng)
        _, gw = build_graphs(W, n)
        p = tournament_relabel(gw)
        assert all((p[j], p[i]) in gw.edges for i in range(n) for j in range(i + 1, n))


def test_tournament_relabel_small_cases():
    _, gw = build_graphs({(1, 0)}, 2)  # b -> a
    assert tournament_relabel(gw) == (0, 1)
    _, gw = build_graphs({(0, 1)}, 2)
    assert tournament_relabel(gw) == (1, 0)
    _, gw = build_graphs({(0, 1), (1, 0)}, 2)
    with pytest.raises(ValueError):
        tournament_relabel(gw)


def test_edge_list():
    g = QuadGraph(2, frozenset({(1, 0), (0, 1)}))
    assert to_edge_list(g, ["a", "b"]) == "a -> b\nb -> a\n"


def test_monomial_check_single_edge_all_true():
    v = monomial_algebra_check({(0, 1)}, 2)
    assert v.conditions == (True,) * 7
    assert v.relabel == (1, 0)


def test_monomial_check_empty_all_false():
    for n in (2, 3, 4):
        assert monomial_algebra_check(set(), n).conditions == (False,) * 7


def test_monomial_check_tournaments():
    rng = random.Random(8)
    for n in (4, 5, 6):
        W = random_tournament(n, rng)
        v = monomial_algebra_check(W, n)
        assert v.holds
        assert list(v.growth.hilbert) == [comb(n + m - 1, m) for m in range(9)]
        assert v.growth.gldim == n and v.growth.degree == n


def test_monomial_check_raises_on_disagreement(monkeypatch):
    import qbalg.graphs as g
    monkeypatch.setattr(g, "is_acyclic_tournament", lambda gw: True)
    with pytest.raises(TheoremViolation) as exc:
        g.monomial_algebra_check(set(), 2)
    assert exc.value.witness == []
