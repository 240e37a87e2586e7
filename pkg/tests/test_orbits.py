import pytest

import oracles
from qbalg.classify import iter_quantum_binomial
from qbalg.orbits import (OrbitType, check_cyclic_condition, decode, encode,
                          enumerate_orbits, monoid_dimension, profile,
                          symmetric_via_orbits, words_equal)
from qbalg.quadratic_set import QuadraticSet, transposition_set


def test_encode_decode_roundtrip():
    for code in range(4 ** 3):
        assert encode(decode(code, 4, 3), 4) == code
    assert encode((1, 0, 2), 3) == 11


def test_example2_census(ex2):
    c = enumerate_orbits(ex2.derived_r, 3)
    assert len(c) == 18
    kinds = [o.type for o in c.orbits]
    assert kinds.count(OrbitType.DIAGONAL) == 4
    assert kinds.count(OrbitType.TYPE_II) == 12
    assert c.type_ii_sizes == [3] * 8 + [6] * 4
    assert c.square_free_sizes == [6, 6]
    assert c.q == 2
    assert sum(o.size for o in c.orbits) == 64


def test_orbits_match_union_find(ex2, ex3):
    for rs in (ex2, ex3):
        qs = rs.derived_r
        for m in (2, 3, 4):
            c = enumerate_orbits(qs, m)
            want = oracles.orbits(qs.rmap, 4, m)
            assert sorted(o.size for o in c.orbits) == sorted(len(g) for g in want)
            for k, orb in enumerate(c.orbits):
                assert sorted(c.members(k)) in want


def test_symmetric_via_orbits(ex2, ex3):
    assert not symmetric_via_orbits(ex2.derived_r)
    assert symmetric_via_orbits(ex3.derived_r)


def test_cyclic_condition(ex1, ex2):
    assert check_cyclic_condition(ex1)
    assert not check_cyclic_condition(ex2.derived_r)


def test_monoid_dimension_of_trivial_solution():
    qs = transposition_set(3)
    # commutative monoid: dims C(n+m-1, m)
    assert [monoid_dimension(qs, m) for m in range(5)] == [1, 3, 6, 10, 15]


def test_monoid_dimension_requires_involutive():
    with pytest.raises(ValueError, match="involutive"):
        monoid_dimension(QuadraticSet(2, (1, 2, 3, 0)), 3)


def test_degree_bounds():
    qs = transposition_set(2)
    with pytest.raises(ValueError, match="outside"):
        enumerate_orbits(qs, 1)
    with pytest.raises(ValueError, match="outside"):
        enumerate_orbits(qs, 7)
    with pytest.raises(ValueError, match="exceeds"):
        enumerate_orbits(transposition_set(11), 6)


def test_words_equal(ex3):
    qs = ex3.derived_r
    assert words_equal(qs, qs.word("xy"), qs.word("zt"))
    assert not words_equal(qs, qs.word("xy"), qs.word("yx"))
    assert not words_equal(qs, qs.word("xy"), qs.word("xyz"))
    # beyond the census bound the search falls back to BFS
    a = qs.word("xyxyxyx")
    b = qs.word("ztxyxyx")
    assert words_equal(qs, a, b)
    assert not words_equal(qs, a, qs.word("yyyyyyy"))


def test_profile_keys(ex1):
    p = profile(enumerate_orbits(ex1, 3))
    assert p["orbits"] == 35
    assert p["counts"]["diagonal"] == 5 and p["counts"]["type_ii"] == 20
    assert p["q"] == 10


def test_requires_quantum_binomial():
    with pytest.raises(ValueError, match="quantum binomial"):
        symmetric_via_orbits(QuadraticSet(2, (0, 1, 2, 3)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_prop1_profile_exhaustive(n):
    for rm in iter_quantum_binomial(n):
        c = enumerate_orbits(QuadraticSet(n, rm), 3)
        kinds = [o.type for o in c.orbits]
        assert kinds.count(OrbitType.DIAGONAL) == n
        assert kinds.count(OrbitType.TYPE_II) == n * (n - 1)
        assert OrbitType.OTHER not in kinds
        assert n + sum(c.type_ii_sizes) + sum(c.square_free_sizes) == n ** 3
