from __future__ import annotations

import pytest

from engeltree import catalog
from engeltree.autom import Permutation, label, psi_n, section
from engeltree.catalog import GGSVector
from engeltree.orbitlab import orbit, order_mod_level
from engeltree.tree import DegreeSequence
from engeltree.wordprob import OrderPolicy, equal, is_trivial, order


def test_grigorchuk_relations(grig):
    assert is_trivial(grig.word("a") ** 2).trivial
    assert is_trivial(grig.word("bcd")).trivial
    assert label(grig.gen("a")) == Permutation((2, 1))
    assert all(catalog.verify_declared_orders(grig).values())


def test_ggs_constructor(gs3):
    G = catalog.ggs(3, [(1, -1)])
    assert [str(w) for w in psi_n(G.gen("b"), 1)] == [str(w) for w in psi_n(gs3.gen("b"), 1)]
    a, b = gs3.gen("a"), gs3.gen("b")
    assert all(equal(u, w).trivial for u, w in zip(psi_n(b, 1), [a, a.inverse(), b]))
    assert GGSVector(3, (1, -1)).periodic and not GGSVector(5, (1, 2, 2, 1)).periodic
    assert GGSVector(5, (1, 2, 2, 1)).symmetric and GGSVector(5, (3, 3, 3, 3)).constant
    with pytest.raises(ValueError):
        catalog.ggs(3, [(0, 0)])
    for v in [(1, 2, 2, 1), (1, 0, 0, 3)]:
        G = catalog.ggs(5, [v])
        assert is_trivial(G.gen("b") ** 5).trivial


def test_multi_ggs_names():
    G = catalog.ggs(5, [(1, 2, 0, 0), (0, 0, 1, 1)])
    assert G.generator_names == ["a", "b1", "b2"]


def test_hanoi_displays(hanoi):
    assert is_trivial(hanoi.gen("a") ** 2).trivial
    ab, ba = hanoi.word("ab"), hanoi.word("ba")
    assert label(ab) == Permutation.parse("(1 2 3)", 3)
    assert [str(section(ab, (i,))) for i in (1, 2, 3)] == ["b", "1", "a"]
    assert label(ba) == Permutation.parse("(1 3 2)", 3)
    assert [str(section(ba, (i,))) for i in (1, 2, 3)] == ["a", "b", "1"]
    assert [order_mod_level(ab, n) for n in range(1, 7)] == [3 ** n for n in range(1, 7)]


def test_finitary_elements():
    T2 = DegreeSequence.constant(2)
    assert is_trivial(catalog.finitary_element(T2, {})).trivial
    f = catalog.finitary_element(T2, {(1, 2): Permutation((2, 1))})
    r = order(f)
    assert (r.m, r.certified) == (2, True)
    g = catalog.p_finitary_element(3, {(): 1, (2,): 2})
    assert label(g) == Permutation((2, 3, 1)) and label(g, (2,)) == Permutation((3, 1, 2))


def test_iterated_wreath_binary_leftmost_chain():
    T2 = DegreeSequence.constant(2)
    choices = [(Permutation((2, 1)), (1,) * n) for n in range(1, 5)]
    f = catalog.iterated_wreath_infinite_order(T2, choices)
    assert [orbit(f, v).length for _, v in choices] == [2, 4, 8, 16]
    assert catalog.chain_orbit_lengths(choices) == [2, 4, 8, 16]


def test_iterated_wreath_mixed_lengths():
    T3 = DegreeSequence.constant(3)
    choices = [(Permutation((2, 3, 1)), (1,)), (Permutation((2, 1, 3)), (1, 1)), (Permutation((1, 3, 2)), (1, 1, 2))]
    f = catalog.iterated_wreath_infinite_order(T3, choices)
    assert orbit(f, (1, 1, 2)).length == 3 * 2 * 2


def test_iterated_wreath_single_level_and_errors():
    T3 = DegreeSequence.constant(3)
    f = catalog.iterated_wreath_infinite_order(T3, [(Permutation((2, 3, 1)), (1,))])
    assert order(f).m == 3
    with pytest.raises(ValueError):
        catalog.iterated_wreath_infinite_order(T3, [(Permutation((1, 3, 2)), (1,))])  # k_1 fixes v_1


@pytest.mark.parametrize("p,depth,size", [(2, 1, 2), (2, 2, 8), (3, 2, 81)])
def test_truncated_sylow_orders(p, depth, size):
    G = catalog.truncated_sylow(p, depth)
    assert len(catalog.enumerate_level_group(G.gens(), depth)) == size


def test_from_name():
    assert catalog.from_name("hanoi").name == "hanoi"
    assert catalog.from_name("gupta-sidki:5").tree == DegreeSequence.constant(5)
    assert catalog.from_name("ggs:5:1,2,2,1").generator_names == ["a", "b"]
    assert len(catalog.from_name("sylow:2:3").generator_names) == 3
    with pytest.raises(ValueError):
        catalog.from_name("nope")
    assert {e.name for e in catalog.catalog_entries()} >= {"grigorchuk", "hanoi"}
