from __future__ import annotations

import pytest

from engeltree import catalog
from engeltree.autom import Permutation, apply, label, section
from engeltree.reduce import NotStabilizingError, induce, induce_on_orbit, reduced_tree
from engeltree.tree import DegreeSequence
from engeltree.wordprob import equal, is_trivial

T2, T3 = DegreeSequence.constant(2), DegreeSequence.constant(3)


def test_reduced_tree_at_orbit_of_13():
    rt = reduced_tree(T3, [(1, 3), (2, 3), (3, 3)])
    assert rt.level == 2 and rt.induced_seq == T3
    assert rt.source_vertex((2, 1)) == (2, 3, 1)
    assert rt.reduced_vertex((3, 3, 2)) == (3, 2)


def test_reduced_tree_binary_and_mixed_preperiod():
    rt = reduced_tree(T2, [(1, 1), (2, 2)])
    assert rt.induced_seq == T2
    rt = reduced_tree(DegreeSequence((2,), (3,)), [(1,), (2,)])
    assert rt.is_identity_reduction


def test_reduced_tree_root_is_identity_reduction():
    rt = reduced_tree(T3, [()])
    assert rt.is_identity_reduction and rt.induced_seq == T3


def test_reduced_tree_errors():
    with pytest.raises(ValueError):
        reduced_tree(T3, [(1,), (1, 2)])
    with pytest.raises(ValueError):
        reduced_tree(T3, [(1, 2)])


def test_induce_rooted_cycle_on_orbit_of_13():
    f = catalog.finitary_element(T3, {(): Permutation((2, 3, 1))})
    rt, y = induce_on_orbit(f, (1, 3))
    assert rt.roots == ((1, 3), (2, 3), (3, 3))
    assert label(y) == Permutation((2, 3, 1))
    assert all(is_trivial(section(y, (i,))).trivial for i in (1, 2, 3))


def test_induce_identity_and_full_level(hanoi):
    rt = reduced_tree(T3, [(1, 1), (2, 2), (3, 3)])
    assert is_trivial(induce(hanoi.identity(), rt)).trivial
    ab = hanoi.word("ab")
    rt1 = reduced_tree(T3, [(1,), (2,), (3,)])
    assert induce(ab, rt1) is ab


def test_induced_action_agrees_with_source(grig):
    f = grig.word("ab")
    rt, y = induce_on_orbit(f, (1, 1))
    for u in [(1, 2), (2, 1, 2), (3, 2, 2), (4, 1)]:
        if len(u) and u[0] <= len(rt.roots):
            assert rt.source_vertex(apply(y, u)) == apply(f, rt.source_vertex(u))
    assert equal(section(y, (1,)), section(f, rt.roots[0])).trivial


def test_induce_requires_setwise_stabilizer(grig):
    rt = reduced_tree(grig.tree, [(1, 1), (1, 2)])
    with pytest.raises(NotStabilizingError):
        induce(grig.gen("a"), rt)
