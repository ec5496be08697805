from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from engeltree import catalog
from engeltree.autom import Permutation
from engeltree.engel import EngelKind
from engeltree.tree import DegreeSequence
from engeltree.wreathlab import (CyclicWreath, brute_engel_degree, brute_is_left_engel, comm_lower_bound_check,
                                 element_order, engel_coefficients, verify_order_growth, verify_wreath_embedding,
                                 wcomm, winv, wmul)


@st.composite
def wreath_triples(draw):
    W = CyclicWreath(draw(st.integers(2, 5)), draw(st.integers(2, 5)))

    def el():
        return W.element(draw(st.lists(st.integers(0, W.q - 1), min_size=W.n, max_size=W.n)),
                         draw(st.integers(0, W.n - 1)))
    return W, el(), el(), el()


@given(wreath_triples())
def test_group_axioms(t):
    W, a, b, c = t
    assert wmul(wmul(a, b), c) == wmul(a, wmul(b, c))
    assert wmul(a, winv(a)) == W.identity() == wmul(winv(a), a)
    assert wcomm(a, a) == W.identity()
    assert wcomm(a, b) == wmul(wmul(winv(a), winv(b)), wmul(a, b))


def test_top_conjugation_moves_base_coordinate():
    W = CyclicWreath(2, 2)
    x, g = W.top(), W.base_element(0, 1)
    assert wmul(wmul(winv(x), g), x).base == (0, 1)
    W3 = CyclicWreath(3, 3)
    c = wmul(wmul(winv(W3.top()), W3.base_element(0, 1)), W3.top())
    assert c.base == (0, 1, 0)


def test_mismatched_groups_rejected():
    with pytest.raises(ValueError):
        wmul(CyclicWreath(2, 2).top(), CyclicWreath(3, 2).top())


def test_brute_engel_degree_examples():
    W = CyclicWreath(2, 2)
    v = brute_engel_degree(W, W.top(), W.base_element(0, 1))
    assert (v.kind, v.n) == (EngelKind.DEGREE, 2)
    W = CyclicWreath(9, 3)
    assert brute_engel_degree(W, W.top(), W.base_element(0, 1)).n == 5
    assert brute_engel_degree(W, W.top(), W.identity()).n == 0


def test_brute_is_left_engel_examples():
    W = CyclicWreath(2, 2)
    assert brute_is_left_engel(W, W.top()).is_left_engel
    assert brute_is_left_engel(W, W.identity()).is_left_engel
    W = CyclicWreath(3, 2)
    res = brute_is_left_engel(W, W.top())
    assert not res.is_left_engel and res.witness is not None
    assert brute_engel_degree(W, W.top(), res.witness).kind is EngelKind.SURVIVES


def test_order_growth_examples():
    W = CyclicWreath(2, 2)
    assert element_order(wmul(W.top(), W.base_element(0, 1))) == 4
    W = CyclicWreath(3, 3)
    assert element_order(wmul(W.top(), W.base_element(0, 1))) == 9
    assert verify_order_growth(W)
    with pytest.raises(ValueError):
        verify_order_growth(W, 0)


def _embed(d, f_labels, g_labels, v, depth):
    G = catalog.finitary_group(DegreeSequence.constant(d), {"f": f_labels, "g": g_labels})
    return verify_wreath_embedding(G.gen("f"), G.gen("g"), v, depth)


def test_wreath_embedding_examples():
    rep = _embed(2, {(): Permutation((2, 1))}, {(1,): Permutation((2, 1))}, (1,), 3)
    assert rep.ok and rep.group_order == 8
    rep = _embed(2, {(): Permutation((2, 1))}, {}, (1,), 3)
    assert rep.ok and rep.group_order == 2
    rep = _embed(3, {(): Permutation((2, 3, 1))}, {(1,): Permutation((2, 3, 1))}, (1,), 2)
    assert rep.ok and rep.group_order == 81


def test_wreath_embedding_rejects_non_rigid_g():
    with pytest.raises(ValueError):
        _embed(2, {(): Permutation((2, 1))}, {(): Permutation((2, 1))}, (1,), 3)


def test_comm_lower_bound_examples():
    W = CyclicWreath(2, 3)
    rep = comm_lower_bound_check(W, W.top())
    assert rep.ok and rep.trace[-1][0] == 1 and rep.trace[-1][2] == 1
    W = CyclicWreath(2, 2)
    rep = comm_lower_bound_check(W, W.top())
    assert rep.ok and (rep.degree.kind is EngelKind.SURVIVES or rep.degree.n >= 2)
    with pytest.raises(ValueError):
        comm_lower_bound_check(W, W.identity())


def test_engel_coefficients_examples():
    assert engel_coefficients(4, 0).rows[0] == (1, 0, 0, 0)
    assert engel_coefficients(4, 0).claim_indices[0] == 1
    assert engel_coefficients(2, 1).rows[1] == (-1, 1)
    assert engel_coefficients(3, 20).claim_holds
