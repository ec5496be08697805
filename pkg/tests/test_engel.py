from __future__ import annotations

import pytest

from engeltree import catalog
from engeltree.autom import Permutation, label, psi_n, section
from engeltree.catalog import GGSVector
from engeltree.engel import (EngelKind, engel_commutator, engel_degree, engel_formula_psi, ggs_commutator_psi,
                             ggs_level_one_projection_check, ggs_non_engel_witness, left_engel_survey, liebeck_degree,
                             right_engel_witness, rooted_cycle)
from engeltree.tree import DegreeSequence
from engeltree.wordprob import equal, is_trivial

T2, T3 = DegreeSequence.constant(2), DegreeSequence.constant(3)
SWAP = Permutation((2, 1))


@pytest.fixture
def d8():
    G = catalog.finitary_group(T2, {"x": {(): SWAP}, "g": {(1,): SWAP}})
    return G.gen("g"), G.gen("x")


def test_engel_commutator_examples(d8, grig):
    g, x = d8
    assert engel_commutator(g, x, 0) == g
    c1 = engel_commutator(g, x, 1)
    assert label(c1, (1,)) == SWAP and label(c1, (2,)) == SWAP and label(c1).is_identity
    assert is_trivial(engel_commutator(g, x, 2)).trivial
    assert is_trivial(engel_commutator(grig.gen("b"), grig.gen("c"), 1)).trivial


def test_engel_degree_examples(d8, grig):
    g, x = d8
    v = engel_degree(g, x)
    assert (v.kind, v.n) == (EngelKind.DEGREE, 2)
    assert engel_degree(grig.identity(), grig.gen("a")).n == 0
    v = engel_degree(grig.gen("c"), grig.word("abab"), 10)
    assert (v.kind, v.n) == (EngelKind.SURVIVES, 10)
    # [b, abab] = (ab)^4 commutes with abab
    assert engel_degree(grig.gen("b"), grig.word("abab"), 10).n == 2


def test_liebeck_degree_examples():
    assert liebeck_degree(2, 2, 2) == 2
    assert liebeck_degree(3, 3, 9) == 5
    assert liebeck_degree(2, 4, 4) == 6
    with pytest.raises(ValueError):
        liebeck_degree(2, 6, 2)
    with pytest.raises(ValueError):
        liebeck_degree(3, 3, 2)


def test_formula_psi_trivial_and_specialised():
    G = catalog.finitary_group(T2, {"x": {(1,): SWAP}, "e": {}})
    y = rooted_cycle(G)
    x = G.gen("x")
    for k in (2, 3):
        formula = engel_formula_psi(y, x, k)
        direct = psi_n(engel_commutator(y, x, k), 1)
        assert all(equal(u, w).trivial for u, w in zip(formula, direct))
    assert all(w.is_identity or is_trivial(w).trivial for w in engel_formula_psi(y, G.gen("e"), 3))
    with pytest.raises(ValueError):
        engel_formula_psi(y, y, 2)


def test_right_engel_witness_s3_component():
    f = catalog.finitary_element(DegreeSequence((2,), (3,)), {(): SWAP})
    rep = right_engel_witness(f, (1,), Permutation((2, 1, 3)), Permutation((2, 3, 1)), 6)
    assert rep.probes[0].verdict.kind is EngelKind.SURVIVES
    assert rep.details["pair_non_engel"] and rep.details["symbolic_ok"]
    assert rep.details["first_coordinate_ok"] == [True] * 5


def test_right_engel_witness_errors():
    f = catalog.finitary_element(T3, {})
    with pytest.raises(ValueError):
        right_engel_witness(f, (1,), Permutation((2, 1, 3)), Permutation((2, 3, 1)))
    g = catalog.finitary_element(T3, {(): Permutation((2, 3, 1))})
    with pytest.raises(ValueError):
        right_engel_witness(g, (1,), None, None)


def test_ggs_commutator_psi_gupta_sidki():
    res = ggs_commutator_psi(GGSVector(3, (1, -1)))
    assert res.verified
    G = res.psi_ba[0].group
    expected = [G.word("a^-1 b"), G.word("a^2"), G.word("b^-1 a^-1")]
    assert all(equal(u, w).trivial for u, w in zip(res.psi_ba, expected))


def test_ggs_commutator_psi_constant_and_symmetric():
    assert ggs_commutator_psi(GGSVector(5, (2, 2, 2, 2))).middle_exponents == [0, 0]
    res = ggs_commutator_psi(GGSVector(5, (1, 2, 2, 1)))
    assert res.verified and res.nonzero_index == 1 and res.middle_exponents[0] == 4


def test_ggs_projection_examples():
    p = ggs_level_one_projection_check(GGSVector(3, (1, -1)))
    assert (p.i, p.vertex, p.power) == (1, (2,), 2) and p.generators_found
    p = ggs_level_one_projection_check(GGSVector(5, (1, 2, 2, 1)))
    assert p.branch == "double-commutator" and p.power == 4 and p.generators_found
    with pytest.raises(ValueError):
        ggs_level_one_projection_check(GGSVector(3, (1, 1)))


def test_ggs_non_engel_gupta_sidki():
    rep = ggs_non_engel_witness(GGSVector(3, (1, -1)), 6)
    assert rep.details["i"] == 1 and rep.details["lambda"] == 1
    assert rep.details["identity_ok"] and all(rep.details["recursion_ok"])
    assert (rep.probes[0].verdict.kind, rep.probes[0].verdict.n) == (EngelKind.SURVIVES, 6)


def test_survey_trivial_group():
    G = catalog.finitary_group(T2, {"e": {}})
    reports = left_engel_survey(G, 2, 4)
    assert all(r.counterexample is None for r in reports)


def test_survey_gupta_sidki(gs3):
    cands = [gs3.word(w) for w in ("a", "b", "ab")]
    reports = left_engel_survey(gs3, 3, 8, candidates=cands, stop_at_witness=True)
    assert [str(r.x) for r in reports] == ["a", "b", "ab"]
    for r in reports:
        assert r.counterexample is not None
        assert any(p.verdict.kind is EngelKind.SURVIVES and p.verdict.n == 8 for p in r.probes)
