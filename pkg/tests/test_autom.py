from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from engeltree import catalog
from engeltree.autom import (GroupDef, GroupMismatchError, NotInStabilizerError, Permutation, Recursive, RistStatus,
                             Word, WordSyntaxError, apply, commutator, conjugate, in_rigid_stabilizer, inverse, label,
                             multiply, parse_word, portrait, psi_n, section, stabilizes_level)
from engeltree.tree import DegreeSequence, level_vertices
from engeltree.wordprob import equal, is_trivial


def P(text, d):
    return Permutation.parse(text, d)


def test_permutation_products_read_left_to_right():
    p, q = P("(1 2)", 3), P("(2 3)", 3)
    assert (p * q)(1) == q(p(1)) == 3
    assert p * p.inverse() == Permutation.identity(3)
    assert P("(1 2)(3 4 5)", 5).order == 6
    assert str(P("(1 3 2)", 3)) == "(1 3 2)"
    with pytest.raises(ValueError):
        P("(1 2", 3)


def test_apply_examples(hanoi):
    a = hanoi.gen("a")
    assert apply(a, (1,)) == (2,)
    assert apply(a, (3, 1)) == (3, 2)
    assert apply(hanoi.identity(), (2, 3, 1)) == (2, 3, 1)


def test_label_examples(hanoi):
    assert label(hanoi.gen("a")) == P("(1 2)", 3)
    assert label(hanoi.word("ab")) == P("(1 2 3)", 3)
    G = catalog.ggs(5, [(1, 2, 2, 1)])
    assert label(G.gen("b")).is_identity


def test_section_examples(hanoi):
    ab, ba = hanoi.word("ab"), hanoi.word("ba")
    assert section(ab, (3,)) == hanoi.gen("a")
    assert section(ab, (1,)) == hanoi.gen("b")
    assert section(ab, (2,)).is_identity
    assert section(ba, (2,)) == hanoi.gen("b")
    assert section(hanoi.identity(), (1, 2)).is_identity


def test_portrait_examples(grig, hanoi):
    p = portrait(grig.gen("a"), 2)
    assert p[()] == P("(1 2)", 2)
    assert p[(1,)].is_identity and p[(2,)].is_identity
    assert set(p) == {(), (1,), (2,)}
    assert all(x.is_identity for x in portrait(grig.identity(), 3).values())
    assert portrait(hanoi.word("ab"), 1) == {(): P("(1 2 3)", 3)}


def test_group_ops(grig, hanoi):
    a = grig.gen("a")
    assert multiply(a, inverse(a)).is_identity
    w = grig.word("abac")
    assert commutator(w, w).is_identity
    assert conjugate(grig.gen("b"), a) == grig.word("aba")
    with pytest.raises(GroupMismatchError):
        multiply(a, hanoi.gen("a"))


def test_stabilizes_level(hanoi):
    G = catalog.ggs(3, [(1, -1)])
    assert stabilizes_level(G.gen("b"), 1)
    assert not stabilizes_level(hanoi.word("ab"), 1)
    assert stabilizes_level(hanoi.identity(), 4)


def test_psi_examples(hanoi):
    G = catalog.ggs(5, [(1, 2, 2, 1)])
    a, b = G.gen("a"), G.gen("b")
    expected = [a, a ** 2, a ** 2, a, b]
    assert all(equal(u, w).trivial for u, w in zip(psi_n(b, 1), expected))
    assert all(w.is_identity for w in psi_n(hanoi.identity(), 2))
    got = psi_n(hanoi.word("ab") ** 3, 1)
    assert [str(w) for w in got] == ["ba", "ab", "ab"]
    with pytest.raises(NotInStabilizerError, match="not in St"):
        psi_n(hanoi.word("ab"), 1)


def test_rigid_stabilizer(hanoi):
    f = catalog.finitary_element(DegreeSequence.constant(2), {(1,): P("(1 2)", 2)})
    assert in_rigid_stabilizer(f, (1,)).status is RistStatus.YES_CERTIFIED
    assert in_rigid_stabilizer(hanoi.gen("a"), (1,)).status is RistStatus.NO
    G = catalog.ggs(3, [(1, -1)])
    assert in_rigid_stabilizer(G.gen("b"), (3,)).status is RistStatus.NO


def test_parse_word(grig, gs3):
    assert parse_word(grig, "abab") == grig.gen("a") * grig.gen("b") * grig.gen("a") * grig.gen("b")
    assert parse_word(grig, "(ab)^2") == grig.word("abab")
    assert parse_word(gs3, "b^(-1)") == gs3.gen("b").inverse()
    assert parse_word(gs3, "[a,b]") == gs3.word("a^-1 b^-1 a b")
    assert parse_word(grig, "1").is_identity
    assert str(grig.word("aa")) == "1"  # a has declared order 2
    with pytest.raises(WordSyntaxError):
        parse_word(grig, "ax")


def test_recursive_definition_validation():
    with pytest.raises(ValueError):
        GroupDef(3, {"a": Recursive(P("(1 2)", 3), ["a", ""])})  # wrong arity
    with pytest.raises(ValueError):
        GroupDef(2, {"a": Recursive(P("(1 2)", 2), ["z", ""])})


def _words(group):
    names = group.generator_names
    letter = st.tuples(st.sampled_from(names), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=6).map(lambda ls: Word(group, ls))


GROUPS = [catalog.grigorchuk(), catalog.hanoi(), catalog.gupta_sidki(3)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(range(len(GROUPS))).flatmap(lambda i: st.tuples(_words(GROUPS[i]), _words(GROUPS[i]))),
       st.lists(st.integers(1, 2), min_size=1, max_size=3))
def test_apply_is_left_to_right_homomorphism(pair, v):
    f, g = pair
    d = f.tree.degree_at(1)
    v = tuple(min(i, d) for i in v)
    assert apply(f * g, v) == apply(g, apply(f, v))
    # (fg)_v = f_v g_{f(v)}
    lhs = section(f * g, v)
    rhs = section(f, v) * section(g, apply(f, v))
    assert equal(lhs, rhs).trivial
    assert is_trivial(f * f.inverse()).trivial
