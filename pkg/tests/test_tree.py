from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from engeltree.tree import (DegreeSequence, children, degree_at, is_descendant, is_valid, level_vertices, parent,
                            shift, vertex_at, vertex_index)


def test_degree_at_constant():
    assert degree_at(DegreeSequence.constant(3), 5) == 3


def test_degree_at_reads_preperiod_then_period():
    seq = DegreeSequence((2,), (3, 4))
    assert [degree_at(seq, n) for n in range(1, 6)] == [2, 3, 4, 3, 4]


def test_degree_at_rejects_level_zero():
    with pytest.raises(ValueError):
        degree_at(DegreeSequence.constant(2), 0)


def test_shift_examples():
    assert shift(DegreeSequence.constant(3), 7) == DegreeSequence.constant(3)
    assert shift(DegreeSequence((2,), (3,)), 1) == DegreeSequence.constant(3)
    assert shift(DegreeSequence((2, 5), (3, 4)), 3) == DegreeSequence((), (4, 3))


def test_canonical_form_identifies_equal_sequences():
    assert DegreeSequence((3,), (3,)) == DegreeSequence.constant(3)
    assert DegreeSequence((), (2, 2)) == DegreeSequence.constant(2)


def test_children_examples():
    t3 = DegreeSequence.constant(3)
    assert children(t3, ()) == [(1,), (2,), (3,)]
    assert children(DegreeSequence.constant(2), (2,)) == [(2, 1), (2, 2)]
    seq = DegreeSequence((3,), (2,))
    assert children(seq, (1, 2)) == [(1, 2, 1), (1, 2, 2)]


def test_children_rejects_invalid_vertex():
    seq = DegreeSequence((3,), (2,))
    assert not is_valid(seq, (1, 3))
    with pytest.raises(ValueError):
        children(seq, (1, 3))


def test_level_vertices_lexicographic():
    seq = DegreeSequence((2,), (3,))
    verts = list(level_vertices(seq, 2))
    assert verts == sorted(verts) and len(verts) == 6
    assert parent((2, 3)) == (2,)
    assert is_descendant((2, 3, 1), (2,)) and not is_descendant((2,), (2, 3))


sequences = st.builds(DegreeSequence,
                      st.lists(st.integers(2, 4), max_size=2).map(tuple),
                      st.lists(st.integers(2, 4), min_size=1, max_size=2).map(tuple))


@given(sequences, st.integers(0, 4), st.integers(1, 6))
def test_shift_matches_degrees(seq, n, k):
    assert shift(seq, n).degree_at(k) == seq.degree_at(n + k)


@given(sequences, st.integers(0, 4), st.data())
def test_vertex_index_roundtrip(seq, n, data):
    i = data.draw(st.integers(0, seq.level_size(n) - 1))
    assert vertex_index(seq, vertex_at(seq, n, i)) == i
