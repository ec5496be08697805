from __future__ import annotations

import math

import pytest

from engeltree import catalog
from engeltree.autom import Permutation, section
from engeltree.orbitlab import (NoFundamentalSystemError, SplitStatus, fundamental_system, infinite_order_certificate,
                                is_totally_splitting, orbit, orbit_lengths, orbits, order_mod_level)
from engeltree.tree import DegreeSequence
from engeltree.wordprob import equal


def rooted(d, cycles):
    return catalog.finitary_element(DegreeSequence.constant(d), {(): Permutation.parse(cycles, d)})


def test_orbit_examples(hanoi):
    ab = hanoi.word("ab")
    assert len(orbit(hanoi.identity(), (2, 1))) == 1
    o = orbit(ab, (1,))
    assert set(o.vertices) == {(1,), (2,), (3,)} and o.length == 3
    assert orbit(ab, (1, 1)).length == 9
    assert order_mod_level(ab, 2) == 9


def test_orbit_lengths_examples(grig):
    f = rooted(5, "(1 2)(3 4 5)")
    assert orbit_lengths(f, 1) == [2, 3]
    assert orbit_lengths(grig.identity(), 2) == [1, 1, 1, 1]
    assert orbit_lengths(grig.gen("a"), 2) == [2, 2]


def test_order_mod_level_examples(hanoi, grig):
    assert order_mod_level(hanoi.word("ab"), 1) == 3
    assert order_mod_level(rooted(5, "(1 2)(3 4 5)"), 1) == 6
    assert order_mod_level(grig.identity(), 3) == 1


def test_orbits_are_ordered_and_cover_level(grig):
    os_ = orbits(grig.word("ab"), 3)
    assert sum(len(o) for o in os_) == 8
    assert [o.base for o in os_] == sorted(o.base for o in os_)
    lengths = [o.length for o in os_]
    assert math.lcm(*lengths) == order_mod_level(grig.word("ab"), 3)


def test_totally_splitting_examples(hanoi, grig):
    f = rooted(3, "(1 2 3)")
    assert is_totally_splitting(f, orbit(f, (1,))).status is SplitStatus.CERTIFIED
    ab = hanoi.word("ab")
    v = is_totally_splitting(ab, orbit(ab, (1,)))
    assert v.status is SplitStatus.NO and orbit(ab, v.witness).length > 3
    a = grig.gen("a")
    assert is_totally_splitting(a, orbit(a, (1,))).status is SplitStatus.CERTIFIED


def test_totally_splitting_rejects_non_orbit(grig):
    with pytest.raises(ValueError):
        is_totally_splitting(grig.gen("a"), [(1,), (1,)])


def test_fundamental_system_examples(grig):
    fs = fundamental_system(rooted(5, "(1 2)(3 4 5)"))
    assert fs.vertices == ((1,), (3,)) and fs.certified and fs.order == 6
    assert fundamental_system(rooted(2, "(1 2)")).vertices == ((1,),)
    assert fundamental_system(grig.gen("a")).to_dict()["vertices"] == [[1]]
    ad = fundamental_system(grig.word("ad"))
    assert ad.order == 4 and ad.lengths == (4,)


def test_fundamental_system_errors(grig, hanoi):
    with pytest.raises(NoFundamentalSystemError):
        fundamental_system(grig.identity())
    with pytest.raises(NoFundamentalSystemError):
        fundamental_system(hanoi.word("ab"))


def test_infinite_order_certificates(hanoi, grig):
    cert = infinite_order_certificate(hanoi.word("ab"))
    assert (cert.s, cert.v) == (3, (2,)) and cert.verdict.trivial
    assert infinite_order_certificate(grig.gen("a")) is None
    ba = hanoi.word("ba")
    cert = infinite_order_certificate(ba)
    assert cert.s == 3 and equal(section(ba ** 3, cert.v), ba).trivial
