"""Reduced trees at a set of same-level vertices and the automorphisms induced on them.

The reduced tree at ``V = [v_1, ..., v_r]`` (all on level ``n``) has a root
with ``r`` children; below child ``i`` hangs a copy of the subtree at ``v_i``.
An automorphism ``f`` permuting ``V`` induces an automorphism of it: the root
label records how ``f`` permutes ``V`` and the section at child ``i`` is the
section of ``f`` at ``v_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .autom import Induced, Permutation, Word, apply, section
from .tree import ROOT, DegreeSequence, Vertex, check_vertex, level_vertices


@dataclass(frozen=True)
class ReducedTree:
    source: DegreeSequence
    level: int
    roots: tuple[Vertex, ...]
    induced_seq: DegreeSequence

    @property
    def is_identity_reduction(self) -> bool:
        """True when the reduced tree is the source tree itself."""
        if self.roots == (ROOT,):
            return True
        return self.level == 1 and self.roots == tuple(level_vertices(self.source, 1))

    def source_vertex(self, u: Sequence[int]) -> Vertex:
        """The source-tree vertex corresponding to the reduced-tree vertex ``u``."""
        u = tuple(u)
        if self.roots == (ROOT,):
            return u
        if not u:
            raise ValueError("the root of a reduced tree has no source vertex")
        return self.roots[u[0] - 1] + u[1:]

    def reduced_vertex(self, w: Sequence[int]) -> Vertex:
        """Inverse of :meth:`source_vertex` for vertices below the roots."""
        w = tuple(w)
        if self.roots == (ROOT,):
            return w
        head = w[: self.level]
        if head not in self.roots:
            raise ValueError(f"{list(w)} does not lie below the reduced-tree roots")
        return (self.roots.index(head) + 1,) + w[self.level:]


def reduced_tree(seq: DegreeSequence, V: Sequence[Sequence[int]]) -> ReducedTree:
    roots = tuple(check_vertex(seq, v) for v in V)
    if not roots:
        raise ValueError("V must be non-empty")
    if len(set(roots)) != len(roots):
        raise ValueError("vertices of V must be distinct")
    levels = {len(v) for v in roots}
    if len(levels) != 1:
        raise ValueError(f"vertices of V lie on different levels {sorted(levels)}")
    n = levels.pop()
    if roots == (ROOT,):
        return ReducedTree(seq, 0, roots, seq)
    if len(roots) == 1:
        # a single vertex: R(V) has a root with one child, which a degree
        # sequence cannot express, so reduce to the subtree at that vertex
        raise ValueError("V must contain at least two vertices (or be the root)")
    tail = seq.shift(n)
    induced = DegreeSequence((len(roots),) + tail.preperiod, tail.period)
    return ReducedTree(seq, n, roots, induced)


class NotStabilizingError(ValueError):
    pass


def induce(f: Word, rt: ReducedTree, name: str | None = None) -> Word:
    """The automorphism of ``rt`` induced by ``f`` (which must permute ``rt.roots``).

    The result is a word in the group of ``f``: a new generator whose sections
    are the sections of ``f`` at the roots, so every verdict about it is as
    exact as for ``f`` itself.
    """
    if f.tree != rt.source:
        raise ValueError("element and reduced tree live on different trees")
    if rt.is_identity_reduction:
        return f
    images = [apply(f, v) for v in rt.roots]
    index = {v: i for i, v in enumerate(rt.roots)}
    if any(w not in index for w in images):
        raise NotStabilizingError("element does not stabilize V setwise")
    perm = Permutation(tuple(index[w] + 1 for w in images))
    secs = tuple(section(f, v).letters for v in rt.roots)
    group = f.group
    return group.add_induced_generator(name or group.fresh_name("phi"), Induced(perm, secs, rt.induced_seq))


def induce_on_orbit(f: Word, v: Sequence[int]) -> tuple[ReducedTree, Word]:
    """Reduce at the ``f``-orbit of ``v`` (in iteration order) and induce ``f``.

    With this order the induced root label is the cycle ``(1 2 ... |O|)``.
    """
    from .orbitlab import orbit

    o = orbit(f, v)
    if o.length < 2:
        raise ValueError(f"the orbit of {list(o.base)} is trivial")
    rt = reduced_tree(f.tree, o.vertices)
    return rt, induce(f, rt)
