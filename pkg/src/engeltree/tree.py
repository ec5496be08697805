"""Spherically homogeneous rooted trees.

A tree is given by an eventually periodic sequence of branching degrees
``d_1, d_2, ...``; the root has ``d_1`` children, every vertex on level ``n``
has ``d_{n+1}`` children.  Vertices are plain tuples of 1-based child indices,
the empty tuple being the root.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

Vertex = tuple[int, ...]

ROOT: Vertex = ()


def _minimal_period(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for k in range(1, n + 1):
        if n % k == 0 and period == period[:k] * (n // k):
            return period[:k]
    return period


@dataclass(frozen=True)
class DegreeSequence:
    """Eventually periodic sequence of branching degrees.

    The stored form is canonical (shortest period, shortest preperiod), so two
    sequences describing the same tree compare equal.
    """

    preperiod: tuple[int, ...] = ()
    period: tuple[int, ...] = (2,)

    def __post_init__(self):
        pre = tuple(int(x) for x in self.preperiod)
        per = tuple(int(x) for x in self.period)
        if not per:
            raise ValueError("period must be non-empty")
        if any(x < 2 for x in pre + per):
            raise ValueError(f"branching degrees must be >= 2, got {pre + per}")
        per = _minimal_period(per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def constant(cls, d: int) -> DegreeSequence:
        return cls((), (d,))

    @property
    def is_constant(self) -> bool:
        return not self.preperiod and len(self.period) == 1

    def degree_at(self, level: int) -> int:
        """Number of children of a vertex on level ``level - 1``."""
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        i = level - 1
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def shift(self, n: int = 1) -> DegreeSequence:
        return _shift(self, n)

    def _shift(self, n: int) -> DegreeSequence:
        if n < 0:
            raise ValueError("shift must be non-negative")
        if n <= len(self.preperiod):
            return DegreeSequence(self.preperiod[n:], self.period)
        k = (n - len(self.preperiod)) % len(self.period)
        return DegreeSequence((), self.period[k:] + self.period[:k])

    def level_size(self, n: int) -> int:
        size = 1
        for k in range(1, n + 1):
            size *= self.degree_at(k)
        return size

    def __str__(self):
        if self.is_constant:
            return f"T_{self.period[0]}"
        return f"T[pre={list(self.preperiod)}, period={list(self.period)}]"


@functools.lru_cache(maxsize=4096)
def _shift(seq: DegreeSequence, n: int) -> DegreeSequence:
    return seq._shift(n)


def degree_at(seq: DegreeSequence, level: int) -> int:
    return seq.degree_at(level)


def shift(seq: DegreeSequence, n: int) -> DegreeSequence:
    return seq.shift(n)


def level(v: Vertex) -> int:
    return len(v)


def parent(v: Vertex) -> Vertex:
    if not v:
        raise ValueError("the root has no parent")
    return v[:-1]


def is_valid(seq: DegreeSequence, v: Sequence[int]) -> bool:
    return all(1 <= c <= seq.degree_at(k) for k, c in enumerate(v, start=1))


def check_vertex(seq: DegreeSequence, v: Sequence[int]) -> Vertex:
    v = tuple(int(c) for c in v)
    if not is_valid(seq, v):
        raise ValueError(f"vertex {list(v)} is not a vertex of {seq}")
    return v


def children(seq: DegreeSequence, v: Vertex) -> list[Vertex]:
    v = check_vertex(seq, v)
    return [v + (i,) for i in range(1, seq.degree_at(len(v) + 1) + 1)]


def level_vertices(seq: DegreeSequence, n: int) -> Iterator[Vertex]:
    """Vertices of level ``n`` in lexicographic order."""
    ranges = [range(1, seq.degree_at(k) + 1) for k in range(1, n + 1)]
    return itertools.product(*ranges)


def vertex_index(seq: DegreeSequence, v: Vertex) -> int:
    """Position of ``v`` in ``level_vertices(seq, len(v))``."""
    idx = 0
    for k, c in enumerate(v, start=1):
        idx = idx * seq.degree_at(k) + (c - 1)
    return idx


def vertex_at(seq: DegreeSequence, n: int, idx: int) -> Vertex:
    out = []
    for k in range(n, 0, -1):
        d = seq.degree_at(k)
        idx, r = divmod(idx, d)
        out.append(r + 1)
    return tuple(reversed(out))


def sort_key(v: Vertex) -> tuple[int, Vertex]:
    return (len(v), v)


def is_descendant(w: Vertex, v: Vertex) -> bool:
    """True when ``w`` lies in the subtree hanging from ``v`` (``w == v`` included)."""
    return w[: len(v)] == v
