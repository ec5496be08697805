"""Orbits on levels, totally splitting orbits and fundamental systems."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .autom import Word, apply, level_permutation, section
from .tree import Vertex, check_vertex, vertex_at
from .wordprob import ClosureBudget, OrderPolicy, OrderResult, Triviality, TrivialityVerdict, equal, is_trivial

LEVEL_CAP = 1_000_000


class LevelTooLargeError(ValueError):
    pass


def _check_level_size(f: Word, n: int):
    size = f.tree.level_size(n)
    if size > LEVEL_CAP:
        raise LevelTooLargeError(f"level {n} has {size} vertices (cap {LEVEL_CAP})")


@dataclass(frozen=True)
class Orbit:
    """An orbit of ``<f>``, listed from ``base`` in the order ``f`` visits it."""

    base: Vertex
    vertices: tuple[Vertex, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def orbit(f: Word, v: Sequence[int]) -> Orbit:
    v = check_vertex(f.tree, v)
    verts = [v]
    u = apply(f, v)
    while u != v:
        verts.append(u)
        if len(verts) > LEVEL_CAP:
            raise LevelTooLargeError("orbit longer than the vertex cap")
        u = apply(f, u)
    return Orbit(v, tuple(verts))


def orbits(f: Word, n: int) -> list[Orbit]:
    """All orbits of ``<f>`` on level ``n``, ordered by their least vertex."""
    _check_level_size(f, n)
    perm = level_permutation(f, n)
    seen = bytearray(len(perm))
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = 1
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = 1
            j = perm[j]
        verts = tuple(vertex_at(f.tree, n, k) for k in cyc)
        out.append(Orbit(verts[0], verts))
    return out


def _cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    seen = bytearray(len(perm))
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
            k += 1
        out.append(k)
    return out


def orbit_lengths(f: Word, n: int) -> list[int]:
    """Sorted multiset of orbit lengths on level ``n``."""
    _check_level_size(f, n)
    return sorted(_cycle_lengths(level_permutation(f, n)))


def order_mod_level(f: Word, n: int) -> int:
    """Order of the action of ``f`` on level ``n`` (lcm of its orbit lengths)."""
    _check_level_size(f, n)
    return math.lcm(*_cycle_lengths(level_permutation(f, n)))


# -- totally splitting orbits -------------------------------------------------

class SplitStatus(enum.Enum):
    CERTIFIED = "certified"
    HOLDS_UP_TO_DEPTH = "holds-up-to-depth"
    NO = "no"


@dataclass(frozen=True)
class SplitVerdict:
    status: SplitStatus
    witness: Optional[Vertex] = None

    def __bool__(self):
        return self.status is not SplitStatus.NO


def is_totally_splitting(f: Word, o: Orbit | Sequence[Sequence[int]], depth: int = 6,
                         budget: ClosureBudget | None = None) -> SplitVerdict:
    """Is every vertex below the orbit ``o`` in an orbit of the same length?

    Equivalently the section of ``f^|o|`` at a vertex of ``o`` is trivial.  A
    ``NO`` verdict carries a descendant (on a level ``<= depth``) whose orbit
    is longer than ``|o|``.
    """
    verts = tuple(o.vertices) if isinstance(o, Orbit) else tuple(check_vertex(f.tree, v) for v in o)
    if not verts:
        raise ValueError("empty orbit")
    for a, b in zip(verts, verts[1:] + verts[:1]):
        if apply(f, a) != b:
            raise ValueError(f"{[list(v) for v in verts]} is not an orbit of the element listed in order")
    base = verts[0]
    g = section(f ** len(verts), base)
    verdict = is_trivial(g, budget)
    if verdict.trivial:
        return SplitVerdict(SplitStatus.CERTIFIED)
    if verdict.nontrivial:
        x = verdict.witness
        lab = g.label(x)
        moved = next(i for i in range(1, lab.degree + 1) if lab(i) != i)
        w = base + x + (moved,)
        if len(w) <= depth:
            return SplitVerdict(SplitStatus.NO, w)
        return SplitVerdict(SplitStatus.HOLDS_UP_TO_DEPTH)
    # undecided: look for a moved vertex level by level
    for k in range(1, depth - len(base) + 1):
        perm = level_permutation(g, k)
        for i, j in enumerate(perm):
            if i != j:
                return SplitVerdict(SplitStatus.NO, base + vertex_at(g.tree, k, i))
    return SplitVerdict(SplitStatus.HOLDS_UP_TO_DEPTH)


@dataclass(frozen=True)
class FundamentalSystem:
    vertices: tuple[Vertex, ...]
    lengths: tuple[int, ...]
    level: int
    order: int
    certified: bool

    def to_dict(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "lengths": list(self.lengths),
            "level": self.level,
            "order": self.order,
            "certified": self.certified,
        }


class NoFundamentalSystemError(ValueError):
    pass


def fundamental_system(f: Word, depth: int = 6, stability_window: int = 3,
                       order_result: OrderResult | None = None,
                       budget: ClosureBudget | None = None) -> FundamentalSystem:
    """Vertices on one level whose orbits are non-trivial, totally splitting,
    and have orbit lengths with lcm equal to the order of ``f``.

    Among sets on a level the one of least size wins; ties go to the
    lexicographically least list of vertices.  Levels are tried from the top
    and the first one with a verified set is returned.
    """
    from .wordprob import order as element_order

    if order_result is None:
        order_result = element_order(f, OrderPolicy(max_level=max(depth, stability_window),
                                                    stability_window=stability_window,
                                                    budget=budget or ClosureBudget()))
    if not order_result.is_finite:
        raise NoFundamentalSystemError(f"element order is not known to be finite ({order_result.to_dict()})")
    m = order_result.m
    if m == 1:
        raise NoFundamentalSystemError("the identity has no fundamental system")
    split_cache: dict = {}

    def splits(o: Orbit) -> SplitVerdict:
        hit = split_cache.get(o.base)
        if hit is None:
            hit = split_cache[o.base] = is_totally_splitting(f, o, depth, budget)
        return hit

    for n in range(1, depth + 1):
        if order_mod_level(f, n) != m:
            continue
        by_length: dict[int, list[Orbit]] = {}
        for o in orbits(f, n):
            if o.length > 1:
                by_length.setdefault(o.length, []).append(o)
        lengths = sorted(by_length)
        k0 = None
        for k in range(1, len(lengths) + 1):
            if any(math.lcm(*c) == m for c in itertools.combinations(lengths, k)):
                k0 = k
                break
        if k0 is None:
            continue
        best = None
        for combo in itertools.combinations(lengths, k0):
            if math.lcm(*combo) != m:
                continue
            chosen = []
            for ell in combo:
                rep = next((o for o in by_length[ell] if splits(o)), None)
                if rep is None:
                    break
                chosen.append(rep)
            else:
                chosen.sort(key=lambda o: o.base)
                key = tuple(o.base for o in chosen)
                if best is None or key < best[0]:
                    best = (key, chosen)
        if best is not None:
            chosen = best[1]
            certified = order_result.certified and all(
                splits(o).status is SplitStatus.CERTIFIED for o in chosen)
            return FundamentalSystem(tuple(o.base for o in chosen), tuple(o.length for o in chosen),
                                     n, m, certified)
    raise NoFundamentalSystemError(f"no verified fundamental system on levels 1..{depth}")


# -- infinite order certificates ----------------------------------------------

@dataclass(frozen=True)
class InfiniteOrderCertificate:
    """``f^s`` fixes ``v`` and its section there equals ``f``, with ``s > 1``.

    Then ``f^(s^k)`` moves vertices ``k`` levels below ``v``, so ``f`` has
    infinite order.
    """

    s: int
    v: Vertex
    verdict: TrivialityVerdict

    def to_dict(self) -> dict:
        return {"s": self.s, "v": list(self.v)}


def certificate_at_level(f: Word, n: int, s: int | None = None,
                         budget: ClosureBudget | None = None) -> Optional[InfiniteOrderCertificate]:
    if s is None:
        s = order_mod_level(f, n)
    if s <= 1:
        return None
    if f.tree.shift(n) != f.tree:
        return None
    power = f ** s
    group = f.group
    root_label = group.expand(f.letters, f.tree)[0]
    # f^s fixes level n; walk its sections level by level in lexicographic
    # order, keeping only the least vertex for each distinct section word
    frontier = [((), power.letters)]
    tree = f.tree
    for _ in range(n):
        seen = set()
        nxt = []
        for v, letters in frontier:
            ch = group.expand(letters, tree)[1]
            for i, c in enumerate(ch, start=1):
                if c not in seen:
                    seen.add(c)
                    nxt.append((v + (i,), c))
        frontier = nxt
        tree = tree.shift(1)
    for v, letters in frontier:
        if group.expand(letters, f.tree)[0] != root_label:
            continue
        verdict = equal(Word(group, letters, f.tree, normalized=True), f, budget)
        if verdict.trivial:
            return InfiniteOrderCertificate(s, v, verdict)
    return None


def infinite_order_certificate(f: Word, max_level: int = 6,
                               budget: ClosureBudget | None = None) -> Optional[InfiniteOrderCertificate]:
    for n in range(1, max_level + 1):
        cert = certificate_at_level(f, n, None, budget)
        if cert is not None:
            return cert
    return None
