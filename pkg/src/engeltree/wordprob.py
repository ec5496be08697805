"""Triviality, equality and orders of words.

An element is trivial exactly when every iterated section has trivial root
label.  For finite-state generators the set of iterated sections of a word is
finite in practice (section words do not grow once exponents are reduced), so
exploring it breadth first decides the word problem.  Label-function letters
without a depth bound can make that set infinite; exploration then stops at a
depth cut-off and reports ``UNDECIDED``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .autom import Word
from .tree import Vertex


class Triviality(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class TrivialityVerdict:
    status: Triviality
    witness: Optional[Vertex] = None
    explored: int = 0

    @property
    def trivial(self) -> bool:
        return self.status is Triviality.TRIVIAL

    @property
    def nontrivial(self) -> bool:
        return self.status is Triviality.NONTRIVIAL

    @property
    def decided(self) -> bool:
        return self.status is not Triviality.UNDECIDED

    def to_dict(self) -> dict:
        out: dict = {"status": self.status.value}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


@dataclass(frozen=True)
class ClosureBudget:
    """Limits for section-closure exploration.

    ``max_words`` caps the number of distinct section words; ``label_depth``
    is how deep label functions without a depth bound are unfolded.
    """

    max_words: int = 1_000_000
    label_depth: int = 8


DEFAULT_BUDGET = ClosureBudget()

_TRIVIAL = TrivialityVerdict(Triviality.TRIVIAL)


def _identity_images(d: int, _cache: dict = {}) -> tuple[int, ...]:
    hit = _cache.get(d)
    if hit is None:
        hit = _cache[d] = tuple(range(1, d + 1))
    return hit


def is_trivial(w: Word, budget: ClosureBudget | None = None) -> TrivialityVerdict:
    """Decide whether ``w`` is the identity automorphism.

    The witness of a non-trivial verdict is the first vertex, in breadth-first
    order, where ``w`` carries a non-identity label.
    """
    budget = budget or DEFAULT_BUDGET
    if not w.letters:
        return _TRIVIAL
    group = w.group
    start = (w.letters, w.tree)
    cached = group._closure_cache.get(start)
    if cached is not None:
        return cached
    known_trivial: set = group.__dict__.setdefault("_known_trivial", set())
    if start in known_trivial:
        return _TRIVIAL

    seen = {start}
    queue = deque([(w.letters, w.tree, ())])
    undecided = False
    while queue:
        letters, tree, v = queue.popleft()
        perm, ch = group.expand(letters, tree)
        if perm != _identity_images(len(perm)):
            verdict = TrivialityVerdict(Triviality.NONTRIVIAL, v, len(seen))
            group._closure_cache[start] = verdict
            return verdict
        if len(v) >= budget.label_depth and group.has_unbounded_labels(letters):
            undecided = True
            continue
        ctree = tree.shift(1)
        for i, c in enumerate(ch, start=1):
            if not c:
                continue
            key = (c, ctree)
            if key in seen or key in known_trivial:
                continue
            seen.add(key)
            if len(seen) > budget.max_words:
                return TrivialityVerdict(Triviality.UNDECIDED, None, len(seen))
            queue.append((c, ctree, v + (i,)))
    if undecided:
        return TrivialityVerdict(Triviality.UNDECIDED, None, len(seen))
    known_trivial.update(seen)
    return _TRIVIAL


def equal(w1: Word, w2: Word, budget: ClosureBudget | None = None) -> TrivialityVerdict:
    """Verdict on ``w1 w2^-1``: ``TRIVIAL`` means the words are equal in the group."""
    return is_trivial(w1 * w2.inverse(), budget)


def compare_portraits(w1: Word, w2: Word, depth: int) -> TrivialityVerdict:
    """Compare two words that may live in different group definitions.

    Labels are compared on all levels ``< depth``.  Agreement is certified
    (``TRIVIAL``) only when both words are finitary with all labels above
    ``depth``; otherwise agreement yields ``UNDECIDED``.
    """
    if w1.tree != w2.tree:
        raise ValueError("words act on different trees")
    seen = set()
    frontier = [(w1.letters, w2.letters, w1.tree, ())]
    for _ in range(depth):
        nxt = []
        for l1, l2, tree, v in frontier:
            p1, c1 = w1.group.expand(l1, tree)
            p2, c2 = w2.group.expand(l2, tree)
            if p1 != p2:
                return TrivialityVerdict(Triviality.NONTRIVIAL, v)
            ctree = tree.shift(1)
            for i, (a, b) in enumerate(zip(c1, c2), start=1):
                if not a and not b:
                    continue
                key = (a, b, ctree)
                if key not in seen:
                    seen.add(key)
                    nxt.append((a, b, ctree, v + (i,)))
        frontier = nxt
        if not frontier:
            return _TRIVIAL
    d1, d2 = finitary_depth(w1), finitary_depth(w2)
    if d1 is not None and d2 is not None and max(d1, d2) <= depth:
        return _TRIVIAL
    return TrivialityVerdict(Triviality.UNDECIDED)


def finitary_depth(w: Word, max_words: int = 200_000) -> Optional[int]:
    """Least ``D`` such that all labels of ``w`` on levels ``>= D`` are trivial.

    Returns ``None`` when the support is infinite or cannot be bounded within
    ``max_words`` section words.
    """
    group = w.group
    root = (w.letters, w.tree)
    nodes: dict = {}
    stack = [root]
    while stack:
        key = stack.pop()
        if key in nodes:
            continue
        letters, tree = key
        if group.has_unbounded_labels(letters):
            return None
        perm, ch = group.expand(letters, tree)
        ctree = tree.shift(1)
        kids = [(c, ctree) for c in ch if c]
        nodes[key] = (perm != _identity_images(len(perm)), kids)
        if len(nodes) > max_words:
            return None
        stack.extend(k for k in kids if k not in nodes)

    # live nodes reach some non-trivial label
    parents: dict = {k: [] for k in nodes}
    for k, (_, kids) in nodes.items():
        for c in kids:
            parents[c].append(k)
    live = {k for k, (nt, _) in nodes.items() if nt}
    todo = list(live)
    while todo:
        k = todo.pop()
        for p in parents[k]:
            if p not in live:
                live.add(p)
                todo.append(p)
    if root not in live:
        return 0

    height: dict = {}
    on_path: set = set()
    # iterative post-order DFS over live nodes; a cycle means infinite support
    stack2 = [(root, False)]
    while stack2:
        key, done = stack2.pop()
        if done:
            on_path.discard(key)
            nt, kids = nodes[key]
            best = 0 if nt else -1
            for c in kids:
                if c in live:
                    best = max(best, 1 + height[c])
            height[key] = best
            continue
        if key in height:
            continue
        if key in on_path:
            return None
        on_path.add(key)
        stack2.append((key, True))
        for c in nodes[key][1]:
            if c in live:
                if c in on_path:
                    return None
                if c not in height:
                    stack2.append((c, False))
    return height[root] + 1


# -- orders -------------------------------------------------------------------

class OrderKind(enum.Enum):
    FINITE = "finite"
    LOWER_BOUND = "lower_bound"
    INFINITE = "infinite"


@dataclass(frozen=True)
class OrderPolicy:
    max_level: int = 6
    max_power: int = 1 << 20
    stability_window: int = 3
    budget: ClosureBudget = field(default_factory=ClosureBudget)
    use_certificate: bool = True


@dataclass(frozen=True)
class OrderResult:
    kind: OrderKind
    m: Optional[int] = None
    certified: bool = False
    bound: Optional[int] = None
    certificate: Optional[object] = None
    levels: tuple[int, ...] = ()

    @property
    def decided(self) -> bool:
        return self.kind is OrderKind.INFINITE or (self.kind is OrderKind.FINITE and self.certified)

    @property
    def is_finite(self) -> bool:
        return self.kind is OrderKind.FINITE

    def to_dict(self) -> dict:
        if self.kind is OrderKind.FINITE:
            return {"kind": "finite", "m": self.m, "certified": self.certified}
        if self.kind is OrderKind.INFINITE:
            return {"kind": "infinite", "certificate": self.certificate.to_dict()}
        return {"kind": "lower_bound", "bound": self.bound}


def order(w: Word, policy: OrderPolicy | None = None) -> OrderResult:
    """Order of ``w`` from its action on successive levels.

    Tracks ``s_n`` (order of the action on level ``n``).  Returns ``INFINITE``
    when a self-reproduction certificate is found, ``FINITE`` once ``s_n`` has
    been stable for ``stability_window`` levels (certified if ``w^m`` is
    certified trivial), and ``LOWER_BOUND`` otherwise.
    """
    from .orbitlab import certificate_at_level, order_mod_level

    policy = policy or OrderPolicy()
    if not w.letters:
        return OrderResult(OrderKind.FINITE, 1, True, levels=(1,))
    levels: list[int] = []
    tested: set[int] = set()
    uncertified: Optional[int] = None
    window = max(1, policy.stability_window)
    for n in range(1, policy.max_level + 1):
        s = order_mod_level(w, n)
        levels.append(s)
        if policy.use_certificate and s > 1:
            cert = certificate_at_level(w, n, s, policy.budget)
            if cert is not None:
                return OrderResult(OrderKind.INFINITE, certificate=cert, levels=tuple(levels))
        tail = levels[-window:]
        if len(tail) == window and len(set(tail)) == 1:
            m = tail[0]
            if m not in tested and m <= policy.max_power:
                tested.add(m)
                verdict = is_trivial(w ** m, policy.budget)
                if verdict.trivial:
                    return OrderResult(OrderKind.FINITE, m, True, levels=tuple(levels))
                if verdict.status is Triviality.UNDECIDED:
                    uncertified = m
    if uncertified is not None and levels[-1] == uncertified:
        tail = levels[-window:]
        if len(tail) == window and len(set(tail)) == 1:
            return OrderResult(OrderKind.FINITE, uncertified, False, levels=tuple(levels))
    return OrderResult(OrderKind.LOWER_BOUND, bound=max(levels), levels=tuple(levels))
