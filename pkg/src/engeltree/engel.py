"""Engel commutators, Engel degrees and the explicit non-Engel constructions.

``[g,_0 x] = g`` and ``[g,_n x] = [[g,_{n-1} x], x]``.  Non-vanishing is only
ever reported up to a bound (``SURVIVES``); vanishing is exact.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .autom import (GroupDef, Induced, LabelFn, Permutation, Word, reduce_letters, section,
                    stabilizes_level)
from .wordprob import (ClosureBudget, OrderPolicy, OrderResult, Triviality, equal, is_trivial,
                       order)


class EngelKind(enum.Enum):
    DEGREE = "degree"
    SURVIVES = "survives"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class EngelVerdict:
    """``DEGREE``: ``[g,_n x]`` certified trivial and ``n`` least.
    ``SURVIVES``: ``[g,_n x]`` certified non-trivial (``never`` when proven for all ``n``).
    ``UNDECIDED``: the word problem hit its budget at step ``n``."""

    kind: EngelKind
    n: int
    never: bool = False

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "n": self.n}
        if self.never:
            out["never"] = True
        return out

    def __str__(self):
        if self.kind is EngelKind.DEGREE:
            return f"Degree({self.n})"
        if self.kind is EngelKind.SURVIVES:
            return f"SurvivesTo({self.n})" + (" forever" if self.never else "")
        return f"Undecided({self.n})"


@dataclass(frozen=True)
class Probe:
    g: Word
    verdict: EngelVerdict


@dataclass
class EngelReport:
    x: Word
    probes: list[Probe]
    details: dict = field(default_factory=dict)

    @property
    def all_vanish(self) -> bool:
        return all(p.verdict.kind is EngelKind.DEGREE for p in self.probes)

    @property
    def counterexample(self) -> Optional[Word]:
        return next((p.g for p in self.probes if p.verdict.kind is EngelKind.SURVIVES), None)

    @property
    def max_degree_seen(self) -> int:
        return max((p.verdict.n for p in self.probes if p.verdict.kind is EngelKind.DEGREE), default=0)

    def to_dict(self) -> dict:
        ce = self.counterexample
        out = {
            "x": str(self.x),
            "probes": [{"g": str(p.g), "verdict": p.verdict.to_dict()} for p in self.probes],
            "all_vanish": self.all_vanish,
            "counterexample": None if ce is None else str(ce),
            "max_degree_seen": self.max_degree_seen,
        }
        for k, v in self.details.items():
            if isinstance(v, (str, int, float, bool, list)) or v is None:
                out[k] = v
            elif hasattr(v, "to_dict"):
                out[k] = v.to_dict()
        return out


def engel_commutator(g: Word, x: Word, n: int) -> Word:
    if n < 0:
        raise ValueError("n must be >= 0")
    c = g
    for _ in range(n):
        c = c.comm(x)
    return c


def engel_degree(g: Word, x: Word, max_n: int = 10, budget: ClosureBudget | None = None) -> EngelVerdict:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    c = g
    for k in range(max_n + 1):
        if k:
            c = c.comm(x)
        verdict = is_trivial(c, budget)
        if verdict.trivial:
            return EngelVerdict(EngelKind.DEGREE, k)
        if verdict.status is Triviality.UNDECIDED:
            return EngelVerdict(EngelKind.UNDECIDED, k)
    return EngelVerdict(EngelKind.SURVIVES, max_n)


# -- wreath products of p-groups ------------------------------------------------

def _log_exact(p: int, m: int) -> int:
    k = 0
    while m > 1 and m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError("not a power of p")
    return k


def liebeck_degree(p: int, m: int, q: int) -> int:
    """Engel degree of a generator of ``C_m`` acting on ``C_q wr C_m``:
    ``m + (log_p q - 1)(p - 1) m / p``."""
    if p < 2 or any(p % k == 0 for k in range(2, math.isqrt(p) + 1)):
        raise ValueError(f"p = {p} is not prime")
    for name, v in (("m", m), ("q", q)):
        if v < p:
            raise ValueError(f"{name} = {v} must be at least p = {p}")
        try:
            _log_exact(p, v)
        except ValueError:
            raise ValueError(f"{name} = {v} is not a power of {p}") from None
    return m + (_log_exact(p, q) - 1) * (p - 1) * m // p


# -- commutators with a first-level element -------------------------------------

def rooted_cycle(group: GroupDef, tree=None) -> Word:
    """The rooted automorphism ``(1 2 ... d)`` as a word in ``group`` on ``tree``."""
    tree = tree or group.tree
    d = tree.degree_at(1)
    name = f"rot{d}"
    if name not in group.generator_names:
        cyc = Permutation(tuple(list(range(2, d + 1)) + [1]))
        group.add_label_generator(name, LabelFn(lambda v, c=cyc: c if not v else None, 1))
    return Word(group, ((name, 1),), tree)


def engel_formula_psi(y: Word, x: Word, k: int) -> list[Word]:
    """First-level sections of ``[y,_k x]`` by the closed formula.

    With ``y = a z`` (``a`` the rooted cycle ``(1 2 ... d)``, ``z`` in the
    first level stabilizer) and ``x`` in the first level stabilizer, the
    ``i``-th coordinate is ``[(x_{i-1}^-1)^{z_i},_{k-1} x_i]^{x_i}`` with
    ``x_0 = x_d``.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not stabilizes_level(x, 1):
        raise ValueError("x must stabilize the first level")
    d = y.tree.degree_at(1)
    if y.label().images != tuple(list(range(2, d + 1)) + [1]):
        raise ValueError("the root label of y must be the cycle (1 2 ... d)")
    a = rooted_cycle(y.group, y.tree)
    z = a.inverse() * y
    xs = [section(x, (i,)) for i in range(1, d + 1)]
    zs = [section(z, (i,)) for i in range(1, d + 1)]
    out = []
    for i in range(d):
        prev = xs[i - 1]
        out.append(engel_commutator(prev.inverse().conj(zs[i]), xs[i], k - 1).conj(xs[i]))
    return out


def _as_subtree_word(group: GroupDef, tree, w, stem: str) -> Word:
    if isinstance(w, Word):
        if w.group is not group or w.tree != tree:
            raise ValueError("pair elements must be words of the same group acting on the orbit subtrees")
        return w
    if isinstance(w, Permutation):
        name = group.fresh_name(stem)
        group.add_label_generator(name, LabelFn(lambda v, c=w: c if not v else None, 1))
        return Word(group, ((name, 1),), tree)
    raise TypeError("pair elements must be Words or Permutations")


def _free_check(k: int) -> bool:
    """In the free group on A, B, Z: ``[(x_d^-1)^Z,_{k-1} A]^A = [B,_{k-1} A]^A``
    where ``x_d = (B^-1)^(Z^-1) = Z B^-1 Z^-1``."""
    def inv(w):
        return reduce_letters((s, -e) for s, e in reversed(w))

    def comm(u, v):
        return reduce_letters(inv(u) + inv(v) + u + v)

    def conj(u, v):
        return reduce_letters(inv(v) + u + v)

    A, B, Z = (("A", 1),), (("B", 1),), (("Z", 1),)
    xd = reduce_letters(Z + inv(B) + inv(Z))
    lhs = conj(inv(xd), Z)
    rhs = B
    for _ in range(k - 1):
        lhs, rhs = comm(lhs, A), comm(rhs, A)
    return conj(lhs, A) == conj(rhs, A)


def right_engel_witness(f: Word, orbit_vertex: Sequence[int], a: Word | Permutation, b: Word | Permutation,
                        max_k: int = 6, budget: ClosureBudget | None = None) -> EngelReport:
    """Evidence that ``f`` is not a right Engel element.

    Reduce at the ``f``-orbit of ``orbit_vertex`` (``y`` the induced element),
    take ``r1 = (a, 1, ..., 1)``, ``r2 = (b, 1, ..., 1)`` and
    ``x = r1 (r2^-1)^(y^-1)``.  If ``[b,_k a] != 1`` for all ``k`` then the first
    coordinate of ``[y,_k x]`` is ``[b,_{k-1} a]^a`` and ``[y,_k x] != 1``.
    """
    from .reduce import induce_on_orbit

    if a is None or b is None:
        raise ValueError("a non-Engel pair (a, b) is required")
    rt, y = induce_on_orbit(f, orbit_vertex)
    group = f.group
    sub = f.tree.shift(rt.level)
    a = _as_subtree_word(group, sub, a, "pa")
    b = _as_subtree_word(group, sub, b, "pb")
    pair_ok = all(is_trivial(engel_commutator(b, a, k), budget).nontrivial for k in range(1, max_k + 1))
    r = len(rt.roots)
    ident = Permutation.identity(r)
    r1 = group.add_induced_generator(group.fresh_name("r"), Induced(ident, (a.letters,) + ((),) * (r - 1), rt.induced_seq))
    r2 = group.add_induced_generator(group.fresh_name("r"), Induced(ident, (b.letters,) + ((),) * (r - 1), rt.induced_seq))
    x = r1 * (y * r2.inverse() * y.inverse())
    probes = []
    coordinate_ok = []
    verdict = EngelVerdict(EngelKind.SURVIVES, max_k)
    for k in range(2, max_k + 1):
        c = engel_commutator(y, x, k)
        v = is_trivial(c, budget)
        if not v.nontrivial:
            verdict = EngelVerdict(EngelKind.DEGREE if v.trivial else EngelKind.UNDECIDED, k)
            break
        expected = engel_commutator(b, a, k - 1).conj(a)
        coordinate_ok.append(equal(section(c, (1,)), expected, budget).trivial)
    probes.append(Probe(y, verdict))
    details = {
        "reduced_tree": rt,
        "pair_non_engel": pair_ok,
        "first_coordinate_ok": coordinate_ok,
        "symbolic_ok": all(_free_check(k) for k in range(2, max_k + 1)),
        "y": y,
    }
    return EngelReport(x, probes, details)


# -- GGS groups -----------------------------------------------------------------

@dataclass
class GGSCommutatorPsi:
    vector: object
    psi_ba: list[Word]
    psi_baa: list[Word]
    verified_ba: list[bool]
    verified_baa: list[bool]
    middle_exponents: list[int]
    nonzero_index: Optional[int]

    @property
    def verified(self) -> bool:
        return all(self.verified_ba) and all(self.verified_baa)

    def to_dict(self) -> dict:
        return {
            "psi_ba": [str(w) for w in self.psi_ba],
            "psi_baa": [str(w) for w in self.psi_baa],
            "verified": self.verified,
            "middle_exponents": self.middle_exponents,
            "nonzero_index": self.nonzero_index,
        }


def _ggs_group(v):
    from .catalog import ggs

    return ggs(v.p, [v])


def ggs_commutator_psi(v, budget: ClosureBudget | None = None) -> GGSCommutatorPsi:
    """First-level sections of ``[b, a]`` and ``[b, a, a]`` from the exponent
    patterns, each checked against the directly computed section."""
    G = _ggs_group(v)
    p, e = v.p, (0,) + v.e  # 1-based
    A = lambda k: Word(G, (("a", k),))
    B = lambda k=1: Word(G, (("b", k),))
    ba = [A(-e[1]) * B()]
    ba += [A(e[j] - e[j + 1]) for j in range(1, p - 1)]
    ba += [B(-1) * A(e[p - 1])]
    middle = [(e[j] - 2 * e[j + 1] + e[j + 2]) % p for j in range(1, p - 2)]
    baa = [B(-1) * A(e[1]) * B(-1) * A(e[p - 1]), A(-2 * e[1] + e[2]) * B()]
    baa += [A(c) for c in middle]
    baa += [A(-e[p - 1]) * B() * A(e[p - 2] - e[p - 1])]
    a, b = G.gen("a"), G.gen("b")
    direct_ba = [section(b.comm(a), (i,)) for i in range(1, p + 1)]
    direct_baa = [section(b.comm(a).comm(a), (i,)) for i in range(1, p + 1)]
    ok_ba = [equal(s, t, budget).trivial for s, t in zip(ba, direct_ba)]
    ok_baa = [equal(s, t, budget).trivial for s, t in zip(baa, direct_baa)]
    nz = next((i + 1 for i, c in enumerate(middle) if c), None)
    return GGSCommutatorPsi(v, ba, baa, ok_ba, ok_baa, middle, nz)


@dataclass(frozen=True)
class ProjectionCheck:
    branch: str
    i: int
    vertex: tuple[int, ...]
    power: int
    projections_ok: bool
    generators_found: bool

    def to_dict(self) -> dict:
        return {"branch": self.branch, "i": self.i, "vertex": list(self.vertex), "power": self.power,
                "projections_ok": self.projections_ok, "generators_found": self.generators_found}


def ggs_level_one_projection_check(v, budget: ClosureBudget | None = None) -> ProjectionCheck:
    """Find a vertex where sections of ``[b, a]`` (or ``[b, a, a]`` for symmetric
    vectors) and of a conjugate give a non-trivial power of ``a`` and
    ``a^k b``, which together generate the group."""
    if v.constant:
        raise ValueError("constant defining vector: this case is handled separately")
    G = _ggs_group(v)
    p, e = v.p, (0,) + v.e
    a, b = G.gen("a"), G.gen("b")
    if not v.symmetric:
        i = next(i for i in range(1, p - 1) if e[i] != e[i + 1])
        vert = (i + 1,)
        c = b.comm(a)
        power = (e[i] - e[i + 1]) % p
        second = a ** (-e[1]) * b
        branch = "commutator"
    else:
        middle = [(e[j] - 2 * e[j + 1] + e[j + 2]) % p for j in range(1, p - 2)]
        i = next((j + 1 for j, c in enumerate(middle) if c), None)
        if i is None:
            raise ValueError("symmetric non-constant vector with all second differences zero")
        vert = (i + 2,)
        c = b.comm(a).comm(a)
        power = middle[i - 1]
        second = a ** (-2 * e[1] + e[2]) * b
        branch = "double-commutator"
    ok1 = equal(section(c, vert), a ** power, budget).trivial
    ok2 = equal(section(c.conj(a ** i), vert), second, budget).trivial
    found = ok1 and ok2 and power % p != 0 and any(k == "b" for k, _ in second.letters)
    return ProjectionCheck(branch, i, vert, power, ok1 and ok2, found)


def ggs_non_engel_witness(v, max_k: int = 6, budget: ClosureBudget | None = None) -> EngelReport:
    """``b^lambda`` is not left Engel: ``[a^i,_k b^lambda] != 1`` for ``k <= max_k``.

    ``i`` is least with ``e_{p-i} != 0`` and ``lambda = -i / e_{p-i} mod p``,
    so that the last section of ``(b^-lambda)^(a^i)`` is ``a^i`` and the last
    section of ``[a^i,_k b^lambda]^(b^-lambda)`` is ``[a^i,_{k-1} b^lambda]``.
    """
    G = _ggs_group(v)
    p, e = v.p, (0,) + v.e
    i = next(i for i in range(1, p) if e[p - i] % p)
    lam = (-i * pow(e[p - i], -1, p)) % p
    a, b = G.gen("a"), G.gen("b")
    ai, bl = a ** i, b ** lam
    last = (p,)
    identity_ok = equal(section((b ** -lam).conj(ai), last), ai, budget).trivial
    recursion_ok = []
    verdict = EngelVerdict(EngelKind.SURVIVES, max_k)
    for k in range(1, max_k + 1):
        c = engel_commutator(ai, bl, k)
        t = is_trivial(c, budget)
        if not t.nontrivial:
            verdict = EngelVerdict(EngelKind.DEGREE if t.trivial else EngelKind.UNDECIDED, k)
            break
        if k >= 2:
            lhs = section(c.conj(b ** -lam), last)
            recursion_ok.append(equal(lhs, engel_commutator(ai, bl, k - 1), budget).trivial)
    details = {"i": i, "lambda": lam, "identity_ok": identity_ok, "recursion_ok": recursion_ok}
    return EngelReport(bl, [Probe(ai, verdict)], details)


# -- surveys --------------------------------------------------------------------

def enumerate_words(group: GroupDef, max_syllables: int) -> list[Word]:
    """Syllable-normal words with at most ``max_syllables`` syllables, shortest first."""
    names = [n for n in group.generator_names if group.generator(n).__class__ is not Induced]
    exps = {}
    for n in names:
        m = group.orders.get(n)
        exps[n] = list(range(1, m)) if m else [1, -1]
    out = [group.identity()]
    layer = [()]
    for _ in range(max_syllables):
        nxt = []
        for w in layer:
            for n in names:
                if w and w[-1][0] == n:
                    continue
                for e in exps[n]:
                    nxt.append(w + ((n, e),))
        out.extend(Word(group, w, normalized=True) for w in nxt)
        layer = nxt
    return out


def distinct_elements(words: Sequence[Word], budget: ClosureBudget | None = None,
                      signature_level: int = 4) -> list[Word]:
    """Keep the first word of each group element (certified equality; undecided pairs kept apart)."""
    buckets: dict = {}
    out = []
    for w in words:
        sig = w.group.level_perm(w.letters, w.tree, signature_level)
        reps = buckets.setdefault(sig, [])
        if any(equal(w, r, budget).trivial for r in reps):
            continue
        reps.append(w)
        out.append(w)
    return out


def left_engel_survey(group: GroupDef, word_length: int = 3, max_k: int = 8,
                      candidates: Sequence[Word] | None = None,
                      budget: ClosureBudget | None = None,
                      order_policy: OrderPolicy | None = None,
                      stop_at_witness: bool = False) -> list[EngelReport]:
    """Probe every candidate ``x`` against every ``g`` of bounded length.

    Each report records the order of ``x`` and, per ``g``, whether
    ``[g,_k x]`` vanished (exact) or survived to ``max_k`` (bounded evidence).
    Membership in the left Engel set is never certified by a survey.
    """
    elements = distinct_elements(enumerate_words(group, word_length), budget)
    probes_pool = [w for w in elements if not is_trivial(w, budget).trivial]
    if candidates is None:
        candidates = probes_pool
    policy = order_policy or OrderPolicy(max_level=12)
    reports = []
    for x in candidates:
        ox = order(x, policy)
        if ox.is_finite and ox.certified:
            cls = "identity" if ox.m == 1 else "involution" if ox.m == 2 else "order>2"
        elif ox.kind.value == "infinite":
            cls = "infinite"
        else:
            cls = "unknown"
        probes = []
        for g in probes_pool:
            verdict = engel_degree(g, x, max_k, budget)
            probes.append(Probe(g, verdict))
            if stop_at_witness and verdict.kind is EngelKind.SURVIVES:
                break
        reports.append(EngelReport(x, probes, {"order": ox, "class": cls}))
    return reports
