"""Named groups and elements: Grigorchuk, GGS, Hanoi, finitary elements,
truncated Sylow pro-p groups and the iterated-wreath infinite-order element."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .autom import GroupDef, LabelFn, Permutation, Recursive, Word
from .tree import DegreeSequence, Vertex, check_vertex, level_vertices

GROUP_SIZE_CAP = 1_000_000


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, math.isqrt(p) + 1))


def _prime_factors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class GGSVector:
    """Defining vector ``e = (e_1, ..., e_{p-1})`` of a GGS generator, residues mod ``p``."""

    p: int
    e: tuple[int, ...]

    def __post_init__(self):
        p = int(self.p)
        if p < 3 or not _is_prime(p):
            raise ValueError(f"GGS vectors need an odd prime, got {p}")
        e = tuple(int(x) % p for x in self.e)
        if len(e) != p - 1:
            raise ValueError(f"a GGS vector for p={p} has {p - 1} entries, got {len(e)}")
        if not any(e):
            raise ValueError("the zero vector does not define a GGS group")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)

    @property
    def symmetric(self) -> bool:
        return all(self.e[i] == self.e[-1 - i] for i in range(len(self.e)))

    @property
    def constant(self) -> bool:
        return len(set(self.e)) == 1

    @property
    def periodic(self) -> bool:
        return sum(self.e) % self.p == 0

    def entry(self, i: int) -> int:
        """``e_i`` with 1-based ``i``."""
        return self.e[i - 1]

    def __str__(self):
        return f"({', '.join(map(str, self.e))}) mod {self.p}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: GroupDef
    provenance: str


# -- declared orders ------------------------------------------------------------

def verify_declared_orders(group: GroupDef) -> dict[str, bool]:
    """Check every declared generator order with the word problem.

    The check runs in a copy of the group without declared orders, so that
    ``g^m`` is not collapsed syntactically: ``g^m`` must be certified trivial
    and ``g^(m/r)`` certified non-trivial for every prime ``r | m``.
    """
    from .wordprob import is_trivial

    plain = GroupDef(group.tree, {n: group.generator(n) for n in group.generator_names}, name=group.name)
    out = {}
    for gname, m in group.orders.items():
        g = plain.gen(gname)
        ok = is_trivial(g ** m).trivial
        for r in _prime_factors(m):
            ok = ok and is_trivial(g ** (m // r)).nontrivial
        out[gname] = ok
    return out


def _checked(group: GroupDef) -> GroupDef:
    bad = [k for k, ok in verify_declared_orders(group).items() if not ok]
    if bad:
        raise ValueError(f"{group.name}: declared orders of {bad} do not hold")
    return group


def _rooted_cycle(d: int) -> Permutation:
    return Permutation(tuple(list(range(2, d + 1)) + [1]))


# -- recursive groups -----------------------------------------------------------

GRIGORCHUK_NOTE = "standard definition from the literature (a rooted (1 2), b=(a,c), c=(a,d), d=(1,b))"


def grigorchuk() -> GroupDef:
    swap = Permutation((2, 1))
    one = Permutation.identity(2)
    gens = {
        "a": Recursive(swap),
        "b": Recursive(one, ("a", "c")),
        "c": Recursive(one, ("a", "d")),
        "d": Recursive(one, ("1", "b")),
    }
    g = GroupDef(2, gens, {k: 2 for k in gens}, name="grigorchuk", provenance=GRIGORCHUK_NOTE)
    return _checked(g)


def ggs(p: int, vectors: Sequence[GGSVector | Sequence[int]]) -> GroupDef:
    """Multi-GGS group: rooted ``a = (1 2 ... p)`` and one ``b`` per defining vector,
    ``b = (a^{e_1}, ..., a^{e_{p-1}}, b)``."""
    vecs = [v if isinstance(v, GGSVector) else GGSVector(p, tuple(v)) for v in vectors]
    if not vecs:
        raise ValueError("at least one defining vector is required")
    if any(v.p != p for v in vecs):
        raise ValueError("all defining vectors must use the same prime")
    names = ["b"] if len(vecs) == 1 else [f"b{i + 1}" for i in range(len(vecs))]
    gens: dict = {"a": Recursive(_rooted_cycle(p))}
    for name, v in zip(names, vecs):
        secs = tuple((("a", ei),) if ei else () for ei in v.e) + (((name, 1),),)
        gens[name] = Recursive(Permutation.identity(p), secs)
    label = f"ggs:{p}:" + ";".join(",".join(map(str, v.e)) for v in vecs)
    g = GroupDef(p, gens, {k: p for k in gens}, name=label,
                 provenance="GGS recursion b = (a^e1, ..., a^e(p-1), b)")
    g.ggs_vectors = tuple(vecs)
    return _checked(g)


def gupta_sidki(p: int = 3) -> GroupDef:
    e = [1, -1] + [0] * (p - 3)
    g = ggs(p, [GGSVector(p, tuple(e))])
    g.name = f"gupta-sidki:{p}"
    g.provenance = "GGS group with defining vector (1, -1, 0, ..., 0)"
    return g


def hanoi() -> GroupDef:
    gens = {
        "a": Recursive(Permutation((2, 1, 3)), ("1", "1", "a")),
        "b": Recursive(Permutation((3, 2, 1)), ("1", "b", "1")),
        "c": Recursive(Permutation((1, 3, 2)), ("c", "1", "1")),
    }
    g = GroupDef(3, gens, {k: 2 for k in gens}, name="hanoi",
                 provenance="a=(1,1,a)(1 2), b=(1,b,1)(1 3), c=(c,1,1)(2 3)")
    return _checked(g)


# -- finitary elements ----------------------------------------------------------

def _finitary_fn(seq: DegreeSequence, labels: Mapping[Sequence[int], Permutation]) -> LabelFn:
    table: dict[Vertex, Permutation] = {}
    for v, lab in labels.items():
        v = check_vertex(seq, v)
        if lab.degree != seq.degree_at(len(v) + 1):
            raise ValueError(f"label at {list(v)} must have degree {seq.degree_at(len(v) + 1)}")
        if not lab.is_identity:
            table[v] = lab
    depth = max((len(v) + 1 for v in table), default=0)
    return LabelFn(table.get, depth)


def finitary_group(seq: DegreeSequence | int, elements: Mapping[str, Mapping[Sequence[int], Permutation]],
                   name: str | None = None) -> GroupDef:
    """Group generated by finitely many finitary automorphisms given by their labels."""
    seq = seq if isinstance(seq, DegreeSequence) else DegreeSequence.constant(seq)
    gens = {k: _finitary_fn(seq, labels) for k, labels in elements.items()}
    return GroupDef(seq, gens, name=name or "finitary", provenance="finitary automorphisms")


def finitary_element(seq: DegreeSequence | int, labels: Mapping[Sequence[int], Permutation],
                     name: str = "f") -> Word:
    """The automorphism with the given (finitely many) non-trivial labels."""
    return finitary_group(seq, {name: labels}).gen(name)


def p_finitary_element(p: int, powers: Mapping[Sequence[int], int], name: str = "f") -> Word:
    """Finitary automorphism of ``T_p`` whose labels are powers of ``(1 2 ... p)``."""
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    sigma = _rooted_cycle(p)
    return finitary_element(p, {v: sigma ** k for v, k in powers.items()}, name)


def iterated_wreath_infinite_order(seq: DegreeSequence | int,
                                   choices: Sequence[tuple[Permutation, Sequence[int]]],
                                   name: str = "f") -> Word:
    """The automorphism with label ``k_{n+1}`` at ``v_n`` (``v_0`` the root).

    ``choices[n-1] = (k_n, v_n)``: ``v_n`` lies on level ``n``, is a child of
    ``v_{n-1}``, and ``k_n`` moves its last coordinate.  All other labels are
    trivial.  The orbit of ``v_n`` then has length ``l_1 ... l_n`` where
    ``l_i`` is the length of the ``k_i``-cycle through the last coordinate of
    ``v_i``.  Only finitely many choices are given, so the element returned is
    the truncation with labels on levels ``< len(choices)``.
    """
    seq = seq if isinstance(seq, DegreeSequence) else DegreeSequence.constant(seq)
    if not choices:
        raise ValueError("at least one (k, v) choice is required")
    labels: dict = {}
    prev: Vertex = ()
    for n, (k, v) in enumerate(choices, start=1):
        v = check_vertex(seq, v)
        if len(v) != n:
            raise ValueError(f"v_{n} = {list(v)} is not on level {n}")
        if v[:-1] != prev:
            raise ValueError(f"v_{n} = {list(v)} is not a child of v_{n - 1} = {list(prev)}")
        if k.degree != seq.degree_at(n):
            raise ValueError(f"k_{n} must have degree {seq.degree_at(n)}")
        if k(v[-1]) == v[-1]:
            raise ValueError(f"k_{n} must move {v[-1]}")
        labels[prev] = k
        prev = v
    return finitary_element(seq, labels, name)


def chain_orbit_lengths(choices: Sequence[tuple[Permutation, Sequence[int]]]) -> list[int]:
    """Predicted orbit lengths ``l_1, l_1 l_2, ...`` of ``v_1, v_2, ...``."""
    out = []
    acc = 1
    for k, v in choices:
        c = v[-1]
        ell = 1
        j = k(c)
        while j != c:
            j = k(j)
            ell += 1
        acc *= ell
        out.append(acc)
    return out


def truncated_sylow(p: int, depth: int) -> GroupDef:
    """Generators of the iterated wreath product ``C_p wr ... wr C_p`` (``depth`` factors).

    Generator ``s{k}`` is the finitary element with label ``(1 2 ... p)`` at
    the vertex ``(1, ..., 1)`` of level ``k``.
    """
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    exponent = (p ** depth - 1) // (p - 1)
    if exponent * math.log10(p) > math.log10(GROUP_SIZE_CAP):
        raise ValueError(f"|C_{p} wr ... | = {p}^{exponent} exceeds the size cap {GROUP_SIZE_CAP}")
    sigma = _rooted_cycle(p)
    elements = {f"s{k}": {(1,) * k: sigma} for k in range(depth)}
    g = finitary_group(p, elements, name=f"sylow:{p}:{depth}")
    g.orders.update({k: p for k in elements})
    g.provenance = "iterated wreath product of cyclic groups of order p, truncated"
    g.truncation_depth = depth
    return g


def enumerate_level_group(words: Sequence[Word], n: int, cap: int = GROUP_SIZE_CAP) -> set[tuple[int, ...]]:
    """All permutations of level ``n`` generated by the actions of ``words``."""
    gens = [w.group.level_perm(w.letters, w.tree, n) for w in words]
    if not gens:
        return set()
    identity = tuple(range(len(gens[0])))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[i] for i in p)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise ValueError(f"group exceeds the enumeration cap {cap}")
                    nxt.append(q)
        frontier = nxt
    return seen


# -- names ----------------------------------------------------------------------

CATALOG_NAMES = ("grigorchuk", "gupta-sidki:p", "ggs:p:e1,...,e(p-1)", "hanoi", "sylow:p:depth")


def from_name(spec: str) -> GroupDef:
    """Build a catalog group from names like ``hanoi``, ``gupta-sidki:5``,
    ``ggs:5:1,2,2,1`` or ``sylow:2:3``."""
    parts = spec.strip().lower().split(":")
    head = parts[0]
    try:
        if head == "grigorchuk" and len(parts) == 1:
            return grigorchuk()
        if head == "hanoi" and len(parts) == 1:
            return hanoi()
        if head == "gupta-sidki" and len(parts) <= 2:
            return gupta_sidki(int(parts[1]) if len(parts) == 2 else 3)
        if head == "ggs" and len(parts) >= 3:
            p = int(parts[1])
            vecs = [tuple(int(x) for x in chunk.split(",")) for chunk in parts[2:]]
            return ggs(p, vecs)
        if head == "sylow" and len(parts) == 3:
            return truncated_sylow(int(parts[1]), int(parts[2]))
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad catalog name {spec!r}: {exc}") from exc
    raise ValueError(f"unknown catalog name {spec!r}; known: {', '.join(CATALOG_NAMES)}")


def catalog_entries() -> list[CatalogEntry]:
    out = []
    for g in (grigorchuk(), gupta_sidki(3), hanoi(), truncated_sylow(2, 3)):
        out.append(CatalogEntry(g.name, g, g.provenance or ""))
    return out
