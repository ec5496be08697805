"""Finite regular wreath products ``C_q wr C_n`` and brute-force Engel checks.

An element is ``(b, t)`` = base vector ``b`` (residues mod ``q``) followed by
``x^t``, where the top generator ``x`` moves base coordinate ``i`` to
``i + 1`` under conjugation: ``(b^x)_i = b_{i-1}``.  Hence
``(b, t)(b', t') = (b + x^t b' x^-t, t + t')`` with
``(x^t b' x^-t)_i = b'_{i+t}``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .autom import Word, in_rigid_stabilizer, RistStatus
from .engel import EngelKind, EngelVerdict

ENUMERATION_CAP = 10_000_000


@dataclass(frozen=True)
class CyclicWreath:
    q: int
    n: int

    def __post_init__(self):
        if self.q < 2 or self.n < 2:
            raise ValueError("both cyclic factors need order >= 2")

    @property
    def order(self) -> int:
        return self.q ** self.n * self.n

    def element(self, base: Sequence[int], top: int = 0) -> WreathElement:
        if len(base) != self.n:
            raise ValueError(f"base needs {self.n} coordinates")
        return WreathElement(self, tuple(int(b) % self.q for b in base), int(top) % self.n)

    def identity(self) -> WreathElement:
        return self.element((0,) * self.n, 0)

    def top(self, t: int = 1) -> WreathElement:
        """``x^t`` for the top generator ``x``."""
        return self.element((0,) * self.n, t)

    def base_element(self, i: int = 0, y: int = 1) -> WreathElement:
        """``y`` in coordinate ``i`` (0-based), identity elsewhere."""
        b = [0] * self.n
        b[i] = y
        return self.element(b, 0)

    def elements(self) -> Iterator[WreathElement]:
        if self.order > ENUMERATION_CAP:
            raise ValueError(f"|W| = {self.order} exceeds the enumeration cap {ENUMERATION_CAP}")
        for t in range(self.n):
            for b in itertools.product(range(self.q), repeat=self.n):
                yield WreathElement(self, b, t)


@dataclass(frozen=True)
class WreathElement:
    W: CyclicWreath = field(repr=False)
    base: tuple[int, ...]
    top: int

    def __mul__(self, other: WreathElement) -> WreathElement:
        return wmul(self, other)

    def inverse(self) -> WreathElement:
        return winv(self)

    @property
    def is_identity(self) -> bool:
        return self.top == 0 and not any(self.base)

    def __str__(self):
        return f"({', '.join(map(str, self.base))}) x^{self.top}"


def _same(e1: WreathElement, e2: WreathElement):
    if e1.W != e2.W:
        raise ValueError("elements of different wreath products")


def wmul(e1: WreathElement, e2: WreathElement) -> WreathElement:
    _same(e1, e2)
    q, n = e1.W.q, e1.W.n
    t = e1.top
    base = tuple((e1.base[i] + e2.base[(i + t) % n]) % q for i in range(n))
    return WreathElement(e1.W, base, (t + e2.top) % n)


def winv(e: WreathElement) -> WreathElement:
    q, n = e.W.q, e.W.n
    t = e.top
    base = tuple((-e.base[(j - t) % n]) % q for j in range(n))
    return WreathElement(e.W, base, (-t) % n)


def wcomm(e1: WreathElement, e2: WreathElement) -> WreathElement:
    """``[e1, e2] = e1^-1 e2^-1 e1 e2``."""
    _same(e1, e2)
    return wmul(wmul(winv(e1), winv(e2)), wmul(e1, e2))


def element_order(e: WreathElement) -> int:
    k = 1
    acc = e
    while not acc.is_identity:
        acc = wmul(acc, e)
        k += 1
    return k


def brute_engel_degree(W: CyclicWreath, x: WreathElement, g: WreathElement,
                       max_n: Optional[int] = None) -> EngelVerdict:
    """Least ``n`` with ``[g,_n x] = 1`` by direct iteration.

    Without ``max_n`` the iteration runs until the commutator sequence
    repeats; a repeat without reaching the identity proves it never vanishes
    and is reported as ``SURVIVES`` with ``never=True``.
    """
    c = g
    seen = set()
    k = 0
    while True:
        if c.is_identity:
            return EngelVerdict(EngelKind.DEGREE, k)
        if max_n is not None and k >= max_n:
            return EngelVerdict(EngelKind.SURVIVES, k)
        if max_n is None:
            if c in seen:
                return EngelVerdict(EngelKind.SURVIVES, k, never=True)
            seen.add(c)
        c = wcomm(c, x)
        k += 1


@dataclass(frozen=True)
class LeftEngelResult:
    is_left_engel: bool
    witness: Optional[WreathElement] = None
    max_degree: int = 0

    def __bool__(self):
        return self.is_left_engel


def brute_is_left_engel(W: CyclicWreath, x: WreathElement, max_n: Optional[int] = None) -> LeftEngelResult:
    """Exhaustively test whether ``x`` is a left Engel element of ``W``."""
    max_deg = 0
    for g in W.elements():
        v = brute_engel_degree(W, x, g, max_n)
        if v.kind is not EngelKind.DEGREE:
            return LeftEngelResult(False, g, max_deg)
        max_deg = max(max_deg, v.n)
    return LeftEngelResult(True, None, max_deg)


def verify_order_growth(W: CyclicWreath, y: int = 1) -> bool:
    """``|x g| > |x|`` for the top generator ``x`` and ``g = (y, 1, ..., 1)``."""
    if y % W.q == 0:
        raise ValueError("y must be non-trivial")
    x = W.top()
    return element_order(wmul(x, W.base_element(0, y))) > element_order(x)


@dataclass(frozen=True)
class EmbeddingReport:
    ok: bool
    group_order: int
    expected: int
    m: int
    g_order: int


def verify_wreath_embedding(f: Word, g: Word, v: Sequence[int], depth: int) -> EmbeddingReport:
    """Check ``|<f, g>| = |g|^m * m`` by enumerating the action on level ``depth``.

    Preconditions (all certified): ``f`` has order ``m`` and the ``f``-orbit
    of ``v`` has length ``m``; ``g`` lies in the rigid stabilizer of ``v``;
    ``f`` and ``g`` are finitary with all labels above ``depth``, so the
    action on level ``depth`` is faithful on ``<f, g>``.
    """
    from .catalog import enumerate_level_group
    from .orbitlab import orbit
    from .wordprob import finitary_depth, order

    for name, w in (("f", f), ("g", g)):
        d = finitary_depth(w)
        if d is None or d > depth:
            raise ValueError(f"{name} is not finitary within depth {depth}; truncation is not faithful")
    of = order(f)
    if not (of.is_finite and of.certified):
        raise ValueError("order of f is not certified")
    m = of.m
    if orbit(f, v).length != m:
        raise ValueError(f"the f-orbit of {list(v)} does not have length |f| = {m}")
    if in_rigid_stabilizer(g, v).status is not RistStatus.YES_CERTIFIED:
        raise ValueError(f"g is not certified to lie in the rigid stabilizer of {list(v)}")
    og = order(g)
    if not (og.is_finite and og.certified):
        raise ValueError("order of g is not certified")
    size = len(enumerate_level_group([f, g], depth))
    expected = og.m ** m * m
    return EmbeddingReport(size == expected, size, expected, m, og.m)


@dataclass(frozen=True)
class CommBoundReport:
    ok: bool
    positions_ok: bool
    nonvanishing: bool
    degree: EngelVerdict
    trace: tuple[tuple[int, ...], ...]

    def __bool__(self):
        return self.ok


def comm_lower_bound_check(W: CyclicWreath, w: WreathElement, D_spec: Sequence[int] | None = None,
                           max_d: Optional[int] = None) -> CommBoundReport:
    """Engel degree of ``w`` on the base subgroup ``D`` is at least ``n``.

    ``D_spec[i]`` generates coordinate ``i`` of ``D`` (0 = trivial factor);
    the default is the full base group.  With ``g`` the generator of the first
    non-trivial factor placed in coordinate ``j`` and ``t`` the top of ``w``,
    ``[g,_i w]`` is supported on coordinates ``j, j+t, ..., j+it``, equals
    ``(-1)^i y`` at ``j`` and ``y`` at ``j+it``; in particular
    ``[g,_{n-1} w] != 1``.
    """
    n, q = W.n, W.q
    if math.gcd(w.top, n) != 1:
        raise ValueError("the top of w must generate the top group")
    D = tuple(D_spec) if D_spec is not None else (1,) * n
    if len(D) != n or not any(d % q for d in D):
        raise ValueError("D_spec needs n entries, not all trivial")
    j = next(i for i, d in enumerate(D) if d % q)
    y = D[j] % q
    g = W.base_element(j, y)
    t = w.top
    c = g
    positions_ok = True
    trace = []
    for i in range(1, n):
        c = wcomm(c, w)
        trace.append(c.base)
        allowed = {(j + s * t) % n for s in range(i + 1)}
        if c.top != 0 or any(c.base[k] for k in range(n) if k not in allowed):
            positions_ok = False
        if c.base[(j + i * t) % n] != y or c.base[j] != ((-1) ** i * y) % q:
            positions_ok = False
    nonvanishing = not c.is_identity
    degree = brute_engel_degree(W, w, g, max_d)
    deg_ok = degree.kind is EngelKind.SURVIVES or degree.n >= n
    return CommBoundReport(positions_ok and nonvanishing and deg_ok, positions_ok, nonvanishing, degree, tuple(trace))


@dataclass(frozen=True)
class CoefficientTable:
    n: int
    rows: tuple[tuple[int, ...], ...]
    claim_indices: tuple[Optional[int], ...]

    @property
    def claim_holds(self) -> bool:
        return all(i is not None for i in self.claim_indices)


def engel_coefficients(n: int, k_max: int) -> CoefficientTable:
    """Exponent table ``m_{k,i}`` (``i = 1..n``) of the Engel recursion.

    ``m_{0,1} = 1``, ``m_{0,i} = 0`` otherwise, ``m_{k,i} = m_{k-1,i-1} - m_{k-1,i}``
    with index 0 read as ``n``.  ``claim_indices[k]`` is the least ``i`` with
    ``m_{k,i} != m_{k,i-1}`` (``None`` if every entry of row ``k`` is equal).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    row = [1] + [0] * (n - 1)
    rows = [tuple(row)]
    for _ in range(k_max):
        row = [row[i - 1] - row[i] for i in range(n)]  # row[-1] is m_{k-1,n}
        rows.append(tuple(row))
    claims = []
    for r in rows:
        claims.append(next((i + 1 for i in range(n) if r[i] != r[i - 1]), None))
    return CoefficientTable(n, tuple(rows), tuple(claims))
