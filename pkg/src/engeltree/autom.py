"""Tree automorphisms as words over self-similar generators.

Composition is left to right: ``f * g`` means "apply f, then g", so that
sections obey ``(fg)_v = f_v g_{f(v)}``.  Generators come in two flavours:

* :class:`Recursive` -- a root permutation plus one section word per child
  (wreath recursion, finite state);
* :class:`LabelFn` -- a computable map from vertices to labels.  Its section at
  a vertex ``u`` is again a label function, addressed by the letter key
  ``"name@u1.u2..."``.

Words are kept in syllable normal form: adjacent letters with the same key are
merged and exponents are reduced modulo declared generator orders.  No other
relation is applied here; deciding equality is the job of :mod:`wordprob`.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .tree import DegreeSequence, Vertex, check_vertex, is_descendant, level_vertices, vertex_at

Letter = tuple[str, int]
Letters = tuple[Letter, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_CACHE_LIMIT = 2_000_000


class GroupMismatchError(ValueError):
    pass


class NotInStabilizerError(ValueError):
    pass


class WordSyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at column {pos + 1})")
        self.pos = pos


@dataclass(frozen=True)
class Permutation:
    """Permutation of ``1..d`` stored by its image list.

    Products read left to right: ``(p * q)(i) == q(p(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(1, d + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 1 <= c <= d:
                    raise ValueError(f"point {c} out of range 1..{d}")
                if c in seen:
                    raise ValueError(f"point {c} appears twice in cycle notation")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, d: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4 5)"``; ``"()"`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+([\s,]+\d+)*)?\s*\)\s*)+", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [re.findall(r"\d+", c) for c in re.findall(r"\(([^)]*)\)", text)]
        return cls.from_cycles(d, [c for c in cycles if c])

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k) % self.order):
            out = out * base
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        seen: set[int] = set()
        out = []
        for i in range(1, self.degree + 1):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i - 1]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    @property
    def order(self) -> int:
        return math.lcm(*[len(c) for c in self.cycles()]) if self.cycles() else 1

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self})"


@dataclass(frozen=True)
class Recursive:
    """Generator ``(s_1, ..., s_d) perm``; ``sections=None`` makes it rooted.

    Section entries may be letter tuples or word strings over the group's
    generator names (parsed when the :class:`GroupDef` is built).
    """

    perm: Permutation
    sections: Optional[tuple] = None


@dataclass(frozen=True, eq=False)
class LabelFn:
    """Generator given by its portrait.

    ``fn(v)`` returns the label at ``v`` (``None`` means identity).  When
    ``depth`` is set, all labels on levels ``>= depth`` are promised trivial,
    which makes every word problem involving the generator certifiable.
    """

    fn: Callable[[Vertex], Optional[Permutation]]
    depth: Optional[int] = None


@dataclass(frozen=True)
class Induced:
    """Generator acting on one fixed tree: root permutation plus section words.

    The sections are letter tuples over the other generators of the group and
    act on ``tree.shift(1)``.  Used for automorphisms induced on reduced
    trees, whose root degree may differ from the group's tree.
    """

    perm: Permutation
    sections: tuple
    tree: DegreeSequence


Generator = Union[Recursive, LabelFn, Induced]


def split_key(key: str) -> tuple[str, Vertex]:
    if "@" not in key:
        return key, ()
    base, path = key.split("@", 1)
    return base, tuple(int(c) for c in path.split(".")) if path else ()


def _join_key(base: str, path: Vertex) -> str:
    return f"{base}@{'.'.join(map(str, path))}" if path else base


def reduce_letters(letters: Iterable[Letter], orders: Mapping[str, int] | None = None) -> Letters:
    """Syllable normal form: merge equal neighbours, reduce exponents mod declared orders."""
    orders = orders or {}
    stack: list[list] = []
    for key, e in letters:
        if stack and stack[-1][0] == key:
            e += stack[-1][1]
            stack.pop()
        m = orders.get(key)
        if m:
            e %= m
        if e:
            stack.append([key, e])
    return tuple((k, e) for k, e in stack)


def invert_letters(letters: Letters, orders: Mapping[str, int] | None = None) -> Letters:
    return reduce_letters(((k, -e) for k, e in reversed(letters)), orders)


class GroupDef:
    """A finitely generated group of automorphisms of a spherically homogeneous tree.

    Holds the generator definitions plus memo tables for sections and level
    actions; the tables are pure caches keyed by normal forms.
    """

    def __init__(
        self,
        tree: DegreeSequence | int,
        generators: Mapping[str, Generator],
        orders: Mapping[str, int] | None = None,
        name: str | None = None,
        provenance: str | None = None,
        contracting: bool = True,
    ):
        self.tree = tree if isinstance(tree, DegreeSequence) else DegreeSequence.constant(int(tree))
        self.name = name
        self.provenance = provenance
        self.contracting = contracting
        self.orders: dict[str, int] = {}
        self._gens: dict[str, Generator] = {}
        self._gexp: dict = {}
        self._expand_cache: dict = {}
        self._lp_cache: dict = {}
        self._closure_cache: dict = {}

        for gname in generators:
            self._check_name(gname)
        self._gens = dict(generators)
        d = self.tree.degree_at(1)
        for gname, g in list(self._gens.items()):
            if isinstance(g, Recursive):
                if not self.tree.is_constant:
                    raise ValueError(
                        f"generator {gname!r}: recursive generators need a constant-degree tree"
                    )
                if g.perm.degree != d:
                    raise ValueError(f"generator {gname!r}: root permutation has degree {g.perm.degree}, tree has {d}")
                if g.sections is None:
                    secs = ((),) * d
                else:
                    if len(g.sections) != d:
                        raise ValueError(f"generator {gname!r}: expected {d} sections, got {len(g.sections)}")
                    secs = tuple(self._section_letters(gname, s) for s in g.sections)
                self._gens[gname] = Recursive(g.perm, secs)
            elif not isinstance(g, LabelFn):
                raise TypeError(f"generator {gname!r}: expected Recursive or LabelFn, got {type(g).__name__}")
            elif g.depth is not None and g.depth < 0:
                raise ValueError(f"generator {gname!r}: label depth must be >= 0")
        for gname, m in (orders or {}).items():
            if gname not in self._gens:
                raise ValueError(f"order declared for unknown generator {gname!r}")
            if int(m) < 1:
                raise ValueError(f"declared order of {gname!r} must be positive")
            self.orders[gname] = int(m)
        # sections were parsed before orders were known
        for gname, g in list(self._gens.items()):
            if isinstance(g, Recursive):
                self._gens[gname] = Recursive(g.perm, tuple(reduce_letters(s, self.orders) for s in g.sections))

    def _check_name(self, gname: str):
        if not isinstance(gname, str) or not _NAME_RE.match(gname):
            raise ValueError(f"invalid generator name {gname!r}")

    def _section_letters(self, owner: str, s) -> Letters:
        if isinstance(s, Word):
            letters = s.letters
        elif isinstance(s, str):
            letters = parse_word(self, s).letters
        else:
            letters = tuple((str(k), int(e)) for k, e in s)
        for k, _ in letters:
            if k not in self._gens:
                raise ValueError(f"generator {owner!r}: section refers to undeclared generator {k!r}")
        return letters

    # -- generator registry -------------------------------------------------

    @property
    def generator_names(self) -> list[str]:
        return list(self._gens)

    def generator(self, name: str) -> Generator:
        return self._gens[name]

    def add_label_generator(self, name: str, gen: LabelFn) -> Word:
        """Register an extra label-function generator and return it as a word."""
        self._check_name(name)
        if name in self._gens:
            raise ValueError(f"generator {name!r} already exists")
        if not isinstance(gen, LabelFn):
            raise TypeError("only label-function generators can be added after construction")
        self._gens[name] = gen
        return self.gen(name)

    def add_induced_generator(self, name: str, gen: Induced) -> Word:
        """Register an :class:`Induced` generator and return it as a word on ``gen.tree``."""
        self._check_name(name)
        if name in self._gens:
            raise ValueError(f"generator {name!r} already exists")
        d = gen.tree.degree_at(1)
        if gen.perm.degree != d or len(gen.sections) != d:
            raise ValueError(f"induced generator {name!r} needs degree-{d} data")
        secs = tuple(self._section_letters(name, s) for s in gen.sections)
        self._gens[name] = Induced(gen.perm, tuple(self.reduce(s) for s in secs), gen.tree)
        return Word(self, ((name, 1),), gen.tree)

    def fresh_name(self, stem: str) -> str:
        i = 0
        while f"{stem}{i}" in self._gens:
            i += 1
        return f"{stem}{i}"

    def gen(self, name: str) -> Word:
        if name not in self._gens:
            raise KeyError(f"unknown generator {name!r}")
        g = self._gens[name]
        return Word(self, ((name, 1),), g.tree if isinstance(g, Induced) else None)

    def gens(self) -> list[Word]:
        return [self.gen(n) for n in self._gens]

    def identity(self, tree: DegreeSequence | None = None) -> Word:
        return Word(self, (), tree)

    def word(self, text: str) -> Word:
        return parse_word(self, text)

    def order_of(self, key: str) -> Optional[int]:
        return self.orders.get(key)

    def reduce(self, letters: Iterable[Letter]) -> Letters:
        return reduce_letters(letters, self.orders)

    def has_unbounded_labels(self, letters: Letters) -> bool:
        """True when some letter is a label function without a depth bound."""
        for k, _ in letters:
            g = self._gens[split_key(k)[0]]
            if isinstance(g, LabelFn) and g.depth is None:
                return True
        return False

    def __repr__(self):
        label = self.name or "GroupDef"
        return f"<{label} on {self.tree}: {', '.join(self._gens)}>"

    # -- section machinery ----------------------------------------------------

    def _gen_expand(self, key: str, positive: bool, tree: DegreeSequence):
        ck = (key, positive, tree)
        hit = self._gexp.get(ck)
        if hit is not None:
            return hit
        d = tree.degree_at(1)
        base, path = split_key(key)
        g = self._gens.get(base)
        if g is None:
            raise KeyError(f"unknown generator {base!r}")
        if isinstance(g, Recursive):
            if path:
                raise KeyError(f"recursive generator {base!r} cannot carry a vertex suffix")
            sigma, ch = g.perm.images, g.sections
        elif isinstance(g, Induced):
            if path or tree != g.tree:
                raise ValueError(f"induced generator {base!r} only acts on {g.tree}")
            sigma, ch = g.perm.images, g.sections
        else:
            lab = g.fn(path)
            if lab is None:
                lab = Permutation.identity(d)
            if not isinstance(lab, Permutation) or lab.degree != d:
                raise ValueError(f"label of {base!r} at {list(path)} must be a permutation of degree {d}")
            sigma = lab.images
            remaining = None if g.depth is None else g.depth - len(path)
            if remaining is not None and remaining <= 0:
                sigma = tuple(range(1, d + 1))
            if remaining is None or remaining > 1:
                ch = tuple(((_join_key(base, path + (i,)), 1),) for i in range(1, d + 1))
            else:
                ch = ((),) * d
        if len(sigma) != d:
            raise ValueError(f"generator {base!r} has root degree {len(sigma)}, tree has {d}")
        if not positive:
            inv = [0] * d
            for i, j in enumerate(sigma, start=1):
                inv[j - 1] = i
            ch = tuple(invert_letters(ch[inv[i] - 1], self.orders) for i in range(d))
            sigma = tuple(inv)
        res = (tuple(sigma), tuple(ch))
        self._gexp[ck] = res
        return res

    def expand(self, letters: Letters, tree: DegreeSequence):
        """Return ``(root permutation images, child section letters)`` of a normal-form word."""
        key = (letters, tree)
        hit = self._expand_cache.get(key)
        if hit is not None:
            return hit
        d = tree.degree_at(1)
        if not letters:
            res = (tuple(range(1, d + 1)), ((),) * d)
        else:
            perm = list(range(1, d + 1))
            secs: list[list] = [[] for _ in range(d)]
            for k, e in letters:
                sigma, ch = self._gen_expand(k, e > 0, tree)
                for _ in range(abs(e)):
                    for i in range(d):
                        c = ch[perm[i] - 1]
                        if c:
                            secs[i].extend(c)
                    perm = [sigma[p - 1] for p in perm]
            res = (tuple(perm), tuple(reduce_letters(s, self.orders) for s in secs))
        if len(self._expand_cache) > _CACHE_LIMIT:
            self._expand_cache.clear()
        self._expand_cache[key] = res
        return res

    def level_perm(self, letters: Letters, tree: DegreeSequence, n: int) -> tuple[int, ...]:
        """Action on level ``n`` as a tuple of 0-based lexicographic indices."""
        if n == 0:
            return (0,)
        key = (letters, tree, n)
        hit = self._lp_cache.get(key)
        if hit is not None:
            return hit
        if not letters:
            res = tuple(range(tree.level_size(n)))
        else:
            perm, ch = self.expand(letters, tree)
            ctree = tree.shift(1)
            sub_size = ctree.level_size(n - 1)
            out = [0] * (len(perm) * sub_size)
            for i, c in enumerate(ch):
                sub = self.level_perm(c, ctree, n - 1)
                base = (perm[i] - 1) * sub_size
                off = i * sub_size
                for r in range(sub_size):
                    out[off + r] = base + sub[r]
            res = tuple(out)
        if len(self._lp_cache) > _CACHE_LIMIT // 10:
            self._lp_cache.clear()
        self._lp_cache[key] = res
        return res


class Word:
    """Group element as a syllable-normalized word over a :class:`GroupDef`.

    ``tree`` is the tree the element acts on (the group's tree shifted to the
    level at which the word arose as a section).  Equality is syntactic; use
    :func:`engeltree.wordprob.equal` for equality in the group.
    """

    __slots__ = ("group", "letters", "tree", "_hash")

    def __init__(self, group: GroupDef, letters: Iterable[Letter] = (), tree: DegreeSequence | None = None,
                 *, normalized: bool = False):
        self.group = group
        self.letters: Letters = tuple(letters) if normalized else group.reduce(letters)
        self.tree = group.tree if tree is None else tree
        self._hash = None

    def _check(self, other: Word):
        if not isinstance(other, Word):
            raise TypeError(f"expected Word, got {type(other).__name__}")
        if other.group is not self.group:
            raise GroupMismatchError("words belong to different group definitions")
        if other.tree != self.tree:
            raise GroupMismatchError("words act on different trees")

    def __mul__(self, other: Word) -> Word:
        self._check(other)
        return Word(self.group, self.letters + other.letters, self.tree)

    def inverse(self) -> Word:
        return Word(self.group, invert_letters(self.letters, self.group.orders), self.tree, normalized=True)

    def __invert__(self) -> Word:
        return self.inverse()

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        return Word(self.group, base.letters * abs(k), self.tree)

    def conj(self, g: Word) -> Word:
        """``g^-1 self g``."""
        return g.inverse() * self * g

    def comm(self, g: Word) -> Word:
        """``self^-1 g^-1 self g``."""
        return self.inverse() * g.inverse() * self * g

    @property
    def is_identity(self) -> bool:
        """Syntactic identity; the element may be trivial without this being true."""
        return not self.letters

    def expand(self):
        perm, ch = self.group.expand(self.letters, self.tree)
        ctree = self.tree.shift(1)
        return Permutation(perm), [Word(self.group, c, ctree, normalized=True) for c in ch]

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.group is other.group and self.letters == other.letters and self.tree == other.tree

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.group), self.letters, self.tree))
        return self._hash

    def __str__(self):
        if not self.letters:
            return "1"
        names = self.group.generator_names
        singles = {n for n in names if len(n) == 1}
        # concatenation is safe unless some longer name is spelled by single-letter names
        clash = any(len(n) > 1 and all(c in singles for c in n) for n in names)
        sep = "" if not clash and all(k in singles for k, _ in self.letters) else " "
        return sep.join(k if e == 1 else f"{k}^{e}" for k, e in self.letters)

    def __repr__(self):
        return f"Word({self})"

    # thin conveniences over the module functions
    def apply(self, v: Sequence[int]) -> Vertex:
        return apply(self, v)

    def label(self, v: Sequence[int] = ()) -> Permutation:
        return label(self, v)

    def section(self, v: Sequence[int]) -> Word:
        return section(self, v)


# -- parsing ------------------------------------------------------------------

def parse_word(group: GroupDef, text: str, tree: DegreeSequence | None = None) -> Word:
    """Parse words like ``"ab^-1"``, ``"(ab)^3"``, ``"[b, a, a]"`` or ``"1"``.

    Generator names are matched greedily (longest first).  ``[u, v, w]`` is the
    left-normed commutator ``[[u, v], w]``.
    """
    names = sorted(group.generator_names, key=len, reverse=True)
    orders = group.orders
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and (text[pos].isspace() or text[pos] in "*."):
            pos += 1

    def integer() -> int:
        nonlocal pos
        skip()
        m = re.compile(r"\(?\s*(-?\d+)\s*\)?").match(text, pos)
        if not m:
            raise WordSyntaxError("expected an integer exponent", pos)
        pos = m.end()
        return int(m.group(1))

    def expr(stop: str) -> Letters:
        nonlocal pos
        out: list[Letter] = []
        while True:
            skip()
            if pos >= n or text[pos] in stop:
                return reduce_letters(out, orders)
            out.extend(term())

    def term() -> Letters:
        nonlocal pos
        letters = atom()
        skip()
        while pos < n and text[pos] == "^":
            pos += 1
            k = integer()
            base = letters if k >= 0 else invert_letters(letters, orders)
            letters = reduce_letters(base * abs(k), orders)
            skip()
        return letters

    def atom() -> Letters:
        nonlocal pos
        skip()
        if pos >= n:
            raise WordSyntaxError("unexpected end of word", pos)
        ch = text[pos]
        if ch == "(":
            pos += 1
            inner = expr(")")
            if pos >= n or text[pos] != ")":
                raise WordSyntaxError("missing ')'", pos)
            pos += 1
            return inner
        if ch == "[":
            pos += 1
            parts = [expr(",]")]
            while pos < n and text[pos] == ",":
                pos += 1
                parts.append(expr(",]"))
            if pos >= n or text[pos] != "]":
                raise WordSyntaxError("missing ']'", pos)
            pos += 1
            if len(parts) < 2:
                raise WordSyntaxError("a commutator needs at least two entries", pos)
            acc = parts[0]
            for p in parts[1:]:
                acc = reduce_letters(invert_letters(acc, orders) + invert_letters(p, orders) + acc + p, orders)
            return acc
        if ch == "1" and not (pos + 1 < n and text[pos + 1].isalnum()):
            pos += 1
            return ()
        for name in names:
            if text.startswith(name, pos):
                pos += len(name)
                return ((name, 1),)
        raise WordSyntaxError(f"unknown generator at {text[pos:pos + 8]!r}", pos)

    letters = expr("")
    if pos != n:
        raise WordSyntaxError("unexpected character", pos)
    return Word(group, letters, tree)


# -- operations ---------------------------------------------------------------

def multiply(w1: Word, w2: Word) -> Word:
    return w1 * w2


def inverse(w: Word) -> Word:
    return w.inverse()


def conjugate(w: Word, g: Word) -> Word:
    """``w^g = g^-1 w g``."""
    return w.conj(g)


def commutator(w: Word, g: Word) -> Word:
    """``[w, g] = w^-1 g^-1 w g``."""
    return w.comm(g)


def apply(w: Word, v: Sequence[int]) -> Vertex:
    """Image of the vertex ``v`` under ``w``."""
    v = check_vertex(w.tree, v)
    group, letters, tree = w.group, w.letters, w.tree
    out = []
    for c in v:
        if not letters:
            out.append(c)
            tree = tree.shift(1)
            continue
        perm, ch = group.expand(letters, tree)
        out.append(perm[c - 1])
        letters = ch[c - 1]
        tree = tree.shift(1)
    return tuple(out)


def section(w: Word, v: Sequence[int]) -> Word:
    """The section ``w_v`` as a word acting on the subtree below ``v``."""
    v = check_vertex(w.tree, v)
    group, letters, tree = w.group, w.letters, w.tree
    for c in v:
        if letters:
            letters = group.expand(letters, tree)[1][c - 1]
        tree = tree.shift(1)
    return Word(group, letters, tree, normalized=True)


def label(w: Word, v: Sequence[int] = ()) -> Permutation:
    """Permutation by which ``w`` maps the children of ``v`` to those of ``w(v)``."""
    s = section(w, v)
    return Permutation(s.group.expand(s.letters, s.tree)[0])


def portrait(w: Word, depth: int) -> dict[Vertex, Permutation]:
    """Labels of ``w`` at every vertex of level ``< depth``."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    out: dict[Vertex, Permutation] = {}
    frontier = [((), w.letters, w.tree)]
    for _ in range(depth):
        nxt = []
        for v, letters, tree in frontier:
            perm, ch = w.group.expand(letters, tree)
            out[v] = Permutation(perm)
            ctree = tree.shift(1)
            nxt.extend((v + (i,), c, ctree) for i, c in enumerate(ch, start=1))
        frontier = nxt
    return out


def level_permutation(w: Word, n: int) -> tuple[int, ...]:
    """Action of ``w`` on level ``n``, indices in lexicographic vertex order."""
    if n < 0:
        raise ValueError("level must be non-negative")
    return w.group.level_perm(w.letters, w.tree, n)


def stabilizes_level(w: Word, n: int) -> bool:
    if n < 0:
        raise ValueError("level must be non-negative")
    lp = level_permutation(w, n)
    return all(i == j for i, j in enumerate(lp))


def psi_n(w: Word, n: int = 1) -> list[Word]:
    """Sections at all level-``n`` vertices, for ``w`` in the level stabilizer."""
    if not stabilizes_level(w, n):
        raise NotInStabilizerError(f"not in St({n})")
    return [section(w, v) for v in level_vertices(w.tree, n)]


class RistStatus(enum.Enum):
    YES_CERTIFIED = "yes-certified"
    NO = "no"
    YES_UP_TO_DEPTH = "yes-up-to-depth"


@dataclass(frozen=True)
class RistVerdict:
    status: RistStatus
    witness: Optional[Vertex] = None

    def __bool__(self):
        return self.status is not RistStatus.NO


def in_rigid_stabilizer(w: Word, v: Sequence[int], depth: int = 6, budget=None) -> RistVerdict:
    """Does ``w`` act trivially outside the subtree hanging from ``v``?

    ``No`` comes with a vertex outside that subtree carrying a non-trivial
    label.  ``Yes`` is certified when every level-``|v|`` section other than
    the one at ``v`` is certified trivial by the word problem.
    """
    from .wordprob import Triviality, is_trivial

    v = check_vertex(w.tree, v)
    n = len(v)
    # labels above level n must all be trivial
    for lev in range(n):
        for u in level_vertices(w.tree, lev):
            if not label(w, u).is_identity:
                return RistVerdict(RistStatus.NO, u)
    undecided = False
    for u in level_vertices(w.tree, n):
        if u == v:
            continue
        verdict = is_trivial(section(w, u), budget)
        if verdict.status is Triviality.NONTRIVIAL:
            return RistVerdict(RistStatus.NO, u + verdict.witness)
        if verdict.status is Triviality.UNDECIDED:
            undecided = True
    if not undecided:
        return RistVerdict(RistStatus.YES_CERTIFIED)
    for lev in range(n, depth):
        for u in level_vertices(w.tree, lev):
            if not is_descendant(u, v) and not label(w, u).is_identity:
                return RistVerdict(RistStatus.NO, u)
    return RistVerdict(RistStatus.YES_UP_TO_DEPTH)


def vertex_of(tree: DegreeSequence, n: int, idx: int) -> Vertex:
    return vertex_at(tree, n, idx)
