"""Line-oriented text format for recursively defined groups.

::

    # Hanoi towers group
    tree 3
    gen a = (1, 1, a) (1 2)
    gen b = (1, b, 1) (1 3)
    gen c = (c, 1, 1) (2 3)
    order a = 2

``tree preperiod=[2] period=[3]`` declares a non-constant tree (only useful
for rooted generators).  ``gen x = rooted <cycles>`` declares a rooted
generator.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from typing import Optional

from .autom import GroupDef, Induced, LabelFn, Permutation, Recursive, Word, WordSyntaxError, parse_word
from .tree import DegreeSequence


class GroupFileError(ValueError):
    def __init__(self, msg: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


_TREE_RE = re.compile(r"tree\s+(\d+)\s*\Z")
_TREE_SEQ_RE = re.compile(r"tree\s+preperiod\s*=\s*\[([^\]]*)\]\s+period\s*=\s*\[([^\]]*)\]\s*\Z")
_GEN_RE = re.compile(r"gen\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)\Z")
_ORDER_RE = re.compile(r"order\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(-?\d+)\s*\Z")


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in re.split(r"[\s,]+", text.strip()) if x)


def _split_sections(body: str) -> tuple[list[tuple[str, int]], str]:
    """Split ``(w1, ..., wd) perm`` into section texts (with offsets) and the permutation text."""
    if not body.startswith("("):
        raise ValueError("expected '(' or 'rooted'")
    depth = 0
    parts = []
    start = 1
    for i, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth == 0:
                parts.append((body[start:i], start))
                return parts, body[i + 1:]
        elif ch == "," and depth == 1:
            parts.append((body[start:i], start))
            start = i + 1
    raise ValueError("unbalanced parentheses in section list")


def parse_group_file(text: str, name: Optional[str] = None) -> GroupDef:
    tree: Optional[DegreeSequence] = None
    gens: list[tuple[str, int, int, object]] = []  # name, line, column offset, data
    orders: dict[str, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if not stripped:
            continue
        if stripped.startswith("tree"):
            if tree is not None:
                raise GroupFileError("tree declared twice", lineno)
            m = _TREE_RE.match(stripped)
            try:
                if m:
                    tree = DegreeSequence.constant(int(m.group(1)))
                else:
                    m = _TREE_SEQ_RE.match(stripped)
                    if not m:
                        raise ValueError("expected 'tree <d>' or 'tree preperiod=[...] period=[...]'")
                    tree = DegreeSequence(_ints(m.group(1)), _ints(m.group(2)))
            except ValueError as exc:
                raise GroupFileError(str(exc), lineno, indent + 1) from None
            continue
        if tree is None:
            raise GroupFileError("the tree must be declared before generators", lineno, indent + 1)
        if stripped.startswith("gen"):
            m = _GEN_RE.match(stripped)
            if not m:
                raise GroupFileError("expected 'gen <name> = ...'", lineno, indent + 1)
            gname, body = m.group(1), m.group(2).strip()
            if any(g[0] == gname for g in gens):
                raise GroupFileError(f"generator {gname!r} declared twice", lineno, indent + 1)
            body_col = indent + m.start(2) + 1
            d = tree.degree_at(1)
            try:
                if body.startswith("rooted"):
                    perm = Permutation.parse(body[len("rooted"):], d)
                    gens.append((gname, lineno, body_col, (perm, None)))
                else:
                    parts, perm_text = _split_sections(body)
                    if len(parts) != d:
                        raise ValueError(f"expected {d} sections on a tree of degree {d}, got {len(parts)}")
                    perm = Permutation.parse(perm_text, d)
                    gens.append((gname, lineno, body_col, (perm, parts)))
            except ValueError as exc:
                raise GroupFileError(str(exc), lineno, body_col) from None
            continue
        if stripped.startswith("order"):
            m = _ORDER_RE.match(stripped)
            if not m:
                raise GroupFileError("expected 'order <name> = <int>'", lineno, indent + 1)
            orders[m.group(1)] = (int(m.group(2)), lineno)
            continue
        raise GroupFileError(f"unrecognised line {stripped!r}", lineno, indent + 1)
    if tree is None:
        raise GroupFileError("no tree declared", max(1, len(text.splitlines())))

    names = [g[0] for g in gens]
    # validate section words against the declared names before building
    probe = GroupDef(tree, {n: Recursive(Permutation.identity(tree.degree_at(1))) for n in names}) \
        if tree.is_constant else None
    built = {}
    for gname, lineno, col, (perm, parts) in gens:
        if parts is None:
            # recursion needs a constant tree; a rooted label works on any tree
            built[gname] = Recursive(perm) if probe is not None else LabelFn(lambda v, c=perm: c if not v else None, 1)
            continue
        if probe is None:
            raise GroupFileError("generators with sections need a constant-degree tree", lineno, col)
        secs = []
        for text_part, off in parts:
            try:
                secs.append(parse_word(probe, text_part).letters)
            except WordSyntaxError as exc:
                raise GroupFileError(str(exc), lineno, col + off + exc.pos) from None
        built[gname] = Recursive(perm, tuple(secs))
    for gname, (m, lineno) in orders.items():
        if gname not in built:
            raise GroupFileError(f"order declared for unknown generator {gname!r}", lineno)
        if m < 1:
            raise GroupFileError("declared orders must be positive", lineno)
    try:
        return GroupDef(tree, built, {k: v[0] for k, v in orders.items()}, name=name)
    except ValueError as exc:
        raise GroupFileError(str(exc), 1) from None


def _tree_line(tree: DegreeSequence) -> str:
    if tree.is_constant:
        return f"tree {tree.period[0]}"
    pre = ", ".join(map(str, tree.preperiod))
    per = ", ".join(map(str, tree.period))
    return f"tree preperiod=[{pre}] period=[{per}]"


def format_group_file(group: GroupDef) -> str:
    """Write a group back in the file format (recursive generators only)."""
    lines = [_tree_line(group.tree)]
    for gname in group.generator_names:
        g = group.generator(gname)
        if not isinstance(g, Recursive):
            raise ValueError(f"generator {gname!r} is not recursive and cannot be written to a group file")
        if all(not s for s in g.sections):
            lines.append(f"gen {gname} = rooted {g.perm}")
        else:
            secs = ", ".join(str(Word(group, s, normalized=True)) for s in g.sections)
            lines.append(f"gen {gname} = ({secs}) {g.perm}")
    for gname, m in group.orders.items():
        lines.append(f"order {gname} = {m}")
    return "\n".join(lines) + "\n"


def group_definition(group: GroupDef) -> tuple:
    """Hashable summary of a group definition, for comparing definitions."""
    gens = []
    for gname in group.generator_names:
        g = group.generator(gname)
        if isinstance(g, Recursive):
            gens.append((gname, g.perm.images, g.sections))
        elif isinstance(g, Induced):
            gens.append((gname, g.perm.images, g.sections, g.tree))
        elif isinstance(g, LabelFn):
            gens.append((gname, "label", id(g)))
    return (group.tree, tuple(gens), tuple(sorted(group.orders.items())))
