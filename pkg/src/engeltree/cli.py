"""Command-line interface.

Exit codes: 0 when the answer is decided, 1 when a bound was hit before a
decision (lower bounds, bounded Engel evidence, failed checks), 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import catalog
from .autom import GroupDef, Word, WordSyntaxError, parse_word
from .groupfile import GroupFileError, parse_group_file

DEFAULT_DEPTH = 6
DEFAULT_MAX_K = 10
DEFAULT_CLOSURE = 1_000_000


class UsageError(Exception):
    pass


def _load_group(args) -> GroupDef:
    if getattr(args, "group_file", None):
        try:
            with open(args.group_file, encoding="utf-8") as fh:
                return parse_group_file(fh.read(), name=args.group_file)
        except OSError as exc:
            raise UsageError(f"cannot read {args.group_file}: {exc}") from None
        except GroupFileError as exc:
            raise UsageError(f"{args.group_file}: {exc}") from None
    try:
        return catalog.from_name(args.group)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _word(group: GroupDef, text: str) -> Word:
    try:
        return parse_word(group, text)
    except (WordSyntaxError, KeyError) as exc:
        raise UsageError(f"cannot parse word {text!r}: {exc}") from None


def _vertex(text: str) -> tuple[int, ...]:
    cleaned = text.strip().strip("[]()")
    if not cleaned:
        return ()
    try:
        return tuple(int(x) for x in cleaned.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad vertex {text!r}; write it like 1,3") from None


def _budget(args):
    from .wordprob import ClosureBudget

    return ClosureBudget(max_words=args.closure)


def _emit(args, payload: dict, text_lines: list[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        width = max((len(k) for k, _ in text_lines), default=0)
        for k, v in text_lines:
            print(f"{k.ljust(width)}  {v}")


# -- commands ---------------------------------------------------------------------

def cmd_order(args) -> int:
    from .wordprob import OrderPolicy, order

    G = _load_group(args)
    w = _word(G, args.word)
    res = order(w, OrderPolicy(max_level=args.max_level, stability_window=args.window, budget=_budget(args)))
    d = res.to_dict()
    lines = [("element", str(w)), ("kind", d["kind"])]
    lines += [(k, json.dumps(v)) for k, v in d.items() if k != "kind"]
    lines.append(("level orders", " ".join(map(str, res.levels))))
    _emit(args, d, lines)
    return 0 if res.decided else 1


def cmd_trivial(args) -> int:
    from .wordprob import is_trivial

    G = _load_group(args)
    w = _word(G, args.word)
    v = is_trivial(w, _budget(args))
    d = v.to_dict()
    lines = [("element", str(w)), ("status", d["status"])]
    if "witness" in d:
        lines.append(("witness", str(d["witness"])))
    _emit(args, d, lines)
    return 0 if v.decided else 1


def cmd_orbits(args) -> int:
    from .orbitlab import LevelTooLargeError, order_mod_level, orbits

    G = _load_group(args)
    w = _word(G, args.word)
    try:
        obs = orbits(w, args.level)
    except LevelTooLargeError as exc:
        raise UsageError(str(exc)) from None
    d = {
        "level": args.level,
        "lengths": sorted(o.length for o in obs),
        "order_mod_level": order_mod_level(w, args.level),
        "orbits": [[list(v) for v in o.vertices] for o in obs],
    }
    lines = [("element", str(w)), ("level", str(args.level)),
             ("orbit lengths", " ".join(map(str, d["lengths"]))), ("order mod level", str(d["order_mod_level"]))]
    _emit(args, d, lines)
    return 0


def cmd_fundamental(args) -> int:
    from .orbitlab import NoFundamentalSystemError, fundamental_system
    from .wordprob import ClosureBudget

    G = _load_group(args)
    w = _word(G, args.word)
    try:
        fs = fundamental_system(w, depth=args.depth, stability_window=args.window,
                                budget=ClosureBudget(max_words=args.closure))
    except NoFundamentalSystemError as exc:
        _emit(args, {"error": str(exc)}, [("error", str(exc))])
        return 1
    d = fs.to_dict()
    lines = [("element", str(w)), ("vertices", " ".join(str(list(v)) for v in fs.vertices)),
             ("orbit lengths", " ".join(map(str, fs.lengths))), ("level", str(fs.level)),
             ("order", str(fs.order)), ("certified", str(fs.certified).lower())]
    _emit(args, d, lines)
    return 0 if fs.certified else 1


def cmd_reduce(args) -> int:
    from .orbitlab import order_mod_level
    from .reduce import NotStabilizingError, induce_on_orbit

    G = _load_group(args)
    w = _word(G, args.word)
    v = _vertex(args.orbit_of)
    try:
        rt, y = induce_on_orbit(w, v)
    except NotStabilizingError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    seq = rt.induced_seq
    levels = [order_mod_level(y, n) for n in range(1, args.depth + 1)]
    d = {
        "roots": [list(r) for r in rt.roots],
        "level": rt.level,
        "tree": {"preperiod": list(seq.preperiod), "period": list(seq.period)},
        "root_label": str(y.label()),
        "level_orders": levels,
    }
    lines = [("element", str(w)), ("roots", " ".join(str(list(r)) for r in rt.roots)),
             ("reduced tree", str(seq)), ("root label", d["root_label"]),
             ("level orders", " ".join(map(str, levels)))]
    _emit(args, d, lines)
    return 0


def cmd_engel(args) -> int:
    from .engel import EngelKind, engel_degree

    G = _load_group(args)
    g, x = _word(G, args.g), _word(G, args.x)
    v = engel_degree(g, x, args.max_k, _budget(args))
    d = {"g": str(g), "x": str(x), "verdict": v.to_dict()}
    _emit(args, d, [("g", str(g)), ("x", str(x)), ("verdict", str(v))])
    return 0 if v.kind is EngelKind.DEGREE else 1


def cmd_survey(args) -> int:
    from .engel import EngelKind, left_engel_survey

    G = _load_group(args)
    cands = [_word(G, c) for c in args.candidates] if args.candidates else None
    reports = left_engel_survey(G, args.len, args.max_k, candidates=cands, budget=_budget(args))
    out = []
    lines = []
    undecided = False
    for r in reports:
        rd = r.to_dict()
        rd["class"] = r.details["class"]
        rd["order"] = r.details["order"].to_dict()
        out.append(rd)
        undecided = undecided or any(p.verdict.kind is EngelKind.UNDECIDED for p in r.probes)
        ce = r.counterexample
        summary = "all probes vanish" if r.all_vanish else f"survives for g = {ce}" if ce else "undecided"
        lines.append((str(r.x), f"{r.details['class']:<10} max degree {r.max_degree_seen:<3} {summary}"))
    _emit(args, {"group": G.name or "", "reports": out}, lines)
    return 1 if undecided else 0


def cmd_liebeck(args) -> int:
    from .engel import liebeck_degree

    try:
        deg = liebeck_degree(args.p, args.m, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"degree": deg}, [("degree", str(deg))])
    return 0


def cmd_verify(args) -> int:
    from .checks import run_suite

    try:
        results = run_suite(args.id)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    passed = all(r.passed for r in results)
    d = {"id": args.id, "passed": passed, "checks": [r.to_dict() for r in results]}
    if args.json:
        print(json.dumps(d, default=str))
    else:
        for r in results:
            print(r.line())
    return 0 if passed else 1


def cmd_catalog(args) -> int:
    groups = []
    for e in catalog.catalog_entries():
        groups.append({"name": e.name, "generators": e.group.generator_names, "tree": str(e.group.tree),
                       "provenance": e.provenance})
    if args.json:
        print(json.dumps({"groups": groups}))
    else:
        for g in groups:
            print(f"{g['name']:<16} {g['tree']:<5} {' '.join(g['generators']):<10} {g['provenance']}")
        print("names: " + ", ".join(catalog.CATALOG_NAMES))
    return 0


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="engeltree",
                                     description="Orders, orbits and Engel conditions in groups of tree automorphisms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True, closure=True):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if group:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--group", default="grigorchuk",
                             help="catalog name: grigorchuk, gupta-sidki:p, ggs:p:e1,..., hanoi, sylow:p:depth "
                                  "(default grigorchuk)")
            src.add_argument("--group-file", help="read the group from a group file")
        if closure:
            p.add_argument("--closure", type=int, default=DEFAULT_CLOSURE,
                           help=f"max distinct section words in the word problem (default {DEFAULT_CLOSURE})")

    p = sub.add_parser("order", help="order of an element")
    p.add_argument("word")
    p.add_argument("--max-level", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--window", type=int, default=3, help="levels of stable order needed (default 3)")
    common(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("trivial", help="word problem")
    p.add_argument("word")
    common(p)
    p.set_defaults(func=cmd_trivial)

    p = sub.add_parser("orbits", help="orbits on a level")
    p.add_argument("word")
    p.add_argument("--level", type=int, required=True)
    common(p, closure=False)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("fundamental", help="fundamental system of orbits")
    p.add_argument("word")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--window", type=int, default=3)
    common(p)
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("reduce", help="reduce at an orbit and induce the element")
    p.add_argument("word")
    p.add_argument("--orbit-of", required=True, help="vertex, e.g. 1,3")
    p.add_argument("--depth", type=int, default=3, help="levels of the induced action to report")
    common(p, closure=False)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("engel", help="Engel degree of x on g")
    p.add_argument("g")
    p.add_argument("x")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    common(p)
    p.set_defaults(func=cmd_engel)

    p = sub.add_parser("survey", help="left Engel survey over short words")
    p.add_argument("--len", type=int, default=2, help="max syllables per word (default 2)")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--candidates", nargs="*", help="only survey these x")
    common(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("liebeck", help="Engel degree formula for wreath products of p-groups")
    p.add_argument("p", type=int)
    p.add_argument("m", type=int)
    p.add_argument("q", type=int)
    common(p, group=False, closure=False)
    p.set_defaults(func=cmd_liebeck)

    p = sub.add_parser("verify", help="run a verification suite (2.2, 2.5, 3.1, 3.2, 3.4, 5.1, 5.2, "
                                      "ggs-corollary, hanoi, iterated-wreath, word-problem, engel-survey, all)")
    p.add_argument("id")
    common(p, group=False, closure=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="catalog of named groups")
    p.add_argument("action", choices=["list"])
    common(p, group=False, closure=False)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
