"""Reproducible verification suites.

Each ``check_*`` function runs one self-contained experiment with a fixed
seed and returns a :class:`CheckResult`.  The CLI ``verify`` command and the
acceptance tests both call these.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import catalog
from .autom import GroupDef, Permutation, Recursive, Word, psi_n, section
from .engel import (EngelKind, engel_commutator, engel_formula_psi, ggs_commutator_psi,
                    ggs_level_one_projection_check, ggs_non_engel_witness, left_engel_survey,
                    liebeck_degree, right_engel_witness, rooted_cycle)
from .orbitlab import infinite_order_certificate, orbit, orbit_lengths, orbits, order_mod_level
from .tree import DegreeSequence, level_vertices, vertex_index
from .wordprob import OrderPolicy, equal, is_trivial, order
from .wreathlab import (CyclicWreath, brute_engel_degree, brute_is_left_engel, comm_lower_bound_check,
                        engel_coefficients, verify_order_growth, verify_wreath_embedding)


@dataclass
class CheckResult:
    id: str
    title: str
    passed: bool
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {"id": self.id, "title": self.title, "passed": self.passed,
                "elapsed": round(self.elapsed, 3), "details": self.details}

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.id}: {self.title} ({self.elapsed:.2f}s)"


def _timed(check_id: str, title: str):
    def wrap(fn):
        def run(*args, **kwargs) -> CheckResult:
            t0 = time.perf_counter()
            passed, details = fn(*args, **kwargs)
            return CheckResult(check_id, title, bool(passed), details, time.perf_counter() - t0)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


LIEBECK_CASES = ((2, 2, 2), (2, 2, 4), (2, 4, 2), (2, 4, 4), (3, 3, 3), (3, 3, 9), (3, 9, 3))


@_timed("liebeck", "Engel degree formula for C_q wr C_m matches brute force")
def check_liebeck(cases=LIEBECK_CASES):
    rows = []
    for p, m, q in cases:
        W = CyclicWreath(q, m)
        brute = brute_engel_degree(W, W.top(), W.base_element(0, 1))
        formula = liebeck_degree(p, m, q)
        rows.append({"p": p, "m": m, "q": q, "formula": formula,
                     "brute": brute.n if brute.kind is EngelKind.DEGREE else None})
    return all(r["formula"] == r["brute"] for r in rows), {"cases": rows}


@_timed("mixed-prime", "top generator is not left Engel when the primes differ")
def check_mixed_prime(pairs=((3, 2), (2, 3))):
    rows = []
    ok = True
    for q, n in pairs:
        W = CyclicWreath(q, n)
        res = brute_is_left_engel(W, W.top())
        witness_ok = False
        if res.witness is not None:
            v = brute_engel_degree(W, W.top(), res.witness)
            witness_ok = v.kind is EngelKind.SURVIVES and v.never
        ok = ok and not res.is_left_engel and witness_ok
        rows.append({"q": q, "n": n, "left_engel": res.is_left_engel,
                     "witness": None if res.witness is None else str(res.witness), "witness_never_vanishes": witness_ok})
    return ok, {"cases": rows}


@_timed("order-growth", "|xg| > |x| in C_q wr C_n for 2 <= q, n <= 9")
def check_order_growth(max_q: int = 9, max_n: int = 9):
    failures = [(q, n) for q in range(2, max_q + 1) for n in range(2, max_n + 1)
                if not verify_order_growth(CyclicWreath(q, n))]
    total = (max_q - 1) * (max_n - 1)
    return not failures, {"pairs": total, "failures": failures}


def _random_rist_labels(rng: random.Random, seq: DegreeSequence, v: tuple, depth: int) -> dict:
    labels = {}
    for lev in range(len(v), depth):
        for u in level_vertices(seq, lev):
            if u[: len(v)] == v and rng.random() < 0.5:
                d = seq.degree_at(lev + 1)
                labels[u] = Permutation(tuple(rng.sample(range(1, d + 1), d)))
    return labels


def embedding_instances(count: int = 24, seed: int = 7) -> list[tuple]:
    """(seq, labels of f, labels of g, v, depth) instances, the D8 one first."""
    rng = random.Random(seed)
    t2, t3 = DegreeSequence.constant(2), DegreeSequence.constant(3)
    out = [
        (t2, {(): Permutation((2, 1))}, {(1,): Permutation((2, 1))}, (1,), 3),
        (t2, {(): Permutation((2, 1))}, {}, (1,), 3),
        (t3, {(): Permutation((2, 3, 1))}, {(1,): Permutation((2, 3, 1))}, (1,), 2),
    ]
    f_choices = [
        (t2, {(): Permutation((2, 1))}, (1,)),
        (t2, {(): Permutation((2, 1)), (1,): Permutation((2, 1))}, (1, 1)),
        (t3, {(): Permutation((2, 3, 1))}, (1,)),
        (t3, {(): Permutation((2, 1, 3))}, (1,)),
        (t3, {(): Permutation((2, 1, 3)), (1,): Permutation((2, 3, 1))}, (1, 2)),
    ]
    while len(out) < count:
        seq, flabels, v = rng.choice(f_choices)
        depth = 3 if seq == t2 else rng.choice([2, 3])
        if len(v) >= depth:
            depth = len(v) + 1
        out.append((seq, flabels, _random_rist_labels(rng, seq, v, depth), v, depth))
    return out


@_timed("wreath-embedding", "<g, f> is the wreath product <g> wr <f> for rigid g")
def check_wreath_embedding(count: int = 24, seed: int = 7):
    rows = []
    for seq, fl, gl, v, depth in embedding_instances(count, seed):
        G = catalog.finitary_group(seq, {"f": fl, "g": gl})
        rep = verify_wreath_embedding(G.gen("f"), G.gen("g"), v, depth)
        rows.append({"tree": str(seq), "v": list(v), "depth": depth, "order": rep.group_order,
                     "expected": rep.expected, "ok": rep.ok})
    d8 = rows[0]["order"] == 8
    return all(r["ok"] for r in rows) and d8 and len(rows) >= 20, {"instances": rows, "d8_order": rows[0]["order"]}


def random_word(rng: random.Random, group: GroupDef, max_len: int) -> Word:
    names = group.generator_names
    letters = [(rng.choice(names), rng.choice([1, -1])) for _ in range(rng.randint(1, max_len))]
    return Word(group, letters)


def orbit_law_violations(f: Word, max_level: int) -> list[str]:
    """Violations of: parent orbit length divides child orbit length; the order on
    level n is the lcm of orbit lengths there and divides the order on level n+1."""
    out = []
    prev_lengths = {(): 1}
    prev_order = 1
    for n in range(1, max_level + 1):
        lengths = {}
        for o in orbits(f, n):
            for u in o.vertices:
                lengths[u] = o.length
        for u, ell in lengths.items():
            if ell % prev_lengths[u[:-1]]:
                out.append(f"{f}: |O({list(u[:-1])})| does not divide |O({list(u)})|")
        s = order_mod_level(f, n)
        if s != math.lcm(*lengths.values()):
            out.append(f"{f}: level {n} order is not the lcm of orbit lengths")
        if s % prev_order:
            out.append(f"{f}: level order {prev_order} does not divide {s}")
        prev_lengths, prev_order = lengths, s
    of = order(f, OrderPolicy(max_level=max_level))
    if of.is_finite and of.certified and of.m % prev_order:
        out.append(f"{f}: level order {prev_order} does not divide |f| = {of.m}")
    return out


@_timed("orbit-lcm", "orbit lengths divide along descendants and determine level orders")
def check_orbit_laws(n_words: int = 500, max_level: int = 5, seed: int = 1):
    rng = random.Random(seed)
    groups = [catalog.grigorchuk(), catalog.gupta_sidki(3), catalog.hanoi(), catalog.ggs(5, [(1, 2, 2, 1)])]
    violations = []
    for _ in range(n_words):
        g = rng.choice(groups)
        violations += orbit_law_violations(random_word(rng, g, 8), max_level)
    return not violations, {"words": n_words, "max_level": max_level, "violations": violations[:20]}


@_timed("hanoi", "Hanoi ab has infinite order: (ab)^3 reproduces ab at vertex 2")
def check_hanoi(max_level: int = 6):
    H = catalog.hanoi()
    ab = H.word("ab")
    cert = infinite_order_certificate(ab, max_level)
    levels = [order_mod_level(ab, n) for n in range(1, max_level + 1)]
    ok = (cert is not None and cert.s == 3 and cert.v == (2,) and cert.verdict.trivial
          and levels == [3 ** n for n in range(1, max_level + 1)])
    return ok, {"certificate": None if cert is None else cert.to_dict(), "levels": levels}


def random_chain(rng: random.Random, seq: DegreeSequence, length: int) -> list:
    choices = []
    v: tuple = ()
    for n in range(1, length + 1):
        d = seq.degree_at(n)
        c = rng.randint(1, d)
        ell = rng.choice([ell for ell in (2, 3) if ell <= d])
        others = rng.sample([i for i in range(1, d + 1) if i != c], ell - 1)
        k = Permutation.from_cycles(d, [[c] + others])
        v = v + (c,)
        choices.append((k, v))
    return choices


@_timed("iterated-wreath", "orbit of v_n has length l_1 ... l_n")
def check_iterated_wreath(n_chains: int = 10, length: int = 5, seed: int = 3):
    rng = random.Random(seed)
    rows = []
    ok = True
    for _ in range(n_chains):
        seq = DegreeSequence.constant(3)
        choices = random_chain(rng, seq, length)
        f = catalog.iterated_wreath_infinite_order(seq, choices)
        expected = catalog.chain_orbit_lengths(choices)
        got = [orbit(f, v).length for _, v in choices]
        ok = ok and got == expected
        rows.append({"expected": expected, "observed": got})
    return ok, {"chains": rows}


def formula_instance(rng: random.Random, d: int):
    """Random ``y = a z`` and ``x`` (``x, z`` in the first level stabilizer), labels on levels 1 and 2."""
    seq = DegreeSequence.constant(d)

    def st1_labels():
        labels = {}
        for lev in (1, 2):
            for u in level_vertices(seq, lev):
                if rng.random() < 0.5:
                    labels[u] = Permutation(tuple(rng.sample(range(1, d + 1), d)))
        return labels

    G = catalog.finitary_group(seq, {"x": st1_labels(), "z": st1_labels()})
    y = rooted_cycle(G) * G.gen("z")
    return y, G.gen("x")


@_timed("commutator-formula", "closed form of psi([y,_k x]) equals direct iteration")
def check_commutator_formula(n_instances: int = 100, seed: int = 5):
    rng = random.Random(seed)
    mismatches = []
    for t in range(n_instances):
        d = rng.choice([2, 3])
        k = rng.choice([2, 3, 4])
        y, x = formula_instance(rng, d)
        formula = engel_formula_psi(y, x, k)
        direct = psi_n(engel_commutator(y, x, k), 1)
        for i, (u, w) in enumerate(zip(formula, direct), start=1):
            if not equal(u, w).trivial:
                mismatches.append({"instance": t, "d": d, "k": k, "coordinate": i})
    return not mismatches, {"instances": n_instances, "mismatches": mismatches}


def random_ggs_vectors(rng: random.Random, count: int, primes=(3, 5, 7)) -> list:
    out = []
    while len(out) < count:
        p = rng.choice(primes)
        e = tuple(rng.randrange(p) for _ in range(p - 1))
        if any(e):
            out.append(catalog.GGSVector(p, e))
    return out


@_timed("ggs-corollary", "GGS commutator sections follow the exponent patterns")
def check_ggs_displays(n_vectors: int = 10, seed: int = 11):
    rng = random.Random(seed)
    vecs = random_ggs_vectors(rng, n_vectors)
    vecs += [catalog.GGSVector(3, (1, -1)), catalog.GGSVector(5, (1, 2, 2, 1)), catalog.GGSVector(7, (1, 0, 3, 3, 0, 1))]
    rows = []
    ok = True
    for v in vecs:
        psi = ggs_commutator_psi(v)
        row = {"p": v.p, "e": list(v.e), "psi_ok": psi.verified}
        ok = ok and psi.verified
        if v.constant:
            row["projection"] = "constant"
        else:
            proj = ggs_level_one_projection_check(v)
            row["projection"] = proj.to_dict()
            ok = ok and proj.projections_ok and proj.generators_found
        rows.append(row)
    constant_rejected = False
    try:
        ggs_level_one_projection_check(catalog.GGSVector(5, (2, 2, 2, 2)))
    except ValueError:
        constant_rejected = True
    return ok and constant_rejected, {"vectors": rows, "constant_rejected": constant_rejected}


@_timed("ggs-not-engel", "[a^i, b^l, ..., b^l] never vanishes in GGS groups")
def check_ggs_non_engel(n_random: int = 5, max_k: int = 6, seed: int = 13):
    rng = random.Random(seed)
    vecs = [catalog.GGSVector(3, (1, -1))] + random_ggs_vectors(rng, n_random, primes=(3, 5))
    rows = []
    ok = True
    for v in vecs:
        rep = ggs_non_engel_witness(v, max_k + 1)
        verdict = rep.probes[0].verdict
        good = (rep.details["identity_ok"] and all(rep.details["recursion_ok"])
                and verdict.kind is EngelKind.SURVIVES and verdict.n == max_k + 1)
        ok = ok and good
        rows.append({"p": v.p, "e": list(v.e), "i": rep.details["i"], "lambda": rep.details["lambda"],
                     "verdict": str(verdict), "ok": good})
    return ok, {"vectors": rows}


def right_engel_instances():
    """(f, orbit vertex, a, b): S_3 components below a non-trivial orbit."""
    a, b = Permutation((2, 1, 3)), Permutation((2, 3, 1))
    s1 = DegreeSequence((2,), (3,))
    f1 = catalog.finitary_element(s1, {(): Permutation((2, 1))})
    t3 = DegreeSequence.constant(3)
    f2 = catalog.finitary_element(t3, {(): Permutation((2, 3, 1))})
    f3 = catalog.finitary_element(t3, {(): Permutation((2, 1, 3)), (1,): Permutation((1, 3, 2))})
    return [(f1, (1,), a, b), (f2, (1,), a, b), (f3, (1, 2), a, b)]


@_timed("right-engel-witness", "[y,_k x] != 1 with first section [b,_{k-1} a]^a")
def check_right_engel_witness(max_k: int = 6):
    rows = []
    ok = True
    for f, v, a, b in right_engel_instances():
        rep = right_engel_witness(f, v, a, b, max_k)
        verdict = rep.probes[0].verdict
        good = (verdict.kind is EngelKind.SURVIVES and rep.details["pair_non_engel"]
                and len(rep.details["first_coordinate_ok"]) == max_k - 1
                and all(rep.details["first_coordinate_ok"]) and rep.details["symbolic_ok"])
        ok = ok and good
        rows.append({"f": str(f), "v": list(v), "verdict": str(verdict),
                     "first_coordinate_ok": rep.details["first_coordinate_ok"], "ok": good})
    return ok, {"instances": rows}


@_timed("commutator-bound", "Engel degree on the base group is at least n; coefficient claim")
def check_commutator_bound(ns=(2, 3, 4), qs=(2, 3), coeff_n: int = 8, coeff_k: int = 50, seed: int = 17):
    rng = random.Random(seed)
    rows = []
    ok = True
    for n in ns:
        for q in qs:
            W = CyclicWreath(q, n)
            tops = [t for t in range(1, n) if math.gcd(t, n) == 1]
            ws = [W.top()] + [W.element([rng.randrange(q) for _ in range(n)], rng.choice(tops)) for _ in range(2)]
            for w in ws:
                rep = comm_lower_bound_check(W, w)
                ok = ok and rep.ok
                rows.append({"q": q, "n": n, "w": str(w), "ok": rep.ok, "degree": str(rep.degree)})
    claims = {}
    for n in range(2, coeff_n + 1):
        table = engel_coefficients(n, coeff_k)
        claims[n] = table.claim_holds
        ok = ok and table.claim_holds
    return ok, {"bound": rows, "coefficient_claim": claims}


# -- word problem oracle ------------------------------------------------------------

def leaf_action_oracle(tree_degree: int, definitions: dict, depth: int) -> dict:
    """Actions of recursively defined generators (and inverses) on level ``depth``.

    ``definitions[name] = (images, sections)`` with ``sections`` a list of
    strings of generator names (``""`` for the identity), read straight from
    the recursion without using the word machinery.
    """
    d = tree_degree
    memo: dict = {}

    def compose(p, q):  # p then q
        return tuple(q[i] for i in p)

    def act(name: str, n: int):
        key = (name, n)
        if key in memo:
            return memo[key]
        images, secs = definitions[name]
        if n == 0:
            res = (0,)
        else:
            size = d ** (n - 1)
            out = [0] * (size * d)
            for i in range(d):
                sub = tuple(range(size))
                for ch in secs[i]:
                    sub = compose(sub, act(ch, n - 1))
                base = (images[i] - 1) * size
                for r in range(size):
                    out[i * size + r] = base + sub[r]
            res = tuple(out)
        memo[key] = res
        return res

    out = {}
    for name in definitions:
        p = act(name, depth)
        inv = [0] * len(p)
        for i, j in enumerate(p):
            inv[j] = i
        out[(name, 1)] = p
        out[(name, -1)] = tuple(inv)
    return out


GRIGORCHUK_RAW = {"a": ((2, 1), ["", ""]), "b": ((1, 2), ["a", "c"]),
                  "c": ((1, 2), ["a", "d"]), "d": ((1, 2), ["", "b"])}
GUPTA_SIDKI3_RAW = {"a": ((2, 3, 1), ["", "", ""]), "b": ((1, 2, 3), ["a", "aa", "b"])}


def word_problem_agreement(group: GroupDef, raw: dict, d: int, max_len: int, depth: int, letters):
    gens = leaf_action_oracle(d, raw, depth)
    identity = tuple(range(d ** depth))
    disagreements = []
    count = 0
    stack = [((), identity)]
    while stack:
        word, perm = stack.pop()
        if word:
            count += 1
            verdict = is_trivial(Word(group, word))
            oracle_trivial = perm == identity
            if verdict.trivial != oracle_trivial or not verdict.decided:
                disagreements.append("".join(f"{k}{'' if e == 1 else '^-1'}" for k, e in word))
        if len(word) < max_len:
            for letter in letters:
                g = gens[letter]
                stack.append((word + (letter,), tuple(g[i] for i in perm)))
    return count, disagreements


@_timed("word-problem", "is_trivial agrees with a depth-8 leaf-action oracle")
def check_word_problem(max_len: int = 6, depth: int = 8):
    G = catalog.grigorchuk()
    n1, bad1 = word_problem_agreement(G, GRIGORCHUK_RAW, 2, max_len, depth,
                                      [(k, 1) for k in "abcd"])
    GS = catalog.gupta_sidki(3)
    n2, bad2 = word_problem_agreement(GS, GUPTA_SIDKI3_RAW, 3, max_len, depth,
                                      [("a", 1), ("a", -1), ("b", 1), ("b", -1)])
    return not bad1 and not bad2, {"grigorchuk_words": n1, "gupta_sidki_words": n2,
                                   "disagreements": (bad1 + bad2)[:20]}


@_timed("engel-survey", "left Engel survey: Grigorchuk elements of order > 2 and Gupta-Sidki a, b, ab")
def check_engel_survey(word_length: int = 3, max_k: int = 8):
    G = catalog.grigorchuk()
    reports = left_engel_survey(G, word_length, max_k)
    rows = []
    ok = True
    for r in reports:
        cls = r.details["class"]
        if cls == "order>2":
            good = r.counterexample is not None
        elif cls == "involution":
            good = all(p.verdict.kind is EngelKind.DEGREE for p in r.probes)
        else:
            good = False
        ok = ok and good
        rows.append({"x": str(r.x), "class": cls, "counterexample": None if r.counterexample is None else str(r.counterexample),
                     "max_degree_seen": r.max_degree_seen, "ok": good})
    GS = catalog.gupta_sidki(3)
    gs_rows = []
    cands = [GS.word(w) for w in ("a", "b", "ab")]
    for r in left_engel_survey(GS, word_length, max_k, candidates=cands, stop_at_witness=True):
        ce = r.counterexample
        good = ce is not None
        ok = ok and good
        gs_rows.append({"x": str(r.x), "counterexample": None if ce is None else str(ce), "ok": good})
    return ok, {"grigorchuk": rows, "gupta_sidki": gs_rows}


# -- registry -------------------------------------------------------------------------

SUITES: dict[str, list[Callable[[], CheckResult]]] = {
    "2.2": [check_orbit_laws],
    "2.5": [check_wreath_embedding],
    "3.1": [check_liebeck, check_mixed_prime],
    "3.2": [check_order_growth],
    "3.4": [check_commutator_bound],
    "5.1": [check_commutator_formula],
    "5.2": [check_right_engel_witness, check_ggs_non_engel],
    "ggs-corollary": [check_ggs_displays],
    "hanoi": [check_hanoi],
    "iterated-wreath": [check_iterated_wreath],
    "word-problem": [check_word_problem],
    "engel-survey": [check_engel_survey],
}

ALIASES = {
    "orbit-lcm": "2.2",
    "wreath-embedding": "2.5",
    "liebeck": "3.1",
    "order-growth": "3.2",
    "commutator-bound": "3.4",
    "commutator-formula": "5.1",
    "right-engel": "5.2",
}


def suite_ids() -> list[str]:
    return list(SUITES) + list(ALIASES)


def run_suite(suite_id: str) -> list[CheckResult]:
    key = ALIASES.get(suite_id, suite_id)
    if key == "all":
        return [fn() for fns in SUITES.values() for fn in fns]
    if key not in SUITES:
        raise KeyError(f"unknown check {suite_id!r}; known: {', '.join(suite_ids() + ['all'])}")
    return [fn() for fn in SUITES[key]]
