from __future__ import annotations

import json
import subprocess
import sys

import jsonschema
import pytest

from engeltree.cli import main
from engeltree.schemas import SCHEMAS

from .test_groupfile import HANOI


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, schema, *argv):
    code, out = run(capsys, *argv, "--json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS[schema])
    return code, data


def test_order_hanoi_infinite(capsys):
    code, data = run_json(capsys, "order", "order", "ab", "--group", "hanoi", "--max-level", "6")
    assert code == 0 and data == {"kind": "infinite", "certificate": {"s": 3, "v": [2]}}


def test_order_identity(capsys):
    code, data = run_json(capsys, "order", "order", "1")
    assert code == 0 and data == {"kind": "finite", "m": 1, "certified": True}


def test_order_lower_bound_exits_one(capsys):
    code, data = run_json(capsys, "order", "order", "ab", "--max-level", "4")
    assert code == 1 and data["kind"] == "lower_bound"


def test_liebeck(capsys):
    assert run_json(capsys, "liebeck", "liebeck", "3", "3", "9") == (0, {"degree": 5})
    code, data = run_json(capsys, "error", "liebeck", "2", "6", "2")
    assert code == 2


def test_trivial(capsys):
    code, data = run_json(capsys, "trivial", "trivial", "(ad)^4")
    assert code == 0 and data == {"status": "trivial"}
    code, data = run_json(capsys, "trivial", "trivial", "abab")
    assert data["status"] == "nontrivial"


def test_orbits(capsys):
    code, data = run_json(capsys, "orbits", "orbits", "ab", "--group", "hanoi", "--level", "2")
    assert code == 0 and data["lengths"] == [9] and data["order_mod_level"] == 9


def test_fundamental(capsys):
    code, data = run_json(capsys, "fundamental", "fundamental", "ad")
    assert code == 0 and data["vertices"] == [[1, 1, 1]] and data["order"] == 4
    code, data = run_json(capsys, "fundamental", "fundamental", "ab", "--group", "hanoi")
    assert code == 1 and "error" in data


def test_reduce(capsys):
    code, data = run_json(capsys, "reduce", "reduce", "a", "--orbit-of", "1,1")
    assert code == 0 and data["roots"] == [[1, 1], [2, 1]] and data["root_label"] == "(1 2)"


def test_engel(capsys):
    code, data = run_json(capsys, "engel", "engel", "c", "abab", "--max-k", "6")
    assert code == 1 and data["verdict"] == {"kind": "survives", "n": 6}
    code, data = run_json(capsys, "engel", "engel", "b", "a")
    assert code == 0 and data["verdict"]["kind"] == "degree"


def test_survey(capsys):
    code, data = run_json(capsys, "survey", "survey", "--len", "1", "--max-k", "4")
    assert code == 0 and {r["x"] for r in data["reports"]} >= {"a", "b"}


def test_verify(capsys):
    code, data = run_json(capsys, "verify", "verify", "hanoi")
    assert code == 0 and data["passed"]
    code, data = run_json(capsys, "verify", "verify", "3.1")
    assert code == 0 and len(data["checks"]) == 2
    code, _ = run(capsys, "verify", "nope")
    assert code == 2


def test_catalog_list(capsys):
    code, data = run_json(capsys, "catalog", "catalog", "list")
    assert code == 0 and "hanoi" in {g["name"] for g in data["groups"]}


def test_group_file(capsys, tmp_path):
    path = tmp_path / "hanoi.grp"
    path.write_text(HANOI)
    code, data = run_json(capsys, "order", "order", "ab", "--group-file", str(path))
    assert code == 0 and data["certificate"] == {"s": 3, "v": [2]}
    bad = tmp_path / "bad.grp"
    bad.write_text("tree 3\ngen a = (a, 1) (1 2)\n")
    code, data = run_json(capsys, "error", "order", "a", "--group-file", str(bad))
    assert code == 2 and "line 2" in data["error"]


@pytest.mark.parametrize("argv", [["order", "(ab"], ["order", "ax"], ["bogus"], ["orbits", "a"],
                                  ["order", "a", "--group", "nope"]])
def test_usage_errors_exit_two(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == 2


def test_plain_text_output(capsys):
    code, out = run(capsys, "liebeck", "2", "4", "4")
    assert code == 0 and "6" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "engeltree", "liebeck", "2", "2", "2", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"degree": 2}
