"""JSON schemas for the command-line output (draft 2020-12)."""

from __future__ import annotations

_VERTEX = {"type": "array", "items": {"type": "integer", "minimum": 1}}

ORDER = {
    "type": "object",
    "oneOf": [
        {"properties": {"kind": {"const": "finite"}, "m": {"type": "integer", "minimum": 1},
                        "certified": {"type": "boolean"}},
         "required": ["kind", "m", "certified"]},
        {"properties": {"kind": {"const": "infinite"},
                        "certificate": {"type": "object",
                                        "properties": {"s": {"type": "integer", "minimum": 2}, "v": _VERTEX},
                                        "required": ["s", "v"], "additionalProperties": False}},
         "required": ["kind", "certificate"]},
        {"properties": {"kind": {"const": "lower_bound"}, "bound": {"type": "integer", "minimum": 1}},
         "required": ["kind", "bound"]},
    ],
}

TRIVIAL = {
    "type": "object",
    "properties": {"status": {"enum": ["trivial", "nontrivial", "undecided"]}, "witness": _VERTEX},
    "required": ["status"],
    "additionalProperties": False,
}

ORBITS = {
    "type": "object",
    "properties": {
        "level": {"type": "integer", "minimum": 0},
        "lengths": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "order_mod_level": {"type": "integer", "minimum": 1},
        "orbits": {"type": "array", "items": {"type": "array", "items": _VERTEX}},
    },
    "required": ["level", "lengths", "order_mod_level", "orbits"],
    "additionalProperties": False,
}

FUNDAMENTAL = {
    "type": "object",
    "oneOf": [
        {"properties": {"vertices": {"type": "array", "items": _VERTEX},
                        "lengths": {"type": "array", "items": {"type": "integer"}},
                        "level": {"type": "integer"}, "order": {"type": "integer"},
                        "certified": {"type": "boolean"}},
         "required": ["vertices", "lengths", "level", "order", "certified"], "additionalProperties": False},
        {"properties": {"error": {"type": "string"}}, "required": ["error"], "additionalProperties": False},
    ],
}

REDUCE = {
    "type": "object",
    "properties": {
        "roots": {"type": "array", "items": _VERTEX},
        "level": {"type": "integer", "minimum": 0},
        "tree": {"type": "object",
                 "properties": {"preperiod": {"type": "array", "items": {"type": "integer"}},
                                "period": {"type": "array", "items": {"type": "integer"}}},
                 "required": ["preperiod", "period"]},
        "root_label": {"type": "string"},
        "level_orders": {"type": "array", "items": {"type": "integer"}},
    },
    "required": ["roots", "level", "tree", "root_label", "level_orders"],
    "additionalProperties": False,
}

_VERDICT = {
    "type": "object",
    "properties": {"kind": {"enum": ["degree", "survives", "undecided"]}, "n": {"type": "integer", "minimum": 0},
                   "never": {"type": "boolean"}},
    "required": ["kind", "n"],
    "additionalProperties": False,
}

ENGEL = {
    "type": "object",
    "properties": {"g": {"type": "string"}, "x": {"type": "string"}, "verdict": _VERDICT},
    "required": ["g", "x", "verdict"],
    "additionalProperties": False,
}

SURVEY = {
    "type": "object",
    "properties": {
        "group": {"type": "string"},
        "reports": {"type": "array", "items": {
            "type": "object",
            "properties": {
                "x": {"type": "string"},
                "class": {"type": "string"},
                "order": ORDER,
                "probes": {"type": "array", "items": {
                    "type": "object",
                    "properties": {"g": {"type": "string"}, "verdict": _VERDICT},
                    "required": ["g", "verdict"]}},
                "all_vanish": {"type": "boolean"},
                "counterexample": {"type": ["string", "null"]},
                "max_degree_seen": {"type": "integer"},
            },
            "required": ["x", "class", "order", "probes", "all_vanish", "counterexample", "max_degree_seen"],
        }},
    },
    "required": ["group", "reports"],
}

LIEBECK = {
    "type": "object",
    "properties": {"degree": {"type": "integer", "minimum": 1}},
    "required": ["degree"],
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "properties": {
        "id": {"type": "string"},
        "passed": {"type": "boolean"},
        "checks": {"type": "array", "items": {
            "type": "object",
            "properties": {"id": {"type": "string"}, "title": {"type": "string"}, "passed": {"type": "boolean"},
                           "elapsed": {"type": "number"}, "details": {"type": "object"}},
            "required": ["id", "title", "passed", "elapsed", "details"]}},
    },
    "required": ["id", "passed", "checks"],
}

CATALOG = {
    "type": "object",
    "properties": {"groups": {"type": "array", "items": {
        "type": "object",
        "properties": {"name": {"type": "string"}, "generators": {"type": "array", "items": {"type": "string"}},
                       "tree": {"type": "string"}, "provenance": {"type": "string"}},
        "required": ["name", "generators", "tree", "provenance"]}}},
    "required": ["groups"],
}

ERROR = {
    "type": "object",
    "properties": {"error": {"type": "string"}},
    "required": ["error"],
}

SCHEMAS = {
    "order": ORDER,
    "trivial": TRIVIAL,
    "orbits": ORBITS,
    "fundamental": FUNDAMENTAL,
    "reduce": REDUCE,
    "engel": ENGEL,
    "survey": SURVEY,
    "liebeck": LIEBECK,
    "verify": VERIFY,
    "catalog": CATALOG,
    "error": ERROR,
}
