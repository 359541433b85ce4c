"""JSON encodings of the library's values and the report schema.

Field elements are integer codes (see fields.py).  Polynomials in A are
coefficient lists, constant term first.  Laurent series are
{top_exponent, coefficients, precision} with coefficients listed from
theta^top_exponent downwards.
"""

import json
from fractions import Fraction

from .bracket import BracketFrac
from .fields import FqElem
from .laurent import Laurent
from .poly import PolyA
from .ratfunc import RatK


def laurent_json(x):
    return {"top_exponent": x.v, "coefficients": list(x.c), "precision": x.prec}


def poly_json(a):
    return list(a.c)


def encode(x):
    """Recursively turn library values into JSON-ready data."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x if x == x and abs(x) != float("inf") else str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, FqElem):
        return x.v
    if isinstance(x, PolyA):
        return poly_json(x)
    if isinstance(x, Laurent):
        return laurent_json(x)
    if isinstance(x, BracketFrac):
        x = x.to_ratk()
    if isinstance(x, RatK):
        return {"num": poly_json(x.num), "den": poly_json(x.den)}
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    if hasattr(x, "describe"):
        return encode(x.describe())
    return str(x)


def check(name, ok, lhs=None, rhs=None, residual_degree=None, **extra):
    """One check record; extra keys land under 'details'."""
    out = {"name": name, "status": "pass" if ok else "fail", "lhs": encode(lhs), "rhs": encode(rhs),
           "residual_degree": residual_degree}
    if extra:
        out["details"] = encode(extra)
    return out


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


_INT_OR_NULL = {"type": ["integer", "null"]}

_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "drinfeld-tensor report",
    "type": "object",
    "required": ["command", "status", "precision", "cutoff"],
    "properties": {
        "command": {"type": "string"},
        "status": {"enum": ["pass", "fail", "info", "error"]},
        "exit_code": {"type": "integer"},
        "precision": _INT_OR_NULL,
        "cutoff": _INT_OR_NULL,
        "config": {"type": "object"},
        "checks": {"type": "array", "items": {"$ref": "#/$defs/check"}},
        "result": {},
        "error": {
            "type": "object",
            "required": ["class", "message"],
            "properties": {"class": {"enum": ["config", "guard", "check-failed", "internal"]},
                           "message": {"type": "string"}},
        },
    },
    "$defs": {
        "poly": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "laurent": {
            "type": "object",
            "required": ["top_exponent", "coefficients", "precision"],
            "properties": {
                "top_exponent": _INT_OR_NULL,
                "coefficients": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                "precision": _INT_OR_NULL,
            },
            "additionalProperties": False,
        },
        "check": {
            "type": "object",
            "required": ["name", "status", "lhs", "rhs", "residual_degree"],
            "properties": {
                "name": {"type": "string"},
                "status": {"enum": ["pass", "fail"]},
                "residual_degree": _INT_OR_NULL,
                "lhs": {}, "rhs": {}, "details": {},
            },
        },
    },
}


def report_schema():
    return json.loads(json.dumps(_SCHEMA))


def validate(report):
    """Raise jsonschema.ValidationError when the report does not fit the schema."""
    import jsonschema
    jsonschema.validate(report, _SCHEMA)
