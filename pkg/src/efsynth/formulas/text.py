"""Human-readable rendering and canonical JSON serialization of formulas."""
from __future__ import annotations

import json

from ..errors import FormulaParseError, EFSynthError
from .ast import (
    FALSE, TRUE, And, Const, DistCmp, Equal, Exists, FalseConst, Forall,
    GammaCmp, Label, Not, Or, PrefCmp, SigmaCmp, Succ, SuffCmp, TrueConst, Var,
)
from .macros import expand

__all__ = ["render", "serialize", "deserialize", "STYLES"]

STYLES = ("ascii", "unicode", "macro-names")

_ASCII = {
    "and": " & ", "or": " | ", "not": "~", "exists": "exists ", "forall": "forall ",
    "true": "true", "false": "false",
    "<=": "<=", ">=": ">=", "!=": "!=", "gamma": "gamma", "sigma": "sigma",
}
_UNICODE = {
    "and": " ∧ ", "or": " ∨ ", "not": "¬", "exists": "∃", "forall": "∀",
    "true": "⊤", "false": "⊥",
    "<=": "≤", ">=": "≥", "!=": "≠", "gamma": "γ", "sigma": "σ",
}
_LEAVES = (DistCmp, PrefCmp, SuffCmp, GammaCmp, SigmaCmp)


def _cmp(c, sym):
    return sym.get(c, c)


def _render(f, sym):
    if isinstance(f, DistCmp):
        return f"d(min,max) {_cmp(f.cmp, sym)} {f.n}"
    if isinstance(f, (PrefCmp, SuffCmp)):
        end = "pref" if isinstance(f, PrefCmp) else "suff"
        return f"{end}_{f.k} {_cmp(f.cmp, sym)} {json.dumps(f.s, ensure_ascii=False)}"
    if isinstance(f, (GammaCmp, SigmaCmp)):
        name = sym["gamma"] if isinstance(f, GammaCmp) else sym["sigma"]
        return f"{name}({json.dumps(f.alpha, ensure_ascii=False)}) {_cmp(f.cmp, sym)} {f.n}"
    if isinstance(f, Equal):
        return f"{f.t1} = {f.t2}"
    if isinstance(f, Succ):
        return f"S({f.t1}, {f.t2})"
    if isinstance(f, Label):
        return f"P_{f.symbol}({f.t})"
    if isinstance(f, TrueConst):
        return sym["true"]
    if isinstance(f, FalseConst):
        return sym["false"]
    if isinstance(f, Not):
        inner = _render(f.arg, sym)
        if isinstance(f.arg, (Equal, *_LEAVES)):
            inner = f"({inner})"
        return sym["not"] + inner
    if isinstance(f, (And, Or)):
        if not f.args:
            return sym["true"] if isinstance(f, And) else sym["false"]
        joiner = sym["and"] if isinstance(f, And) else sym["or"]
        return "(" + joiner.join(_render(a, sym) for a in f.args) + ")"
    if isinstance(f, (Exists, Forall)):
        q = sym["exists"] if isinstance(f, Exists) else sym["forall"]
        body = _render(f.body, sym)
        if not body.startswith("("):
            body = f"({body})"
        return f"{q}{f.var} {body}"
    raise TypeError(f"not a formula: {f!r}")


def render(f, style: str = "macro-names") -> str:
    """Deterministic text for ``f``.

    ``macro-names`` keeps macro leaves by name (``pref_1 = "s"``); the
    ``ascii`` and ``unicode`` styles print pure first-order syntax, expanding
    macro leaves first.
    """
    if style == "macro-names":
        return _render(f, _ASCII)
    if style == "ascii":
        return _render(expand(f), _ASCII)
    if style == "unicode":
        return _render(expand(f), _UNICODE)
    raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")


# serialization

def _term_obj(t):
    if isinstance(t, Const):
        return t.name
    return {"var": t.name}


def _to_obj(f):
    if isinstance(f, DistCmp):
        return {"kind": "dist", "cmp": f.cmp, "n": f.n}
    if isinstance(f, PrefCmp):
        return {"kind": "pref", "cmp": f.cmp, "k": f.k, "s": f.s}
    if isinstance(f, SuffCmp):
        return {"kind": "suff", "cmp": f.cmp, "k": f.k, "s": f.s}
    if isinstance(f, GammaCmp):
        return {"kind": "gamma", "cmp": f.cmp, "alpha": f.alpha, "n": f.n}
    if isinstance(f, SigmaCmp):
        return {"kind": "sigma", "cmp": f.cmp, "alpha": f.alpha, "n": f.n}
    if isinstance(f, Equal):
        return {"kind": "eq", "t1": _term_obj(f.t1), "t2": _term_obj(f.t2)}
    if isinstance(f, Succ):
        return {"kind": "succ", "t1": _term_obj(f.t1), "t2": _term_obj(f.t2)}
    if isinstance(f, Label):
        return {"kind": "label", "symbol": f.symbol, "t": _term_obj(f.t)}
    if isinstance(f, TrueConst):
        return {"kind": "true"}
    if isinstance(f, FalseConst):
        return {"kind": "false"}
    if isinstance(f, Not):
        return {"kind": "not", "arg": _to_obj(f.arg)}
    if isinstance(f, And):
        return {"kind": "and", "args": [_to_obj(a) for a in f.args]}
    if isinstance(f, Or):
        return {"kind": "or", "args": [_to_obj(a) for a in f.args]}
    if isinstance(f, Exists):
        return {"kind": "exists", "var": f.var, "body": _to_obj(f.body)}
    if isinstance(f, Forall):
        return {"kind": "forall", "var": f.var, "body": _to_obj(f.body)}
    raise TypeError(f"not a formula: {f!r}")


def _canonical(obj):
    # "kind" first, remaining fields in sorted order, all the way down
    if isinstance(obj, list):
        return [_canonical(x) for x in obj]
    if isinstance(obj, dict):
        keys = sorted(obj, key=lambda k: (k != "kind", k))
        return {k: _canonical(obj[k]) for k in keys}
    return obj


def to_json_obj(f):
    """Plain JSON-ready dicts, in canonical field order."""
    return _canonical(_to_obj(f))


def serialize(f) -> str:
    """Canonical compact JSON: ``kind`` first, other fields sorted, no whitespace."""
    return json.dumps(to_json_obj(f), separators=(",", ":"), ensure_ascii=False)


def _field(obj, key, path):
    if key not in obj:
        raise FormulaParseError(f"missing field {key!r}", path)
    return obj[key]


def _term_from(obj, path):
    if obj in ("min", "max"):
        return Const(obj)
    if isinstance(obj, dict) and set(obj) == {"var"}:
        try:
            return Var(obj["var"])
        except (TypeError, ValueError) as exc:
            raise FormulaParseError(str(exc), path) from None
    raise FormulaParseError(f"bad term {obj!r}", path)


_LEAF_FIELDS = {
    "dist": (DistCmp, ("cmp", "n")),
    "pref": (PrefCmp, ("cmp", "k", "s")),
    "suff": (SuffCmp, ("cmp", "k", "s")),
    "gamma": (GammaCmp, ("cmp", "alpha", "n")),
    "sigma": (SigmaCmp, ("cmp", "alpha", "n")),
}


def from_json_obj(obj, path="$"):
    if not isinstance(obj, dict):
        raise FormulaParseError(f"expected an object, got {type(obj).__name__}", path)
    op = _field(obj, "kind", path)
    try:
        if op in _LEAF_FIELDS:
            cls, fields = _LEAF_FIELDS[op]
            values = [_field(obj, k, path) for k in fields]
            for k, v in zip(fields, values):
                if k in ("n", "k") and (not isinstance(v, int) or isinstance(v, bool)):
                    raise FormulaParseError(f"field {k!r} must be an integer", f"{path}.{k}")
            return cls(*values)
        if op in ("eq", "succ"):
            cls = Equal if op == "eq" else Succ
            return cls(_term_from(_field(obj, "t1", path), f"{path}.t1"),
                       _term_from(_field(obj, "t2", path), f"{path}.t2"))
        if op == "label":
            return Label(_field(obj, "symbol", path), _term_from(_field(obj, "t", path), f"{path}.t"))
        if op == "true":
            return TRUE
        if op == "false":
            return FALSE
        if op == "not":
            return Not(from_json_obj(_field(obj, "arg", path), f"{path}.arg"))
        if op in ("and", "or"):
            args = _field(obj, "args", path)
            if not isinstance(args, list):
                raise FormulaParseError("args must be a list", f"{path}.args")
            parts = tuple(from_json_obj(a, f"{path}.args[{i}]") for i, a in enumerate(args))
            return And(parts) if op == "and" else Or(parts)
        if op in ("exists", "forall"):
            cls = Exists if op == "exists" else Forall
            return cls(_field(obj, "var", path), from_json_obj(_field(obj, "body", path), f"{path}.body"))
    except FormulaParseError:
        raise
    except (TypeError, ValueError, EFSynthError) as exc:
        raise FormulaParseError(str(exc), path) from None
    raise FormulaParseError(f"unknown kind {op!r}", path)


def deserialize(text: str):
    """Inverse of :func:`serialize`.

    Also accepts an envelope object ``{"formula": ..., ...}`` as printed by
    ``efsynth synth --json``.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormulaParseError(exc.msg, exc.pos) from None
    if isinstance(obj, dict) and "kind" not in obj and "formula" in obj:
        return from_json_obj(obj["formula"], "$.formula")
    return from_json_obj(obj)
