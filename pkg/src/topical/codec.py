"""JSON encodings for scalars, vectors, functions and finite sets.

scalar:   "eps" | "top" | "e" | {"q": "p/r"}   ("e" only in Boolean mode output)
vector:   [scalar, ...]
function: {"fingen": [{"y": vector, "c": scalar}, ...]} | {"table": {"points": [...], "values": [...]}}
          | {"inverse_of": function} | {"const": scalar}
set:      {"points": [vector, ...]}
"""
from __future__ import annotations

import json
from typing import Optional

from gmpy2 import mpq

from .errors import DimensionError, ParseError
from .functions import Const, FinGen, Function, InverseOf, Table
from .polars import FiniteSet
from .scalar import EPS, TOP, E, Scalar, Semifield
from .semimodule import MAX_DIM, Vector

QMAX = Semifield.QMAX


def encode_scalar(a: Scalar, semifield: Semifield = QMAX):
    if a is EPS:
        return "eps"
    if a is TOP:
        return "top"
    if semifield is Semifield.BOOLEAN:
        return "e"
    return {"q": str(a)}


def decode_scalar(obj, semifield: Semifield = QMAX) -> Scalar:
    if obj == "eps":
        return EPS
    if obj == "top":
        return TOP
    if obj == "e":
        return E
    if isinstance(obj, dict) and set(obj) == {"q"}:
        q = obj["q"]
        if isinstance(q, bool) or not isinstance(q, (str, int)):
            raise ParseError(f"rational must be a 'p/r' string or an integer, got {q!r}")
        try:
            v = mpq(q)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {q!r}: {exc}") from None
        return semifield.check(v)
    raise ParseError(f"not a scalar encoding: {obj!r}")


def encode_vector(x: Vector, semifield: Semifield = QMAX):
    return [encode_scalar(c, semifield) for c in x]


def decode_vector(obj, semifield: Semifield = QMAX, dim: Optional[int] = None) -> Vector:
    if not isinstance(obj, list):
        raise ParseError(f"vector must be a list, got {obj!r}")
    v = tuple(decode_scalar(c, semifield) for c in obj)
    if any(c is TOP for c in v):
        raise ParseError("vector coordinates cannot be top")
    if not 1 <= len(v) <= MAX_DIM:
        raise DimensionError(f"dimension {len(v)} outside 1..{MAX_DIM}")
    if dim is not None and len(v) != dim:
        raise DimensionError(f"expected a {dim}-vector, got {len(v)} coordinates")
    return v


def encode_function(f: Function, semifield: Semifield = QMAX):
    if isinstance(f, FinGen):
        return {"fingen": [{"y": encode_vector(y, semifield), "c": encode_scalar(c, semifield)}
                           for y, c in f.generators]}
    if isinstance(f, Table):
        return {"table": {"points": [encode_vector(p, semifield) for p in f.table],
                          "values": [encode_scalar(v, semifield) for v in f.table.values()]}}
    if isinstance(f, InverseOf):
        return {"inverse_of": encode_function(f.f, semifield)}
    if isinstance(f, Const):
        return {"const": encode_scalar(f.c, semifield)}
    raise TypeError(f"{type(f).__name__} has no JSON encoding")


def decode_function(obj, semifield: Semifield = QMAX, dim: Optional[int] = None) -> Function:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ParseError(f"not a function encoding: {obj!r}")
    (tag, body), = obj.items()
    try:
        if tag == "fingen":
            if not isinstance(body, list):
                raise ParseError("fingen takes a list of generators")
            gens = []
            for g in body:
                if not isinstance(g, dict) or set(g) != {"y", "c"}:
                    raise ParseError(f"generator must have keys y and c: {g!r}")
                gens.append((decode_vector(g["y"], semifield, dim), decode_scalar(g["c"], semifield)))
            if not gens and dim is None:
                raise ParseError("an empty fingen needs --dim")
            return FinGen(gens, dim)
        if tag == "table":
            if not isinstance(body, dict) or set(body) != {"points", "values"}:
                raise ParseError("table needs points and values")
            pts = [decode_vector(p, semifield, dim) for p in body["points"]]
            vals = [decode_scalar(v, semifield) for v in body["values"]]
            return Table(pts, vals)
        if tag == "inverse_of":
            return InverseOf(decode_function(body, semifield, dim))
        if tag == "const":
            if dim is None:
                raise ParseError("a constant function needs --dim")
            return Const(decode_scalar(body, semifield), dim)
    except (DimensionError, ParseError):
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unknown function tag {tag!r}")


def encode_set(G: FiniteSet, semifield: Semifield = QMAX):
    return {"points": [encode_vector(p, semifield) for p in G.points]}


def decode_set(obj, semifield: Semifield = QMAX, dim: Optional[int] = None) -> FiniteSet:
    if not isinstance(obj, dict) or set(obj) != {"points"} or not isinstance(obj["points"], list):
        raise ParseError(f"not a set encoding: {obj!r}")
    pts = [decode_vector(p, semifield, dim) for p in obj["points"]]
    if dim is None:
        if not pts:
            raise ParseError("an empty set needs --dim")
        dim = len(pts[0])
    return FiniteSet.of(pts, dim)


def dumps(obj) -> str:
    """Compact, key-order-preserving JSON: identical input gives identical bytes."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)
