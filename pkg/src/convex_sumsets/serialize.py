"""Canonical JSON encoding of numbers and bodies.

Rationals are strings ``"p/q"``; irrational field elements are objects
``{"a": "p/q", "b": ..., "c": ..., "d": ...}``.  Bodies carry a ``type`` tag.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bodies import BoxUnion, PointSet, VPolytope, Zonotope
from .regions import PolygonUnion
from .scalar import Scalar, format_rational, parse_rational

__all__ = [
    "encode_number",
    "decode_number",
    "encode_body",
    "decode_body",
    "dumps",
    "load_bodies",
]


def encode_number(x) -> Any:
    if x is None:
        return None
    if isinstance(x, Scalar):
        return format_rational(x.a) if x.is_rational() else x.to_json()
    if isinstance(x, bool):
        raise TypeError("bool is not a number")
    return format_rational(Fraction(x))


def decode_number(obj):
    """Fraction for ``"p/q"`` strings and ints, Scalar (or Fraction) for objects."""
    if isinstance(obj, bool):
        raise ValueError("bool is not a number")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, dict):
        s = Scalar.from_json(obj)
        return s.a if s.is_rational() else s
    raise ValueError(f"cannot decode number from {obj!r}")


def _pt(p):
    return [encode_number(x) for x in p]


def encode_body(body) -> dict:
    if isinstance(body, VPolytope):
        return {"type": "vpolytope", "dim": body.dim, "vertices": [_pt(v) for v in body.vertices]}
    if isinstance(body, Zonotope):
        return {"type": "zonotope", "dim": body.dim, "center": _pt(body.center),
                "generators": [_pt(g) for g in body.generators]}
    if isinstance(body, BoxUnion):
        return {"type": "boxunion", "dim": body.dim,
                "boxes": [{"lo": _pt(lo), "hi": _pt(hi)} for lo, hi in body.boxes]}
    if isinstance(body, PointSet):
        return {"type": "pointset", "dim": body.dim, "points": [_pt(p) for p in sorted(body.points)]}
    if isinstance(body, PolygonUnion):
        return {"type": "polygonunion", "dim": 2,
                "pieces": [[_pt(v) for v in P.vertices] for P in body.pieces]}
    raise TypeError(f"cannot encode {type(body).__name__}")


def _points(obj, key):
    seq = obj.get(key)
    if not isinstance(seq, list):
        raise ValueError(f"field {key!r} must be a list")
    out = []
    for p in seq:
        if not isinstance(p, list):
            raise ValueError(f"point in {key!r} must be a list")
        out.append(tuple(decode_number(x) for x in p))
    return out


def _check_dim(obj, dim):
    if "dim" in obj and obj["dim"] != dim:
        raise ValueError(f"declared dim {obj['dim']} does not match coordinates ({dim})")


def decode_body(obj: dict):
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("body must be an object with a 'type' field")
    kind = obj["type"]
    if kind == "vpolytope":
        verts = _points(obj, "vertices")
        if not verts:
            raise ValueError("vpolytope needs vertices")
        _check_dim(obj, len(verts[0]))
        return VPolytope(verts)
    if kind == "zonotope":
        center = tuple(decode_number(x) for x in obj.get("center", []))
        _check_dim(obj, len(center))
        return Zonotope(center, _points(obj, "generators") if "generators" in obj else [])
    if kind == "boxunion":
        boxes = []
        for b in obj.get("boxes", []):
            if not isinstance(b, dict):
                raise ValueError("box must be an object with 'lo' and 'hi'")
            lo = tuple(decode_number(x) for x in b["lo"])
            hi = tuple(decode_number(x) for x in b["hi"])
            boxes.append((lo, hi))
        U = BoxUnion(boxes, obj.get("dim"))
        return U
    if kind == "pointset":
        pts = _points(obj, "points")
        return PointSet(pts, obj.get("dim"))
    if kind == "polygonunion":
        pieces = obj.get("pieces", [])
        return PolygonUnion([VPolytope([tuple(decode_number(x) for x in v) for v in piece])
                             for piece in pieces])
    raise ValueError(f"unknown body type {kind!r}")


def _default(o):
    if isinstance(o, (Fraction, Scalar)):
        return encode_number(o)
    if hasattr(o, "to_json"):
        return o.to_json()
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


def dumps(obj, **kw) -> str:
    """``json.dumps`` that understands Fractions, Scalars and reports."""
    kw.setdefault("sort_keys", True)
    return json.dumps(obj, default=_default, **kw)


def load_bodies(obj) -> tuple[list, dict]:
    """Bodies and parameters from a decoded bodies file.

    Accepted shapes: a list of bodies, or ``{"bodies": [...], "params": {...}}``.
    """
    if isinstance(obj, list):
        raw, params = obj, {}
    elif isinstance(obj, dict) and "bodies" in obj:
        raw, params = obj["bodies"], obj.get("params", {})
        if not isinstance(params, dict):
            raise ValueError("'params' must be an object")
    else:
        raise ValueError("expected a list of bodies or an object with 'bodies'")
    if not isinstance(raw, list):
        raise ValueError("'bodies' must be a list")
    return [decode_body(b) for b in raw], params
