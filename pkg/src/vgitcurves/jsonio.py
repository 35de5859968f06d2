"""JSON encoding of weight systems, stratum unions, curves and valued crimping."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .crimping import ValuedCrimping, ValuedEntry, format_rational, parse_rational
from .curve import Component, CurveGraph, HDeclaration, Singularity
from .vgit import StratumUnion, WeightSystem, WeightSystemError


class SchemaError(ValueError):
    """Malformed input; ``pointer`` names the offending field."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer


def dumps(doc: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def load_path(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError("/", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise SchemaError("/", f"cannot read {path}: {exc.strerror}") from exc


def _need(doc: Any, key: str, kind, ptr: str):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(f"{ptr}/{key}", "missing field")
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise SchemaError(f"{ptr}/{key}", f"expected {getattr(kind, '__name__', kind)}")
    return val


def _int(x: Any, ptr: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(ptr, "expected an integer")
    return x


def _rational(x: Any, ptr: str) -> Fraction:
    try:
        return parse_rational(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(ptr, f"expected a rational 'p/q' string ({exc})") from exc


def _point(x: Any, ptr: str) -> tuple[str, str]:
    if not (isinstance(x, list) and len(x) == 2 and all(isinstance(y, str) for y in x)):
        raise SchemaError(ptr, 'expected ["component", "point"]')
    return (x[0], x[1])


# ---------------------------------------------------------------- weight systems

def weight_system_from_json(doc: Any) -> WeightSystem:
    rank = _int(_need(doc, "rank", None, ""), "/rank")
    chi = _need(doc, "character", list, "")
    chi = [_int(x, f"/character/{i}") for i, x in enumerate(chi)]
    coords = []
    for i, c in enumerate(_need(doc, "coords", list, "")):
        label = _need(c, "label", str, f"/coords/{i}")
        w = _need(c, "weights", list, f"/coords/{i}")
        coords.append((label, tuple(_int(x, f"/coords/{i}/weights/{j}") for j, x in enumerate(w))))
    try:
        return WeightSystem(rank, tuple(coords), tuple(chi))
    except WeightSystemError as exc:
        raise SchemaError("/", str(exc)) from exc


def weight_system_to_json(ws: WeightSystem) -> dict:
    return ws.to_json()


def strata_to_json(u: StratumUnion) -> dict:
    return u.to_json()


def strata_from_json(doc: Any) -> StratumUnion:
    strata = _need(doc, "strata", list, "")
    for i, J in enumerate(strata):
        if not isinstance(J, list) or not all(isinstance(x, str) for x in J):
            raise SchemaError(f"/strata/{i}", "expected a list of labels")
    return StratumUnion.of(strata)


# ---------------------------------------------------------------- curves

def curve_from_json(doc: Any) -> CurveGraph:
    if not isinstance(doc, dict):
        raise SchemaError("/", "expected an object")
    comps = []
    for i, c in enumerate(_need(doc, "components", list, "")):
        ptr = f"/components/{i}"
        cid = _need(c, "id", str, ptr)
        genus = _int(_need(c, "genus", None, ptr), f"{ptr}/genus")
        pts = _need(c, "points", list, ptr)
        for j, p in enumerate(pts):
            if not isinstance(p, str):
                raise SchemaError(f"{ptr}/points/{j}", "expected a string")
        w = c.get("weierstrass", [])
        if not isinstance(w, list) or not all(isinstance(x, str) for x in w):
            raise SchemaError(f"{ptr}/weierstrass", "expected a list of point ids")
        comps.append(Component(cid, genus, tuple(pts), tuple(w)))
    marks = tuple(_point(x, f"/marks/{i}") for i, x in enumerate(doc.get("marks", [])))
    sings = []
    for i, s in enumerate(doc.get("singularities", [])):
        ptr = f"/singularities/{i}"
        k = _int(_need(s, "k", None, ptr), f"{ptr}/k")
        brs = tuple(_point(x, f"{ptr}/branches/{j}") for j, x in enumerate(_need(s, "branches", list, ptr)))
        crimp = s.get("crimping", [])
        if not isinstance(crimp, list):
            raise SchemaError(f"{ptr}/crimping", "expected a list")
        sings.append(Singularity(k, brs, tuple(_rational(x, f"{ptr}/crimping/{j}") for j, x in enumerate(crimp))))
    decls = []
    for i, d in enumerate(doc.get("h_declarations", [])):
        ptr = f"/h_declarations/{i}"
        pts = tuple(_point(x, f"{ptr}/points/{j}") for j, x in enumerate(_need(d, "points", list, ptr)))
        t = _need(d, "type", str, ptr)
        decls.append(HDeclaration(pts, t))
    return CurveGraph(tuple(comps), tuple(sings), marks, tuple(decls))


def curve_to_json(c: CurveGraph) -> dict:
    return {
        "components": [{"id": x.id, "genus": x.genus, "points": list(x.points), "weierstrass": list(x.weierstrass)}
                       for x in c.components],
        "marks": [list(p) for p in c.marks],
        "singularities": [{"k": s.k, "branches": [list(p) for p in s.branches],
                           "crimping": [format_rational(x) for x in s.crimping]} for s in c.singularities],
        "h_declarations": [{"points": [list(p) for p in d.points], "type": d.type} for d in c.h_declarations],
    }


# ---------------------------------------------------------------- valued crimping

def valued_from_json(doc: Any) -> ValuedCrimping:
    parity = _need(doc, "parity", str, "")
    m = _int(_need(doc, "m", None, ""), "/m")
    entries = []
    for i, e in enumerate(_need(doc, "entries", list, "")):
        ptr = f"/entries/{i}"
        v = _need(e, "val", None, ptr)
        if v != "inf":
            _int(v, f"{ptr}/val")
        try:
            entries.append(ValuedEntry.from_json(e))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(ptr, str(exc)) from exc
    try:
        return ValuedCrimping(parity, m, tuple(entries))
    except ValueError as exc:
        raise SchemaError("/", str(exc)) from exc


def valued_to_json(v: ValuedCrimping) -> dict:
    return {"parity": v.parity, "m": v.m, "entries": [e.to_json() for e in v.entries]}
