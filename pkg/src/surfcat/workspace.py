"""Reading surface files.

A surface file is UTF-8 JSON::

    {"genus": 0, "boundaries": [6],
     "triangulation": {"flips": ["a2"]},
     "curves": {"g1": {"from": [0, 0], "to": [0, 3]},
                "g2": {"from": [0, 1], "cross": ["a1", "a2"], "to": [0, 4]},
                "g3": {"arc": "a3"},
                "b":  {"cycle": ["a1", "a2"], "lambda": "l1"}},
     "collections": {"I": ["g1", "a3"]}}

Disconnected surfaces use ``"components": [{"genus": .., "boundaries": ..}]``
instead of the two top-level keys.  Marked point ``[b, j]`` is the ``j``-th
point, anticlockwise, of boundary ``b``.  Arc names refer to the default
triangulation after the listed flips.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path as FsPath

from .curves import ClosedCurve, Curve, arc_curve, curve_between, curve_from_path
from .errors import InvalidCurve, SurfcatError
from .moves import flip
from .topology import MarkedSurface, build_surface, disjoint_union
from .triangulation import Triangulation, triangulate, tri


class SpecError(SurfcatError):
    """Malformed surface file."""


@dataclass
class Workspace:
    surface: MarkedSurface
    T: Triangulation
    curves: dict = field(default_factory=dict)
    collections: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)

    def curve(self, name: str):
        if name in self.curves:
            return self.curves[name]
        try:
            return arc_curve(self.T, self.T.arc_index(name))
        except InvalidCurve:
            raise InvalidCurve(f"unknown curve {name!r}") from None

    def collection(self, name: str) -> list:
        if name not in self.collections:
            raise InvalidCurve(f"unknown collection {name!r}")
        return self.collections[name]


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SpecError(f"{what} must be an integer")
    return x


def _surface(doc: dict) -> MarkedSurface:
    if "components" in doc:
        comps = doc["components"]
        if not isinstance(comps, list) or not comps:
            raise SpecError("'components' must be a non-empty list")
        return disjoint_union(*(_surface(c) for c in comps))
    if "boundaries" not in doc:
        raise SpecError("surface needs 'boundaries'")
    sizes = doc["boundaries"]
    if not isinstance(sizes, list):
        raise SpecError("'boundaries' must be a list of point counts")
    return build_surface(_int(doc.get("genus", 0), "genus"),
                         [_int(s, "boundary size") for s in sizes])


def _point(S: MarkedSurface, x) -> tuple:
    if not (isinstance(x, list) and len(x) == 2):
        raise SpecError(f"marked point must be [boundary, index], got {x!r}")
    p = (_int(x[0], "boundary"), _int(x[1], "point index"))
    if not S.has_point(p):
        raise InvalidCurve(f"no marked point {list(p)}")
    return p


def _unique(found: dict, what: str):
    if not found:
        raise InvalidCurve(f"no {what}")
    if len(found) > 1:
        raise InvalidCurve(f"ambiguous {what}: {len(found)} curves match")
    return next(iter(found.values()))


def resolve_path(T: Triangulation, p, names, q) -> Curve:
    """The unique tight curve from ``p`` to ``q`` crossing arcs ``names``."""
    names = list(names)
    found: dict = {}
    for c0 in range(len(T.vert)):
        if T.vert[c0] != p:
            continue
        states = [((), tri(c0))]
        for name in names:
            states = [(xs + (x,), tri(T.twin[x])) for xs, t in states
                      for x in range(3 * t, 3 * t + 3)
                      if T.twin[x] >= 0 and T.side_name(x) == name]
        for xs, t in states:
            for e in range(3 * t, 3 * t + 3):
                if T.vert[e] != q:
                    continue
                c = curve_from_path(T, c0, xs, e)
                if c is None:
                    continue
                tight = c.arc is not None if not names else c.names() == names
                if tight:
                    found.setdefault(c.key, c)
    return _unique(found, f"curve {list(p)} -> {list(q)} crossing {names}")


def resolve_cycle(T: Triangulation, names, lam="l1") -> ClosedCurve:
    names = list(names)
    if not names:
        raise InvalidCurve("empty cycle")
    found: dict = {}
    for x0 in range(len(T.twin)):
        if T.twin[x0] < 0 or T.side_name(x0) != names[0]:
            continue
        states = [((x0,), tri(T.twin[x0]))]
        for name in names[1:]:
            states = [(xs + (x,), tri(T.twin[x])) for xs, t in states
                      for x in range(3 * t, 3 * t + 3)
                      if T.twin[x] >= 0 and T.side_name(x) == name]
        for xs, t in states:
            if t != tri(x0):
                continue
            try:
                c = ClosedCurve(T, xs, lam)
            except InvalidCurve:
                continue
            if len(c.cross) == len(xs):
                found.setdefault(c.key, c)
    return _unique(found, f"closed curve crossing {names}")


def parse_curve(T: Triangulation, entry):
    if not isinstance(entry, dict):
        raise SpecError(f"curve must be an object, got {entry!r}")
    if "arc" in entry:
        return arc_curve(T, T.arc_index(entry["arc"]))
    if "cycle" in entry:
        return resolve_cycle(T, entry["cycle"], entry.get("lambda", "l1"))
    if "from" in entry and "to" in entry:
        p, q = _point(T.surface, entry["from"]), _point(T.surface, entry["to"])
        if "cross" in entry:
            return resolve_path(T, p, entry["cross"], q)
        c = curve_between(T, p, q)
        if c is None:
            raise InvalidCurve(f"{list(p)} and {list(q)} bound a boundary segment")
        return c
    raise SpecError(f"cannot read curve {entry!r}")


def curve_literal(c) -> dict:
    """JSON form of a curve, readable back by ``parse_curve``."""
    if isinstance(c, ClosedCurve):
        return {"cycle": c.names(), "lambda": c.lam}
    if c.arc is not None:
        return {"arc": c.T.arc_names[c.arc]}
    return {"from": list(c.start), "cross": c.names(), "to": list(c.end)}


def load_dict(doc: dict) -> Workspace:
    if not isinstance(doc, dict):
        raise SpecError("surface file must hold a JSON object")
    S = _surface(doc)
    T = triangulate(S)
    tdoc = doc.get("triangulation", {}) or {}
    for name in tdoc.get("flips", []):
        T = flip(T, T.arc_index(name)).target
    ws = Workspace(S, T, options=dict(doc.get("options", {}) or {}))
    for name, entry in (doc.get("curves", {}) or {}).items():
        try:
            ws.curves[name] = parse_curve(T, entry)
        except SurfcatError as e:
            raise type(e)(f"curve {name!r}: {e}") from None
    for name, members in (doc.get("collections", {}) or {}).items():
        if not isinstance(members, list):
            raise SpecError(f"collection {name!r} must be a list of curve names")
        ws.collections[name] = [ws.curve(m) for m in members]
    return ws


def load(path) -> Workspace:
    try:
        text = FsPath(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SpecError(f"cannot read {path}: {e.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None
    return load_dict(doc)
