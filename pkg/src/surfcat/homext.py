"""Ext^1 between curves through string-module Hom counts.

Each marked point ``p`` that is an endpoint gets two new neighbours on its
boundary, ``p-`` just before and ``p+`` just after, and the triangulation is
flipped until it contains the arc ``p- p+`` cutting off ``p``.  In that
refined surface

    dim Ext^1(g, d) = dim Hom(M(g), M(s d e)) + dim Hom(M(d), M(s g e))

where ``s x e`` moves both endpoints of ``x`` one step anticlockwise.
"""
from __future__ import annotations

import weakref
from fractions import Fraction

from .curves import ClosedCurve, Curve, Path, pivot_end_path, shift
from .errors import Unsupported
from .moves import Chart, insert_point
from .stralg import (GentleAlgebra, Quiver, StringWord, hom_dim,
                     quiver_from_triangulation, string_of_curve)
from .triangulation import Triangulation, nxt


def before(p) -> tuple:
    return tuple(p) + (-1,)


def after(p) -> tuple:
    return tuple(p) + (1,)


class Refinement:
    """A triangulation of the refined surface containing every corner arc."""

    def __init__(self, T: Triangulation, points):
        self.base = T
        self.points = tuple(sorted(set(points)))
        chart = Chart(T)
        for p in self.points:
            cur = chart.T
            prev_p = cur.surface.next_point(p, -1)
            chart.push(insert_point(cur, cur.bd_out[prev_p], before(p)))
            cur = chart.T
            chart.push(insert_point(cur, cur.bd_out[p], after(p)))
        self.corner_arcs: dict = {}
        for p in self.points:
            cur = chart.T
            h = cur.bd_out[before(p)]
            path = pivot_end_path(cur, Path(h, (), nxt(h)), 1)
            self.corner_arcs[p] = chart.make_arc(
                Curve(cur, path), keep=set(self.corner_arcs.values()))
        self.chart = chart
        self.T = chart.T
        self.algebra: GentleAlgebra = quiver_from_triangulation(self.T)
        self._lift: dict = {}
        self._words: dict = {}

    def lift(self, c: Curve) -> Curve:
        out = self._lift.get(c.key)
        if out is None:
            out = self.chart.to_current(c)
            self._lift[c.key] = out
        return out

    def word(self, c: Curve) -> StringWord | None:
        """String of a curve on the refined triangulation; ``None`` when the
        curve is one of its arcs (zero module)."""
        w = self._words.get(c.key, False)
        if w is False:
            w = None if c.arc is not None else string_of_curve(self.T, c, self.algebra)
            self._words[c.key] = w
        return w


_CACHE: "weakref.WeakKeyDictionary[Triangulation, dict]" = weakref.WeakKeyDictionary()


def refinement(T: Triangulation, points) -> Refinement:
    per = _CACHE.setdefault(T, {})
    key = frozenset(points)
    r = per.get(key)
    if r is None:
        r = Refinement(T, key)
        per[key] = r
    return r


refine = refinement


def is_rigid_object(c) -> bool:
    """True when ``Ext^1(c, c)`` vanishes, i.e. ``c`` has no self-crossing."""
    return ext1_dim(c, c) == 0


def ext1_dim(g, d, refine_all: bool = False) -> int:
    """dim Ext^1 between two string objects given as curves on one
    triangulation.  ``refine_all`` refines at every marked point, which lets
    many pairs share one refinement."""
    if isinstance(g, ClosedCurve) or isinstance(d, ClosedCurve):
        raise Unsupported("band Ext out of scope")
    if g.T is not d.T:
        raise ValueError("curves live on different triangulations")
    T = g.T
    pts = T.surface.points if refine_all else {g.start, g.end, d.start, d.end}
    R = refinement(T, pts)
    g1, d1 = R.lift(g), R.lift(d)
    return (hom_dim(R.word(g1), R.word(_shifted(R, d1)))
            + hom_dim(R.word(d1), R.word(_shifted(R, g1))))


def _shifted(R: Refinement, c: Curve) -> Curve:
    key = ("shift", c.key)
    out = R._lift.get(key)
    if out is None:
        out = shift(c)
        R._lift[key] = out
    return out


# ---------------------------------------------------------------- oracle

def string_module(q: Quiver, w: StringWord):
    """Basis vector ``k`` sits at vertex ``w.vertices[k]``; returns per-vertex
    basis lists and, per arrow, the (source index, target index) pairs it
    maps."""
    at: dict[int, list[int]] = {}
    for k, v in enumerate(w.vertices):
        at.setdefault(v, []).append(k)
    acts: dict[int, list[tuple[int, int]]] = {a: [] for a in range(len(q.arrows))}
    for k, (a, s) in enumerate(w.letters):
        if s > 0:
            acts[a].append((k, k + 1))
        else:
            acts[a].append((k + 1, k))
    return at, acts


def _rank(rows: list[list[Fraction]], ncols: int) -> int:
    rank = 0
    rows = [r[:] for r in rows]
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                ri = rows[i]
                for c in range(col, ncols):
                    if pr[c]:
                        ri[c] -= f * pr[c]
        rank += 1
    return rank


def hom_dim_linear(q: Quiver, w: StringWord | None, v: StringWord | None) -> int:
    """dim Hom(M(w), M(v)) by solving the intertwining equations exactly."""
    if w is None or v is None:
        return 0
    wat, wact = string_module(q, w)
    vat, vact = string_module(q, v)
    # unknown f[y, x] maps basis x of M(w) to basis y of M(v), same vertex
    var = {}
    for vert, xs in wat.items():
        for x in xs:
            for y in vat.get(vert, []):
                var[(y, x)] = len(var)
    if not var:
        return 0
    rows = []
    wmap = {a: dict(pairs) for a, pairs in wact.items()}
    vmap = {a: dict(pairs) for a, pairs in vact.items()}
    for a, (src, dst) in enumerate(q.arrows):
        # f_dst . M(w)_a = M(v)_a . f_src, entry (y, x) for x at src, y at dst
        for x in wat.get(src, []):
            for y in vat.get(dst, []):
                row = [Fraction(0)] * len(var)
                xw = wmap[a].get(x)
                if xw is not None:
                    row[var[(y, xw)]] += 1
                for yv_src, yv_dst in vact[a]:
                    if yv_dst == y and (yv_src, x) in var:
                        row[var[(yv_src, x)]] -= 1
                if any(row):
                    rows.append(row)
    return len(var) - _rank(rows, len(var))
