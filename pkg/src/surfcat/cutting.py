"""Cutting a marked surface along a rigid collection of arcs.

The collection is first made part of a triangulation by flips.  Cutting
then turns both sides of every collection arc into boundary; the pieces are
the classes of triangles still glued to each other.  Pieces that are single
triangles carry no curves and are dropped.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curves import ClosedCurve, Curve, Degenerate, Path, normalize, shift
from .errors import InvalidCurve, NotRigid
from .intersect import intersection_number
from .moves import Chart
from .topology import MarkedSurface
from .triangulation import Triangulation, nxt, tri


@dataclass(frozen=True)
class NotIn:
    """Membership answer for a curve that lies in no piece."""
    reason: str  # "core" or "crossing"


@dataclass
class Piece:
    index: int                  # 1-based
    surface: MarkedSurface      # the piece on its own, points labelled (k, j)
    triangles: frozenset
    point_map: dict             # piece label -> marked point of the original
    genus: int
    boundary_sizes: tuple[int, ...]

    @property
    def is_disk(self) -> bool:
        return self.genus == 0 and len(self.boundary_sizes) == 1

    @property
    def original_boundaries(self) -> frozenset:
        return frozenset(p[0] for p in self.point_map.values())


def check_rigid(I) -> list[Curve]:
    """Distinct members of ``I``; raises ``NotRigid`` if two of them cross or
    one crosses itself."""
    out: list[Curve] = []
    for c in I:
        if not isinstance(c, Curve):
            raise NotRigid("rigid collections contain arcs only")
        if c not in out:
            out.append(c)
    for i, a in enumerate(out):
        for b in out[i:]:
            if intersection_number(a, b):
                raise NotRigid(f"{a.names()} and {b.names()} cross")
    return out


def _cut_view(T: Triangulation, cut: set[int]):
    """Triangulation of the disjoint union of the pieces, same half-edge ids."""
    tw = [(-1 if T.arc_of[h] in cut else t) for h, t in enumerate(T.twin)]

    def cw_end(c: int) -> int:
        while tw[c] >= 0:
            c = nxt(tw[c])
        return c

    # pieces: triangles glued through uncut arcs
    parent = list(range(T.n_tri))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for h, t in enumerate(tw):
        if t >= 0:
            parent[find(tri(h))] = find(tri(t))
    groups: dict[int, list[int]] = {}
    for t in range(T.n_tri):
        groups.setdefault(find(t), []).append(t)

    succ = {}
    for h, t in enumerate(tw):
        if t < 0:
            succ[h] = cw_end(nxt(h))
    seen = set()
    cycles_of: dict[int, list[list[int]]] = {r: [] for r in groups}
    for h in sorted(succ):
        if h in seen:
            continue
        cyc = [h]
        seen.add(h)
        c = succ[h]
        while c != h:
            cyc.append(c)
            seen.add(c)
            c = succ[c]
        # start at the least original label, ties by corner id
        k = min(range(len(cyc)), key=lambda i: (T.vert[cyc[i]], cyc[i]))
        cycles_of[find(tri(h))].append(cyc[k:] + cyc[:k])

    info = []
    for r, tris in groups.items():
        cycles = sorted(cycles_of[r], key=lambda cy: (T.vert[cy[0]], cy[0]))
        V = sum(len(cy) for cy in cycles)
        glued = sum(1 for t in tris for i in range(3) if tw[3 * t + i] >= 0)
        E = glued // 2 + V
        chi = V - E + len(tris)
        b = len(cycles)
        g2 = 2 - chi - b
        if g2 % 2 or g2 < 0:  # pragma: no cover
            raise AssertionError("cut produced a non-orientable piece")
        info.append((min(T.vert[cy[0]] for cy in cycles), min(tris), tris, cycles, g2 // 2))
    info.sort(key=lambda x: (len(x[2]) == 1, x[0], x[1]))

    genera, bds, owner = [], [], []
    label_of_corner: dict[int, tuple] = {}
    point_maps = []
    for ci, (_, _, tris, cycles, g) in enumerate(info):
        genera.append(g)
        pm = {}
        for cy in cycles:
            k = len(bds)
            pts = []
            for j, c in enumerate(cy):
                lab = (k, j)
                pts.append(lab)
                pm[lab] = T.vert[c]
                label_of_corner[c] = lab
            bds.append(tuple(pts))
            owner.append(ci)
        point_maps.append(pm)
    vert = [label_of_corner[cw_end(c)] for c in range(len(tw))]
    arc_of = [(-1 if a in cut else a) for a in T.arc_of]
    surf = MarkedSurface(tuple(genera), tuple(bds), tuple(owner), checked=False)
    Tc = Triangulation(surf, tw, vert, arc_of, T.arc_names)
    return Tc, info, point_maps


class Cut:
    """``T0`` cut along the rigid collection ``I`` of curves on ``T0``."""

    def __init__(self, T0: Triangulation, I):
        self.base = T0
        self.core = check_rigid(I)
        chart = Chart(T0)
        ids: list[int] = []
        for c in self.core:
            ids.append(chart.make_arc(chart.to_current(c), keep=set(ids)))
        self.chart = chart
        self.T = chart.T
        self.core_arcs = frozenset(ids)
        Tc, info, pmaps = _cut_view(self.T, self.core_arcs)
        self.view = Tc
        self.pieces: list[Piece] = []
        self.piece_of_triangle: dict[int, int] = {}
        for ci, (_, _, tris, cycles, g) in enumerate(info):
            if len(tris) == 1:
                continue
            idx = len(self.pieces) + 1
            sizes = tuple(len(cy) for cy in cycles)
            bds = tuple(tuple((k, j) for j in range(m)) for k, m in enumerate(sizes))
            offset = min(lab[0] for lab in pmaps[ci])
            pm = {(lab[0] - offset, lab[1]): p for lab, p in pmaps[ci].items()}
            surf = MarkedSurface((g,), bds, (0,) * len(sizes))
            self.pieces.append(Piece(idx, surf, frozenset(tris), pm, g, sizes))
            for t in tris:
                self.piece_of_triangle[t] = idx

    @property
    def m(self) -> int:
        return len(self.pieces)

    def piece_of(self, obj) -> int | NotIn:
        """1-based piece holding ``obj`` (a curve on ``T0``)."""
        if obj.T is not self.base:
            raise InvalidCurve("curve is not on the base triangulation")
        cur = self.chart.to_current(obj)
        if isinstance(cur, ClosedCurve):
            xs = cur.cross
            if any(self.T.arc_of[x] in self.core_arcs for x in xs):
                return NotIn("crossing")
            return self.piece_of_triangle[tri(xs[0])]
        if cur.arc is not None:
            if cur.arc in self.core_arcs:
                return NotIn("core")
            return self.piece_of_triangle[tri(self.T.arc_half[cur.arc])]
        if any(self.T.arc_of[x] in self.core_arcs for x in cur.path.cross):
            return NotIn("crossing")
        return self.piece_of_triangle[tri(cur.path.start)]

    def internal_arcs(self, idx: int) -> list[int]:
        """Arc ids of the current triangulation lying inside piece ``idx``."""
        return [a for a in range(self.T.n_arcs) if a not in self.core_arcs
                and self.piece_of_triangle.get(tri(self.T.arc_half[a])) == idx]

    def arc_on_base(self, a: int) -> Curve:
        from .curves import arc_curve
        return self.chart.to_base(arc_curve(self.T, a))

    def shift_within(self, c: Curve, k: int = 1) -> Curve:
        """Move both ends of ``c`` ``k`` steps along the boundary of the piece
        containing it; the result is a curve on ``T0``."""
        p = self.piece_of(c)
        if isinstance(p, NotIn):
            raise InvalidCurve("curve does not lie in a single piece")
        cur = self.chart.to_current(c)
        moved = shift(Curve(self.view, cur.path), k)
        try:
            path = normalize(self.T, moved.path.start, moved.path.cross, moved.path.end)
        except Degenerate:  # pragma: no cover
            raise AssertionError("shift collapsed a curve")
        return self.chart.to_base(Curve(self.T, Path(path.start, path.cross, path.end)))


def cut_along(T0: Triangulation, I) -> Cut:
    return Cut(T0, I)


def curve_component(T0: Triangulation, I, obj) -> int | NotIn:
    return Cut(T0, I).piece_of(obj)
