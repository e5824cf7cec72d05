"""Minimal intersection numbers of curves.

``intersection_number`` works on one lift of each curve in the universal
cover: two lifts can only cross along the (unique) run of triangles they
share, and whether they do is decided by which sides they arrive from and
leave by.  ``developed_intersection`` is a slower, independent check that
lays the lifts out in an explicit disk and compares endpoint order on its
boundary circle.
"""
from __future__ import annotations

from . import kernels
from .curves import Curve, Path, reverse_path
from .triangulation import Triangulation, nxt, tri


def features(T: Triangulation, p: Path):
    """Per-position triangle, entry code, exit code, plus crossed sides."""
    tw = T.twin
    xs = p.cross
    tris = [tri(p.start)] + [tri(tw[x]) for x in xs]
    ent = [2 * (p.start % 3)] + [2 * (tw[x] % 3) + 1 for x in xs]
    ext = [2 * (x % 3) + 1 for x in xs] + [2 * (p.end % 3)]
    return tris, ent, ext, list(xs)


def _count(T: Triangulation, pa: Path, pb: Path, same: bool) -> int:
    fa = features(T, pa)
    total = kernels.segment_crossings(*fa, *features(T, pb), True, same)
    total += kernels.segment_crossings(*fa, *features(T, reverse_path(T, pb)),
                                       False, False)
    return total


def intersection_number(g: Curve, d: Curve) -> int:
    """Minimal number of interior crossings; a curve meeting itself counts
    each self-crossing twice."""
    if g.T is not d.T:
        raise ValueError("curves live on different triangulations")
    T = g.T
    if g.arc is not None and d.arc is not None:
        return 0
    if g.arc is not None:
        return sum(1 for x in d.path.cross if T.arc_of[x] == g.arc)
    if d.arc is not None:
        return sum(1 for x in g.path.cross if T.arc_of[x] == d.arc)
    return _count(T, g.path, d.path, g == d)


def crossing_count(T: Triangulation, arc: int, word) -> int:
    return sum(1 for x in word if T.arc_of[x] == arc)


# ---------------------------------------------------------------- oracle

class _Disk:
    """Lifted triangles glued into a tree; nodes are created on demand."""

    def __init__(self, T: Triangulation):
        self.T = T
        self.base: list[int] = []
        self.nbr: list[list[int]] = []

    def node(self, t: int) -> int:
        self.base.append(t)
        self.nbr.append([-1, -1, -1])
        return len(self.base) - 1

    def cross(self, n: int, x: int) -> int:
        s = x % 3
        m = self.nbr[n][s]
        if m < 0:
            y = self.T.twin[x]
            m = self.node(tri(y))
            self.nbr[n][s] = m
            self.nbr[m][y % 3] = n
        return m

    def lay(self, n: int, pos: int, p: Path) -> tuple[tuple[int, int], tuple[int, int]]:
        """Lift ``p`` with its position ``pos`` on node ``n``; returns the
        lifted (node, corner slot) at both ends."""
        tw = self.T.twin
        cur = n
        for x in p.cross[pos:]:
            cur = self.cross(cur, x)
        end = (cur, p.end % 3)
        cur = n
        for x in reversed(p.cross[:pos]):
            cur = self.cross(cur, tw[x])
        return (cur, p.start % 3), end

    def boundary_order(self) -> dict[tuple[int, int], int]:
        """Position on the boundary circle of every lifted corner."""
        parent = {}

        def find(a):
            while parent.get(a, a) != a:
                parent[a] = parent.get(parent[a], parent[a])
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for n, nb in enumerate(self.nbr):
            for s in range(3):
                m = nb[s]
                if m > n:
                    y = self.T.twin[3 * self.base[n] + s] % 3
                    union((n, s), (m, (y + 1) % 3))
                    union((n, (s + 1) % 3), (m, y))
        succ = {}
        for n, nb in enumerate(self.nbr):
            for s in range(3):
                if nb[s] < 0:
                    succ[find((n, s))] = find((n, (s + 1) % 3))
        start = next(iter(succ))
        order = {start: 0}
        cur = succ[start]
        while cur != start:
            order[cur] = len(order)
            cur = succ[cur]
        if len(order) != len(succ):  # pragma: no cover
            raise AssertionError("developed complex is not a disk")
        return {(n, s): order[find((n, s))]
                for n in range(len(self.base)) for s in range(3)}


def _interleave(a: int, b: int, c: int, d: int) -> bool:
    if len({a, b, c, d}) < 4:
        return False
    lo, hi = min(a, b), max(a, b)
    return (lo < c < hi) != (lo < d < hi)


def developed_intersection(g: Curve, d: Curve) -> int:
    """Count lifts of ``d`` whose endpoints separate those of a fixed lift of
    ``g`` on the boundary of a developed disk."""
    T = g.T
    pg, pd = g.path, d.path
    disk = _Disk(T)
    tw = T.twin
    gnodes = [disk.node(tri(pg.start))]
    for x in pg.cross:
        gnodes.append(disk.cross(gnodes[-1], x))
    g_ends = ((gnodes[0], pg.start % 3), (gnodes[-1], pg.end % 3))
    dtris = [tri(pd.start)] + [tri(tw[x]) for x in pd.cross]
    lifts = set()
    for k, n in enumerate(gnodes):
        for q, t in enumerate(dtris):
            if t == disk.base[n]:
                lifts.add(disk.lay(n, q, pd))
    order = disk.boundary_order()
    ga, gb = order[g_ends[0]], order[g_ends[1]]
    total = 0
    for s, e in lifts:
        da, db = order[s], order[e]
        if {da, db} == {ga, gb}:
            continue  # the lift of g itself
        if _interleave(ga, gb, da, db):
            total += 1
    return total


def polygon_intersection(T: Triangulation, g: Curve, d: Curve) -> int:
    """Diagonals of a polygon cross iff their endpoints interleave."""
    s = T.surface
    pos = lambda p: s.position(p)[1]  # noqa: E731
    return int(_interleave(pos(g.start), pos(g.end), pos(d.start), pos(d.end)))
