"""Ideal triangulations stored as glued triangles.

Half-edge ``h = 3*t + i`` is side ``i`` of triangle ``t``; it runs from the
vertex at corner ``i`` to the vertex at corner ``i+1`` with the triangle on
its left.  Corner ``c`` shares its index with the side leaving it, so corner
``c`` sits between side ``prv(c)`` (incoming) and side ``c`` (outgoing) and
faces side ``nxt(c)``.  ``twin[h]`` is the glued partner, or -1 on the
boundary.
"""
from __future__ import annotations

from .errors import InvalidCurve
from .topology import Label, MarkedSurface


def tri(h: int) -> int:
    return h // 3


def nxt(h: int) -> int:
    return h + 1 if h % 3 != 2 else h - 2


def prv(h: int) -> int:
    return h - 1 if h % 3 != 0 else h + 2


class Triangulation:
    __slots__ = ("surface", "twin", "vert", "arc_of", "arc_names", "arc_half",
                 "bd_out", "_name_index", "__weakref__")

    def __init__(self, surface: MarkedSurface, twin, vert, arc_of, arc_names):
        self.surface = surface
        self.twin = tuple(twin)
        self.vert = tuple(vert)
        self.arc_of = tuple(arc_of)
        self.arc_names = tuple(arc_names)
        half = [-1] * len(self.arc_names)
        for h, a in enumerate(self.arc_of):
            if a >= 0 and half[a] < 0:
                half[a] = h
        self.arc_half = tuple(half)
        # corner at p whose outgoing side is a boundary segment
        self.bd_out = {self.vert[h]: h for h, t in enumerate(self.twin) if t < 0}
        self._name_index = {n: i for i, n in enumerate(self.arc_names)}

    @property
    def n_tri(self) -> int:
        return len(self.twin) // 3

    @property
    def n_arcs(self) -> int:
        return len(self.arc_names)

    def arc_index(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise InvalidCurve(f"unknown arc name {name!r}") from None

    def arc_ends(self, a: int) -> tuple[Label, Label]:
        h = self.arc_half[a]
        return self.vert[h], self.vert[nxt(h)]

    def side_name(self, h: int) -> str:
        a = self.arc_of[h]
        return self.arc_names[a] if a >= 0 else "boundary"

    def corner_rotation(self, p: Label) -> list[int]:
        """Corners at ``p`` from the clockwise-most one, turning anticlockwise."""
        c = self.bd_out[p]
        out = [c]
        while self.twin[prv(c)] >= 0:
            c = self.twin[prv(c)]
            out.append(c)
        return out

    def validate(self) -> None:
        tw, vt, s = self.twin, self.vert, self.surface
        n = len(tw)
        if n % 3:
            raise ValueError("half-edge count must be a multiple of 3")
        seen = [0] * len(self.arc_names)
        for h in range(n):
            t = tw[h]
            if t >= 0:
                if tw[t] != h or t == h:
                    raise ValueError(f"gluing is not an involution at {h}")
                if tri(t) == tri(h):
                    raise ValueError("a triangle is glued to itself")
                if vt[h] != vt[nxt(t)] or vt[nxt(h)] != vt[t]:
                    raise ValueError(f"vertex labels disagree across side {h}")
                if self.arc_of[h] != self.arc_of[t] or self.arc_of[h] < 0:
                    raise ValueError(f"arc ids disagree across side {h}")
                seen[self.arc_of[h]] += 1
            else:
                if self.arc_of[h] >= 0:
                    raise ValueError("boundary side carries an arc id")
                if s.next_point(vt[h]) != vt[nxt(h)]:
                    raise ValueError(f"boundary side {h} skips a marked point")
        if any(k != 2 for k in seen):
            raise ValueError("every arc needs exactly two sides")
        if set(self.bd_out) != set(s.points) or len(self.bd_out) != len(s.points):
            raise ValueError("each marked point needs one outgoing boundary side")
        total = 0
        for p in s.points:
            fan = self.corner_rotation(p)
            if any(vt[c] != p for c in fan):
                raise ValueError(f"fan at {p} mixes vertices")
            total += len(fan)
        if total != n:
            raise ValueError("some corners are not on the boundary")


def _component_polygon(surface: MarkedSurface, c: int):
    """Boundary word of a polygon that glues up to component ``c``."""
    g = surface.genera[c]
    bs = surface.component_boundaries(c)
    b0 = surface.boundaries[bs[0]]
    p0 = b0[0]
    sides = []  # (start, end, arc key or None, sign)
    for j in range(len(b0)):
        sides.append((b0[j], b0[(j + 1) % len(b0)], None, 0))
    for b in bs[1:]:
        pts = surface.boundaries[b]
        q = pts[0]
        sides.append((p0, q, ("c", b), 1))
        for j in range(len(pts)):
            sides.append((pts[j], pts[(j + 1) % len(pts)], None, 0))
        sides.append((q, p0, ("c", b), -1))
    for i in range(g):
        sides += [(p0, p0, ("a", i), 1), (p0, p0, ("b", i), 1),
                  (p0, p0, ("a", i), -1), (p0, p0, ("b", i), -1)]
    return sides


def triangulate(surface: MarkedSurface) -> Triangulation:
    """Reference triangulation: each component is cut open to a polygon at its
    least marked point and fanned from there.  For a disk the arcs are
    ``a1 = {0,2}, a2 = {0,3}, ...``."""
    twin: list[int] = []
    vert: list[Label] = []
    arc_of: list[int] = []
    names: list[str] = []
    for c in range(surface.n_components):
        sides = _component_polygon(surface, c)
        n = len(sides)
        base = len(twin)
        nt = n - 2
        twin.extend([-1] * (3 * nt))
        arc_of.extend([-1] * (3 * nt))
        v = [s[0] for s in sides]
        for k in range(nt):
            vert.extend([v[0], v[k + 1], v[k + 2]])

        def side_half(i: int) -> int:
            if i == 0:
                return base
            if i == n - 1:
                return base + 3 * (nt - 1) + 2
            return base + 3 * (i - 1) + 1

        def new_arc(h1: int, h2: int) -> None:
            a = len(names)
            names.append(f"a{a + 1}")
            twin[h1], twin[h2] = h2, h1
            arc_of[h1] = arc_of[h2] = a

        for i in range(2, n - 1):
            new_arc(base + 3 * (i - 2) + 2, base + 3 * (i - 1))
        first: dict = {}
        for i, (_, _, key, _) in enumerate(sides):
            if key is None:
                continue
            if key in first:
                new_arc(side_half(first.pop(key)), side_half(i))
            else:
                first[key] = i
    T = Triangulation(surface, twin, vert, arc_of, names)
    T.validate()
    return T
