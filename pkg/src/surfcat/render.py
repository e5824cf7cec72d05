"""Schematic SVG pictures of surfaces, triangulations and paintings.

Only incidence matters: every component gets a fixed template (outer
boundary as a large circle, further boundaries and handles on an inner
ring), marked points sit at evenly spaced angles and arcs are quadratic
curves between them.  Output is byte-identical for identical input.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .topology import MarkedSurface

BOX = 340.0
RADIUS = 130.0
RING = 62.0
HOLE = 20.0
MARGIN = 20.0


def _f(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


class Layout:
    """Positions of boundaries and marked points for one surface."""

    def __init__(self, S: MarkedSurface, x0: float = 0.0):
        self.S = S
        self.centres: list[tuple[float, float]] = []
        self.circles: list[tuple[float, float, float]] = []  # per boundary
        self.handles: list[tuple[float, float]] = []
        self.pos: dict = {}
        for c in range(S.n_components):
            cx, cy = x0 + MARGIN + BOX * c + BOX / 2, MARGIN + BOX / 2
            self.centres.append((cx, cy))
        self.circles = [None] * len(S.boundaries)  # type: ignore[list-item]
        for c in range(S.n_components):
            cx, cy = self.centres[c]
            bds = S.component_boundaries(c)
            self.circles[bds[0]] = (cx, cy, RADIUS)
            inner = len(bds) - 1 + S.genera[c]
            ring = 0.0 if inner == 1 else RING
            for k in range(inner):
                a = math.pi / 2 + 2 * math.pi * k / max(inner, 1)
                x, y = cx + ring * math.cos(a), cy - ring * math.sin(a)
                if k < len(bds) - 1:
                    self.circles[bds[k + 1]] = (x, y, HOLE)
                else:
                    self.handles.append((x, y))
        for b, pts in enumerate(S.boundaries):
            x, y, r = self.circles[b]
            outer = r == RADIUS
            n = len(pts)
            for j, p in enumerate(pts):
                # surface on the left: anticlockwise outside, clockwise on holes
                if outer:
                    a = math.pi / 2 + math.pi / n + 2 * math.pi * j / n
                else:
                    a = -2 * math.pi * j / n
                self.pos[p] = (x + r * math.cos(a), y - r * math.sin(a))

    @property
    def width(self) -> float:
        return 2 * MARGIN + BOX * self.S.n_components

    @property
    def height(self) -> float:
        return 2 * MARGIN + BOX

    def centre_of(self, p) -> tuple[float, float]:
        return self.centres[self.S.component_of_point(p)]


class Canvas:
    def __init__(self, width: float, height: float):
        self.width, self.height = width, height
        self.items: list[str] = []
        self._controls: list[tuple[float, float]] = []

    def add(self, s: str) -> None:
        self.items.append(s)

    def free_control(self, x: float, y: float, nx: float, ny: float) -> tuple[float, float]:
        """Nudge a control point along ``(nx, ny)`` away from used ones."""
        k = 0
        while any(abs(x - u) < 6 and abs(y - v) < 6 for u, v in self._controls):
            k += 1
            step = 12 * ((k + 1) // 2) * (1 if k % 2 else -1)
            x, y = x + step * nx, y + step * ny
        self._controls.append((x, y))
        return x, y

    def svg(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(self.width)}" '
                f'height="{_f(self.height)}" viewBox="0 0 {_f(self.width)} {_f(self.height)}">')
        return "\n".join([head, *self.items, "</svg>"]) + "\n"


def _draw_surface(cv: Canvas, L: Layout) -> None:
    for b, (x, y, r) in enumerate(L.circles):
        cv.add(f'<circle class="boundary" data-boundary="{b}" cx="{_f(x)}" cy="{_f(y)}" '
               f'r="{_f(r)}" fill="none" stroke="#333" stroke-width="2"/>')
    for x, y in L.handles:
        cv.add(f'<g class="handle"><circle cx="{_f(x - 7)}" cy="{_f(y)}" r="7" fill="none" '
               f'stroke="#777"/><circle cx="{_f(x + 7)}" cy="{_f(y)}" r="7" fill="none" '
               f'stroke="#777"/></g>')


def _draw_points(cv: Canvas, L: Layout) -> None:
    for p in L.S.points:
        x, y = L.pos[p]
        cv.add(f'<circle class="point" data-point="{escape(_label(p))}" cx="{_f(x)}" '
               f'cy="{_f(y)}" r="4" fill="#000"/>')


def _label(p) -> str:
    return ",".join(str(v) for v in p)


def _arc_d(cv: Canvas, L: Layout, p, q, parallel: int) -> str:
    (x1, y1), (x2, y2) = L.pos[p], L.pos[q]
    cx, cy = L.centre_of(p)
    if p == q:
        # loop: out to a far point and back, one control each side
        dx, dy = cx - x1, cy - y1
        d = math.hypot(dx, dy) or 1.0
        ux, uy = dx / d, dy / d
        reach = 0.55 * d + 14 * parallel
        tx, ty = x1 + reach * ux, y1 + reach * uy
        w = 26 + 6 * parallel
        c1 = cv.free_control(tx - w * uy, ty + w * ux, ux, uy)
        c2 = cv.free_control(tx + w * uy, ty - w * ux, ux, uy)
        return (f"M {_f(x1)} {_f(y1)} Q {_f(c1[0])} {_f(c1[1])} {_f(tx)} {_f(ty)} "
                f"Q {_f(c2[0])} {_f(c2[1])} {_f(x1)} {_f(y1)}")
    mx, my = (x1 + x2) / 2, (y1 + y2) / 2
    kx, ky = mx + 0.35 * (cx - mx), my + 0.35 * (cy - my)
    dx, dy = x2 - x1, y2 - y1
    d = math.hypot(dx, dy) or 1.0
    nx, ny = -dy / d, dx / d
    off = 18 * ((parallel + 1) // 2) * (1 if parallel % 2 else -1)
    k = cv.free_control(kx + off * nx, ky + off * ny, nx, ny)
    return f"M {_f(x1)} {_f(y1)} Q {_f(k[0])} {_f(k[1])} {_f(x2)} {_f(y2)}"


def _draw_arcs(cv: Canvas, L: Layout, ends, css: str, names=None) -> None:
    seen: dict = {}
    for i, (p, q) in enumerate(ends):
        key = tuple(sorted((p, q)))
        k = seen.get(key, 0)
        seen[key] = k + 1
        name = f' data-name="{escape(names[i])}"' if names else ""
        cv.add(f'<path class="{css}"{name} d="{_arc_d(cv, L, p, q, k)}" fill="none" '
               f'stroke="{"#c22" if css == "core" else "#36c"}" '
               f'stroke-width="{3 if css == "core" else 1.5}"/>')


def render_surface(S: MarkedSurface) -> str:
    L = Layout(S)
    cv = Canvas(L.width, L.height)
    _draw_surface(cv, L)
    _draw_points(cv, L)
    return cv.svg()


def render_triangulation(T) -> str:
    L = Layout(T.surface)
    cv = Canvas(L.width, L.height)
    _draw_surface(cv, L)
    _draw_arcs(cv, L, [T.arc_ends(a) for a in range(T.n_arcs)], "arc", list(T.arc_names))
    _draw_points(cv, L)
    return cv.svg()


def _piece_side(L: Layout, p, q) -> str:
    (x1, y1), (x2, y2) = L.pos[p], L.pos[q]
    cx, cy = L.centre_of(p)
    if p == q:
        dx, dy = cx - x1, cy - y1
        d = math.hypot(dx, dy) or 1.0
        ux, uy = dx / d, dy / d
        tx, ty = x1 + 0.5 * d * ux, y1 + 0.5 * d * uy
        w = 30
        return (f"Q {_f(tx - w * uy)} {_f(ty + w * ux)} {_f(tx)} {_f(ty)} "
                f"Q {_f(tx + w * uy)} {_f(ty - w * ux)} {_f(x1)} {_f(y1)}")
    mx, my = (x1 + x2) / 2, (y1 + y2) / 2
    return f"Q {_f(mx + 0.25 * (cx - mx))} {_f(my + 0.25 * (cy - my))} {_f(x2)} {_f(y2)}"


def _draw_painting(cv: Canvas, L: Layout, painting) -> None:
    cut = painting.cut
    for piece in cut.pieces:
        colour = painting.colours[piece.index - 1]
        fill = "#000" if colour == "black" else "#fff"
        parts = []
        sx = sy = 0.0
        n = 0
        for b, pts in enumerate(piece.surface.boundaries):
            orig = [piece.point_map[lab] for lab in pts]
            x0, y0 = L.pos[orig[0]]
            seg = [f"M {_f(x0)} {_f(y0)}"]
            for j in range(len(orig)):
                p, q = orig[j], orig[(j + 1) % len(orig)]
                (x1, y1), (x2, y2) = L.pos[p], L.pos[q]
                seg.append(_piece_side(L, p, q))
                sx += x1
                sy += y1
                n += 1
            parts.append(" ".join(seg) + " Z")
        cv.add(f'<path class="piece {colour}" data-piece="{piece.index}" d="{" ".join(parts)}" '
               f'fill="{fill}" fill-opacity="0.45" fill-rule="evenodd" stroke="#999"/>')
        cx, cy = L.centre_of(piece.point_map[piece.surface.boundaries[0][0]])
        tx, ty = (sx / n + cx) / 2, (sy / n + cy) / 2
        cv.add(f'<text class="piece-label" x="{_f(tx)}" y="{_f(ty)}" font-size="14" '
               f'text-anchor="middle" fill="#c60">{piece.index}</text>')
    _draw_arcs(cv, L, [(c.start, c.end) for c in painting.core], "core")


def render_painting(painting) -> str:
    L = Layout(painting.cut.base.surface)
    cv = Canvas(L.width, L.height)
    _draw_surface(cv, L)
    _draw_painting(cv, L, painting)
    _draw_points(cv, L)
    return cv.svg()


def render_pair(before, after) -> str:
    """Two paintings of one surface side by side."""
    S = before.cut.base.surface
    left = Layout(S)
    right = Layout(S, x0=left.width)
    cv = Canvas(left.width + right.width, left.height)
    for L, p, tag in ((left, before, "before"), (right, after, "after")):
        cv.add(f'<g class="{tag}">')
        _draw_surface(cv, L)
        _draw_painting(cv, L, p)
        _draw_points(cv, L)
        cv.add("</g>")
    return cv.svg()
