"""Oriented marked surfaces: genus, boundary circles, marked points.

A marked point is a tuple whose first entry is the index of its boundary
component.  Points on one boundary are listed anticlockwise, i.e. with the
surface on the left when walking from a point to the next one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import MonogonDigonTriangle, NoBoundary

Label = tuple


@dataclass(frozen=True)
class MarkedSurface:
    genera: tuple[int, ...]
    boundaries: tuple[tuple[Label, ...], ...]
    owner: tuple[int, ...]  # connected component of each boundary
    checked: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.owner) != len(self.boundaries):
            raise ValueError("owner must list one component per boundary")
        if not self.checked:  # pieces of a cut may be triangles
            return
        for c in range(len(self.genera)):
            if c not in self.owner:
                raise NoBoundary(f"component {c} has no boundary")
        for pts in self.boundaries:
            if not pts:
                raise NoBoundary("every boundary component needs a marked point")
        for c in range(len(self.genera)):
            g, sizes = self.component_data(c)
            if g == 0 and len(sizes) == 1 and sizes[0] < 4:
                raise MonogonDigonTriangle(
                    f"disk with {sizes[0]} marked points has no arcs")
            if g < 0:
                raise ValueError("genus must be non-negative")

    @property
    def n_components(self) -> int:
        return len(self.genera)

    @cached_property
    def points(self) -> tuple[Label, ...]:
        return tuple(p for pts in self.boundaries for p in pts)

    @cached_property
    def _position(self) -> dict[Label, tuple[int, int]]:
        return {p: (b, i) for b, pts in enumerate(self.boundaries)
                for i, p in enumerate(pts)}

    def has_point(self, p: Label) -> bool:
        return p in self._position

    def position(self, p: Label) -> tuple[int, int]:
        return self._position[p]

    def next_point(self, p: Label, k: int = 1) -> Label:
        """The marked point ``k`` steps anticlockwise from ``p``."""
        b, i = self._position[p]
        pts = self.boundaries[b]
        return pts[(i + k) % len(pts)]

    def component_of_point(self, p: Label) -> int:
        return self.owner[self._position[p][0]]

    def component_boundaries(self, c: int) -> list[int]:
        return [b for b, o in enumerate(self.owner) if o == c]

    def component_data(self, c: int) -> tuple[int, tuple[int, ...]]:
        return self.genera[c], tuple(len(self.boundaries[b])
                                     for b in self.component_boundaries(c))

    def is_disk(self, c: int = 0) -> bool:
        return self.genera[c] == 0 and len(self.component_boundaries(c)) == 1

    def euler_characteristic(self, c: int) -> int:
        return 2 - 2 * self.genera[c] - len(self.component_boundaries(c))

    def arc_count(self, c: int | None = None) -> int:
        """Arcs in any triangulation: 6g + 3b + m - 6 per component."""
        if c is None:
            return sum(self.arc_count(k) for k in range(self.n_components))
        g, sizes = self.component_data(c)
        return 6 * g + 3 * len(sizes) + sum(sizes) - 6

    def triangle_count(self, c: int | None = None) -> int:
        if c is None:
            return sum(self.triangle_count(k) for k in range(self.n_components))
        g, sizes = self.component_data(c)
        return 4 * g + 2 * len(sizes) + sum(sizes) - 4

    def describe(self) -> str:
        parts = []
        for c in range(self.n_components):
            g, sizes = self.component_data(c)
            parts.append(f"g={g} b={list(sizes)}")
        return " + ".join(parts)


def build_surface(genus: int, boundary_sizes) -> MarkedSurface:
    """A connected surface; points are labelled ``(boundary, index)``."""
    sizes = tuple(int(s) for s in boundary_sizes)
    if not sizes:
        raise NoBoundary("a marked surface needs at least one boundary component")
    bds = tuple(tuple((b, j) for j in range(m)) for b, m in enumerate(sizes))
    return MarkedSurface((int(genus),), bds, (0,) * len(sizes))


def disjoint_union(*surfaces: MarkedSurface) -> MarkedSurface:
    """Components keep their order; boundary indices are shifted."""
    genera: list[int] = []
    bds: list[tuple[Label, ...]] = []
    owner: list[int] = []
    for s in surfaces:
        off_b, off_c = len(bds), len(genera)
        genera.extend(s.genera)
        for b, pts in enumerate(s.boundaries):
            bds.append(tuple((p[0] + off_b,) + tuple(p[1:]) for p in pts))
            owner.append(s.owner[b] + off_c)
    return MarkedSurface(tuple(genera), tuple(bds), tuple(owner))


def polygon(n: int) -> MarkedSurface:
    return build_surface(0, [n])


def annulus(p: int, q: int) -> MarkedSurface:
    return build_surface(0, [p, q])
