"""The reference surfaces and the Ext/Int sweep over them."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .curves import enumerate_curves
from .homext import ext1_dim
from .intersect import developed_intersection, intersection_number
from .topology import MarkedSurface, annulus, build_surface, polygon
from .triangulation import triangulate


def corpus_surfaces() -> list[tuple[str, MarkedSurface]]:
    out = [(f"polygon-{n}", polygon(n)) for n in range(4, 9)]
    out += [(f"annulus-{p}-{q}", annulus(p, q)) for p, q in ((1, 1), (2, 1), (2, 2))]
    out.append(("pants-2-2-2", build_surface(0, [2, 2, 2])))
    return out


@dataclass
class SweepResult:
    name: str
    curves: int
    pairs: int
    seconds: float
    mismatches: list = field(default_factory=list)  # (curve, curve, ext, int, oracle)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def sweep_surface(name: str, S: MarkedSurface, max_len: int = 8,
                  refine_all: bool = True) -> SweepResult:
    """Compare ``ext1_dim``, ``intersection_number`` and the developed-disk
    count on every unordered pair (equal curves included) of curves of
    crossing length at most ``max_len`` for the default triangulation."""
    return sweep_triangulation(name, triangulate(S), max_len, refine_all)


def sweep_triangulation(name: str, T, max_len: int = 8,
                        refine_all: bool = True) -> SweepResult:
    t0 = time.perf_counter()
    cs = enumerate_curves(T, max_len)
    res = SweepResult(name, len(cs), 0, 0.0)
    for i, g in enumerate(cs):
        for d in cs[i:]:
            res.pairs += 1
            e = ext1_dim(g, d, refine_all=refine_all)
            n = intersection_number(g, d)
            o = developed_intersection(g, d)
            if not e == n == o:
                res.mismatches.append((g, d, e, n, o))
    res.seconds = time.perf_counter() - t0
    return res


def sweep(max_len: int = 8, surfaces=None, refine_all: bool = True) -> list[SweepResult]:
    return [sweep_surface(name, S, max_len, refine_all)
            for name, S in (surfaces or corpus_surfaces())]
