"""Cotorsion pairs, paintings and their rotations.

A rigid collection ``I`` cuts the surface into pieces ``1..m``.  Every subset
``J`` of pieces gives the cotorsion pair whose left side holds ``I`` and the
curves of the pieces in ``J``, and whose right side holds ``I`` and the
curves of the other pieces.  A painting records the same data as a
colouring: pieces in ``J`` are black.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .curves import ClosedCurve, Curve, shift
from .cutting import Cut, NotIn
from .errors import DNotInCore, InvalidCurve
from .triangulation import Triangulation

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class CotorsionPair:
    cut: Cut
    black: frozenset  # J, 1-based piece indices

    @property
    def core(self) -> list[Curve]:
        return self.cut.core

    @property
    def m(self) -> int:
        return self.cut.m

    @property
    def white(self) -> frozenset:
        return frozenset(range(1, self.m + 1)) - self.black

    def contains(self, side: str, obj) -> bool:
        return side_contains(self, side, obj)


@dataclass(frozen=True)
class Painting:
    cut: Cut
    colours: tuple[str, ...]  # "black" / "white" per piece, 1-based order

    @property
    def core(self) -> list[Curve]:
        return self.cut.core

    @property
    def black(self) -> frozenset:
        return frozenset(i + 1 for i, c in enumerate(self.colours) if c == "black")


def subsets_lex(m: int) -> list[tuple[int, ...]]:
    """All subsets of ``1..m`` in lexicographic order of sorted tuples."""
    out = [()]
    for k in range(1, m + 1):
        out.extend(combinations(range(1, m + 1), k))
    return sorted(out)


def cotorsion_pairs(T: Triangulation, I, cut: Cut | None = None) -> list[CotorsionPair]:
    """The ``2**m`` pairs with core ``I``."""
    cut = cut or Cut(T, I)
    return [CotorsionPair(cut, frozenset(J)) for J in subsets_lex(cut.m)]


cotorsion_pairs_with_core = cotorsion_pairs


def t_structures(T: Triangulation) -> list[CotorsionPair]:
    """Pairs with zero core: one choice of side per connected component."""
    return cotorsion_pairs(T, [])


def side_contains(pair: CotorsionPair, side: str, obj) -> bool:
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be 'left' or 'right'")
    p = pair.cut.piece_of(obj)
    if isinstance(p, NotIn):
        return p.reason == "core"
    return (p in pair.black) == (side == LEFT)


def painting_of_pair(pair: CotorsionPair) -> Painting:
    return Painting(pair.cut, tuple("black" if j in pair.black else "white"
                                    for j in range(1, pair.m + 1)))


painting = painting_of_pair


def pair_of_painting(p: Painting) -> CotorsionPair:
    return CotorsionPair(p.cut, p.black)


def _same(a: Curve, b: Curve) -> bool:
    return a.T is b.T and a.key == b.key


def rotated_core(cut: Cut, D) -> tuple[list[Curve], Cut]:
    """``D`` together with every other core arc rotated inside the pieces of
    the surface cut along ``D``."""
    D = list(D)
    for d in D:
        if not any(_same(d, c) for c in cut.core):
            raise DNotInCore(f"{d.names()} is not in the core")
    cut_d = Cut(cut.base, D)
    rest = [c for c in cut.core if not any(_same(c, d) for d in D)]
    return D + [cut_d.shift_within(c) for c in rest], cut_d


def piece_probe(cut: Cut, idx: int) -> Curve:
    """A curve inside piece ``idx`` (one of its internal arcs), on the base."""
    arcs = cut.internal_arcs(idx)
    if not arcs:  # pragma: no cover - triangles are never pieces
        raise AssertionError("piece without curves")
    return cut.arc_on_base(arcs[0])


def rotate_painting(p: Painting, D) -> Painting:
    """Rotate every piece inside the pieces of the surface cut along ``D``
    and carry the colours along."""
    new_core, cut_d = rotated_core(p.cut, D)
    new_cut = Cut(p.cut.base, new_core)
    colours = ["white"] * new_cut.m
    for j in range(1, p.cut.m + 1):
        moved = cut_d.shift_within(piece_probe(p.cut, j))
        k = new_cut.piece_of(moved)
        if isinstance(k, NotIn):  # pragma: no cover
            raise AssertionError("rotated piece left the new cut")
        colours[k - 1] = p.colours[j - 1]
    return Painting(new_cut, tuple(colours))


def mutate(pair: CotorsionPair, D) -> CotorsionPair:
    return pair_of_painting(rotate_painting(painting_of_pair(pair), D))


# ---------------------------------------------------------------- checks

def boundary_sets(pair: CotorsionPair) -> tuple[frozenset, frozenset]:
    """Original boundary components met by the left and right pieces."""
    left, right = set(), set()
    for piece in pair.cut.pieces:
        (left if piece.index in pair.black else right).update(piece.original_boundaries)
    return frozenset(left), frozenset(right)


def shift_violations(pair: CotorsionPair, probes, k: int) -> list[tuple[str, object]]:
    """Probes in a side whose ``k``-fold shift leaves that side."""
    bad = []
    for obj in probes:
        moved = obj if isinstance(obj, ClosedCurve) else shift(obj, k)
        for side in (LEFT, RIGHT):
            if side_contains(pair, side, obj) and not side_contains(pair, side, moved):
                bad.append((side, obj))
    return bad


def is_co_t_structure(pair: CotorsionPair, probes) -> bool:
    """Left side closed under the inverse shift and right side under the
    shift, tested on ``probes`` and their shifts."""
    for obj in probes:
        if isinstance(obj, ClosedCurve):
            continue
        if side_contains(pair, LEFT, obj) and not side_contains(pair, LEFT, shift(obj, -1)):
            return False
        if side_contains(pair, RIGHT, obj) and not side_contains(pair, RIGHT, shift(obj, 1)):
            return False
    return True


def require_curve(obj) -> Curve:
    if not isinstance(obj, Curve):
        raise InvalidCurve("expected an open curve")
    return obj
