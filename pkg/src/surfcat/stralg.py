"""Gentle and string algebras, string words, and Hom dimensions between
string modules by counting factor/substring pairs.

Walk convention: a string word visits vertices ``x0, x1, ..., xn`` and its
``k``-th letter joins ``xk`` and ``x(k+1)``.  A letter ``(a, +1)`` is the
arrow ``a: xk -> x(k+1)``; ``(a, -1)`` is an arrow ``a: x(k+1) -> xk``
walked backwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .curves import ClosedCurve, Curve
from .errors import InTriangulation, NotString
from .triangulation import Triangulation, tri

# Arrows run from a side to the side after it clockwise in each triangle.
CLOCKWISE_ARROWS = True


@dataclass(frozen=True)
class Quiver:
    n_vertices: int
    arrows: tuple[tuple[int, int], ...]          # (source, target)
    relations: frozenset = frozenset()            # (a, b): "a then b" is zero
    arrow_names: tuple[str, ...] | None = None

    def name(self, a: int) -> str:
        return self.arrow_names[a] if self.arrow_names else f"b{a}"

    @cached_property
    def outgoing(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in range(self.n_vertices)}
        for a, (s, _) in enumerate(self.arrows):
            out[s].append(a)
        return out

    @cached_property
    def incoming(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in range(self.n_vertices)}
        for a, (_, t) in enumerate(self.arrows):
            out[t].append(a)
        return out

    def is_string_algebra(self) -> bool:
        for v in range(self.n_vertices):
            if len(self.outgoing[v]) > 2 or len(self.incoming[v]) > 2:
                return False
        for b in range(len(self.arrows)):
            after = [c for c in self.outgoing[self.arrows[b][1]]
                     if (b, c) not in self.relations]
            before = [a for a in self.incoming[self.arrows[b][0]]
                      if (a, b) not in self.relations]
            if len(after) > 1 or len(before) > 1:
                return False
        return True

    def is_gentle(self) -> bool:
        if not self.is_string_algebra():
            return False
        for b in range(len(self.arrows)):
            after = [c for c in self.outgoing[self.arrows[b][1]]
                     if (b, c) in self.relations]
            before = [a for a in self.incoming[self.arrows[b][0]]
                      if (a, b) in self.relations]
            if len(after) > 1 or len(before) > 1:
                return False
        return all(len(r) == 2 for r in self.relations)


@dataclass(frozen=True)
class GentleAlgebra:
    """Jacobian algebra of a triangulation.  Vertices are arc ids; every
    arrow lives in one triangle and is keyed by (triangle, source slot)."""

    quiver: Quiver
    arrow_at: dict  # (triangle, source slot) -> arrow id
    step: int       # target slot minus source slot, mod 3
    potential: tuple = ()  # one arrow 3-cycle per internal triangle

    @property
    def relations(self) -> frozenset:
        return self.quiver.relations


def quiver_from_triangulation(T: Triangulation, clockwise: bool | None = None) -> GentleAlgebra:
    cw = CLOCKWISE_ARROWS if clockwise is None else clockwise
    step = -1 if cw else 1
    arrows, names, at = [], [], {}
    internal = []
    for t in range(T.n_tri):
        sides = [T.arc_of[3 * t + i] for i in range(3)]
        if all(a >= 0 for a in sides):
            internal.append(t)
        for i in range(3):
            j = (i + step) % 3
            if sides[i] >= 0 and sides[j] >= 0:
                at[(t, i)] = len(arrows)
                arrows.append((sides[i], sides[j]))
                names.append(f"{T.arc_names[sides[i]]}>{T.arc_names[sides[j]]}@{t}")
    cycles = []
    for t in internal:
        a = at[(t, 0)]
        b = at[(t, step % 3)]
        cycles.append((a, b, at[(t, (2 * step) % 3)]))
    q = quiver_with_potential(T.n_arcs, arrows, cycles, names)
    return GentleAlgebra(q, at, step % 3, tuple(cycles))


qp_from_triangulation = quiver_from_triangulation


def quiver_with_potential(n_vertices: int, arrows, cycles, names=None) -> Quiver:
    """Quiver whose relations are the cyclic derivatives of a sum of
    distinct 3-cycles: for ``a`` then ``b`` then ``c`` these are the three
    consecutive pairs."""
    arrows = tuple(tuple(x) for x in arrows)
    rel = set()
    for cyc in cycles:
        for k in range(3):
            a, b = cyc[k], cyc[(k + 1) % 3]
            if arrows[a][1] != arrows[b][0]:
                raise ValueError("potential term is not a cycle")
            rel.add((a, b))
    return Quiver(n_vertices, arrows, frozenset(rel), tuple(names) if names else None)


def jacobian_dimension(q: Quiver) -> int:
    """Dimension of the path algebra modulo the relations, by counting
    nonzero paths (finite for the algebras used here)."""
    total = q.n_vertices
    frontier = [(a,) for a in range(len(q.arrows))]
    while frontier:
        total += len(frontier)
        nxt_paths = []
        for p in frontier:
            last = p[-1]
            for c in q.outgoing[q.arrows[last][1]]:
                if (last, c) not in q.relations:
                    nxt_paths.append(p + (c,))
        frontier = nxt_paths
        if total > 10 ** 6:
            raise ValueError("algebra is infinite dimensional")
    return total


# ---------------------------------------------------------------- strings

@dataclass(frozen=True)
class StringWord:
    vertices: tuple[int, ...]
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.letters) + 1:
            raise NotString("a walk has one more vertex than letters")

    @property
    def length(self) -> int:
        return len(self.letters)

    def inverse(self) -> StringWord:
        return StringWord(self.vertices[::-1],
                          tuple((a, -s) for a, s in reversed(self.letters)))

    def encode(self) -> list[int]:
        out = [self.vertices[0]]
        for (a, s), v in zip(self.letters, self.vertices[1:]):
            out.append(s * (a + 1))
            out.append(v)
        return out

    def segment(self, j: int, k: int) -> StringWord:
        return StringWord(self.vertices[j:k + 1], self.letters[j:k])

    def canonical(self) -> tuple:
        a, b = self.encode(), self.inverse().encode()
        return tuple(min(a, b))

    def render(self, q: Quiver | None = None) -> str:
        if not self.letters:
            return f"e{self.vertices[0]}"
        parts = []
        for a, s in self.letters:
            n = q.name(a) if q else f"b{a}"
            parts.append(n if s > 0 else n + "^-1")
        return " ".join(parts)


def trivial(v: int) -> StringWord:
    return StringWord((v,), ())


def is_string(q: Quiver, w: StringWord) -> bool:
    for k, (a, s) in enumerate(w.letters):
        if not 0 <= a < len(q.arrows):
            return False
        src, dst = q.arrows[a]
        x, y = w.vertices[k], w.vertices[k + 1]
        if (s > 0 and (src, dst) != (x, y)) or (s < 0 and (src, dst) != (y, x)):
            return False
    for (a, s), (b, t) in zip(w.letters, w.letters[1:]):
        if a == b and s != t:
            return False
        if s > 0 and t > 0 and (a, b) in q.relations:
            return False
        if s < 0 and t < 0 and (b, a) in q.relations:
            return False
    return True


def _seg_ok(letters, j: int, k: int, before: int, after: int) -> bool:
    if j > 0 and letters[j - 1][1] != before:
        return False
    if k < len(letters) and letters[k][1] != after:
        return False
    return True


def factor_segments(w: StringWord) -> list[tuple[int, int]]:
    """Segments whose neighbouring letters point away from them."""
    n = len(w.letters)
    return [(j, k) for j in range(n + 1) for k in range(j, n + 1)
            if _seg_ok(w.letters, j, k, -1, +1)]


def substring_segments(w: StringWord) -> list[tuple[int, int]]:
    """Segments whose neighbouring letters point into them."""
    n = len(w.letters)
    return [(j, k) for j in range(n + 1) for k in range(j, n + 1)
            if _seg_ok(w.letters, j, k, +1, -1)]


def _triples(w: StringWord, segs) -> list[tuple]:
    """``(D, E, F)`` with ``w = D E F`` read right to left, ``None`` for an
    empty side."""
    n = len(w.letters)
    out = []
    for j, k in segs:
        d = w.segment(k, n) if k < n else None
        f = w.segment(0, j) if j > 0 else None
        out.append((d, w.segment(j, k), f))
    return out


def factor_strings(w: StringWord) -> list[tuple]:
    return _triples(w, factor_segments(w))


def substrings(w: StringWord) -> list[tuple]:
    return _triples(w, substring_segments(w))


def hom_dim(w: StringWord | None, v: StringWord | None) -> int:
    """dim Hom(M(w), M(v)); ``None`` stands for the zero module."""
    if w is None or v is None:
        return 0
    return kernels.admissible_pairs(w.encode(), factor_segments(w),
                                    v.encode(), substring_segments(v))


# ---------------------------------------------------------------- curves

def string_of_curve(T: Triangulation, c: Curve, alg: GentleAlgebra | None = None) -> StringWord:
    """String word read off the arcs crossed by ``c``."""
    if c.arc is not None:
        raise InTriangulation("curve is an arc of the triangulation")
    alg = alg or quiver_from_triangulation(T)
    return _word(T, alg, c.path.cross, closed=False)


def band_of_closed_curve(T: Triangulation, c: ClosedCurve,
                         alg: GentleAlgebra | None = None) -> StringWord:
    """Cyclic word of a closed curve; the band module also carries ``c.lam``."""
    alg = alg or quiver_from_triangulation(T)
    return _word(T, alg, c.cross, closed=True)


def _word(T: Triangulation, alg: GentleAlgebra, xs, closed: bool) -> StringWord:
    tw = T.twin
    step = alg.step
    verts = [T.arc_of[x] for x in xs]
    pairs = list(zip(xs, xs[1:]))
    if closed:
        pairs.append((xs[-1], xs[0]))
        verts.append(verts[0])
    letters = []
    for x, y in pairs:
        t = tri(y)
        i, j = tw[x] % 3, y % 3
        if (i + step) % 3 == j:
            letters.append((alg.arrow_at[(t, i)], +1))
        else:
            letters.append((alg.arrow_at[(t, j)], -1))
    return StringWord(tuple(verts), tuple(letters))
