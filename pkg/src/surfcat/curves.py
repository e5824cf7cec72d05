"""Curves as reduced paths in the dual graph of a triangulation.

An open path starts at a corner, crosses a sequence of half-edges (each one
a side of the current triangle, left through that side) and stops at a
corner.  A path is *tight* when it leaves its first triangle through the
side facing its start corner and enters its last triangle through the side
facing its end corner; tight reduced paths are in minimal position with the
triangulation, so two curves are homotopic iff their tight paths agree up to
reversal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidCurve
from .triangulation import Triangulation, nxt, prv, tri

ZERO = None  # a curve homotopic to a boundary segment


@dataclass(frozen=True)
class Path:
    start: int
    cross: tuple[int, ...]
    end: int


class Degenerate(Exception):
    """Both ends of a path landed on the same lifted marked point."""


def reverse_path(T: Triangulation, p: Path) -> Path:
    tw = T.twin
    return Path(p.end, tuple(tw[x] for x in reversed(p.cross)), p.start)


def reverse_word(T: Triangulation, cross) -> tuple[int, ...]:
    tw = T.twin
    return tuple(tw[x] for x in reversed(cross))


def check_path(T: Triangulation, start: int, cross, end: int) -> None:
    tw = T.twin
    t = tri(start)
    for x in cross:
        if tri(x) != t or tw[x] < 0:
            raise InvalidCurve("crossings do not form a path through glued sides")
        t = tri(tw[x])
    if tri(end) != t:
        raise InvalidCurve("end corner is not in the last triangle")


def normalize(T: Triangulation, start: int, cross, end: int,
              allow_trivial: bool = False) -> Path:
    """Free-reduce, then slide both ends off sides incident to their vertex.
    A path that shrinks to a point raises ``Degenerate`` unless
    ``allow_trivial``."""
    tw = T.twin
    stack: list[int] = []
    for x in cross:
        if stack and tw[stack[-1]] == x:
            stack.pop()
        else:
            stack.append(x)
    i, j = 0, len(stack)
    while i < j and stack[i] != nxt(start):
        x = stack[i]
        if x == start:
            start = nxt(tw[x])
        elif x == prv(start):
            start = tw[x]
        else:  # pragma: no cover - guarded by check_path
            raise InvalidCurve("start corner is not in the first triangle")
        i += 1
    while j > i and tw[stack[j - 1]] != nxt(end):
        x = stack[j - 1]
        y = tw[x]
        if y == end:
            end = nxt(x)
        elif y == prv(end):
            end = x
        else:  # pragma: no cover
            raise InvalidCurve("end corner is not in the last triangle")
        j -= 1
    if i == j and start == end and not allow_trivial:
        raise Degenerate
    return Path(start, tuple(stack[i:j]), end)


def side_between(start: int, end: int) -> int:
    """The side joining two distinct corners of one triangle."""
    return start if end == nxt(start) else end


class Curve:
    """A homotopy class of open curves, held as a tight path in ``T``.

    The stored orientation is the one the curve was built with; equality and
    hashing ignore it.  Length-zero paths are arcs of ``T``.
    """

    __slots__ = ("T", "path", "key")

    def __init__(self, T: Triangulation, path: Path):
        self.T = T
        self.path = path
        if path.cross:
            w = path.cross
            r = reverse_word(T, w)
            self.key = ("w", min(w, r))
        else:
            a = T.arc_of[side_between(path.start, path.end)]
            if a < 0:
                raise InvalidCurve("boundary segments are zero objects, not curves")
            self.key = ("a", a)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Curve) and self.T is other.T
                and self.key == other.key)

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Curve({self.start}->{self.end}, {self.names()})"

    @property
    def start(self):
        return self.T.vert[self.path.start]

    @property
    def end(self):
        return self.T.vert[self.path.end]

    @property
    def length(self) -> int:
        return len(self.path.cross)

    @property
    def arc(self) -> int | None:
        """Arc id when the curve is an arc of ``T``."""
        return self.key[1] if self.key[0] == "a" else None

    def names(self) -> list[str]:
        if self.arc is not None:
            return [self.T.arc_names[self.arc]]
        return [self.T.side_name(x) for x in self.path.cross]

    def reversed(self) -> Curve:
        return Curve(self.T, reverse_path(self.T, self.path))


def curve_from_path(T: Triangulation, start: int, cross, end: int) -> Curve | None:
    """Normalised curve, or ``ZERO`` for a boundary segment or a trivial path."""
    check_path(T, start, cross, end)
    try:
        p = normalize(T, start, cross, end)
    except Degenerate:
        return ZERO
    if not p.cross and T.arc_of[side_between(p.start, p.end)] < 0:
        return ZERO
    return Curve(T, p)


def arc_curve(T: Triangulation, a: int) -> Curve:
    h = T.arc_half[a]
    return Curve(T, Path(h, (), nxt(h)))


def arc_path(T: Triangulation, a: int) -> Path:
    h = T.arc_half[a]
    return Path(h, (), nxt(h))


def word_curve(T: Triangulation, cross) -> Curve:
    """The curve crossing exactly the half-edges ``cross`` (already tight)."""
    cross = tuple(cross)
    if not cross:
        raise InvalidCurve("empty crossing word")
    c = curve_from_path(T, prv(cross[0]), cross, prv(T.twin[cross[-1]]))
    if c is None or c.path.cross != cross:
        raise InvalidCurve("crossing word is not reduced")
    return c


def dual_path(T: Triangulation, t0: int, t1: int) -> list[int]:
    """Shortest sequence of crossings from triangle ``t0`` to ``t1``."""
    if t0 == t1:
        return []
    prev = {t0: None}
    queue = [t0]
    for t in queue:
        for i in range(3):
            h = 3 * t + i
            u = T.twin[h]
            if u >= 0 and tri(u) not in prev:
                prev[tri(u)] = h
                if tri(u) == t1:
                    out = []
                    s = t1
                    while prev[s] is not None:
                        out.append(prev[s])
                        s = tri(prev[s])
                    return out[::-1]
                queue.append(tri(u))
    raise InvalidCurve("triangles lie in different components")


def curve_between(T: Triangulation, p, q) -> Curve | None:
    """The curve joining two marked points of a disk component."""
    s = T.surface
    if not (s.has_point(p) and s.has_point(q)):
        raise InvalidCurve(f"unknown marked point {p if not s.has_point(p) else q}")
    c = s.component_of_point(p)
    if c != s.component_of_point(q):
        raise InvalidCurve("endpoints lie in different components")
    if not s.is_disk(c):
        raise InvalidCurve("endpoint pairs only determine curves on disks")
    if p == q:
        raise InvalidCurve("a curve on a disk needs two distinct endpoints")
    a, b = T.bd_out[p], T.bd_out[q]
    return curve_from_path(T, a, dual_path(T, tri(a), tri(b)), b)


# ---------------------------------------------------------------- pivots

def _pivot_start_once(T: Triangulation, p: Path, forward: bool) -> Path:
    tw = T.twin
    c = p.start
    seq = []
    if forward:
        while tw[c] >= 0:
            seq.append(tw[c])
            c = nxt(tw[c])
        start = nxt(c)
    else:
        while tw[prv(c)] >= 0:
            seq.append(tw[prv(c)])
            c = tw[prv(c)]
        start = prv(c)
    # intermediate steps may pass through a trivial path
    return normalize(T, start, tuple(reversed(seq)) + p.cross, p.end, allow_trivial=True)


def _nontrivial(p: Path) -> Path:
    if not p.cross and p.start == p.end:
        raise Degenerate
    return p


def pivot_start_path(T: Triangulation, p: Path, k: int = 1) -> Path:
    """Move the start point ``k`` steps along the boundary (anticlockwise for
    ``k > 0``), keeping the other end fixed."""
    for _ in range(abs(k)):
        p = _pivot_start_once(T, p, k > 0)
    return _nontrivial(p)


def pivot_end_path(T: Triangulation, p: Path, k: int = 1) -> Path:
    q = reverse_path(T, p)
    for _ in range(abs(k)):
        q = _pivot_start_once(T, q, k > 0)
    return _nontrivial(reverse_path(T, q))


def _finish(T: Triangulation, p: Path) -> Curve | None:
    if not p.cross and T.arc_of[side_between(p.start, p.end)] < 0:
        return ZERO
    return Curve(T, p)


def pivot(curve: Curve, end: str, k: int = 1) -> Curve | None:
    """Move the ``"start"`` or ``"end"`` point of ``curve`` ``k`` steps along
    its boundary; ``k < 0`` moves clockwise."""
    T = curve.T
    try:
        if end == "start":
            p = pivot_start_path(T, curve.path, k)
        elif end == "end":
            p = pivot_end_path(T, curve.path, k)
        else:
            raise ValueError("end must be 'start' or 'end'")
    except Degenerate:
        return ZERO
    return _finish(T, p)


def shift(curve: Curve, k: int = 1) -> Curve:
    """Both endpoints move ``k`` steps; this is the suspension functor."""
    T = curve.T
    p = curve.path
    for _ in range(abs(k)):
        p = _pivot_start_once(T, p, k > 0)
        p = reverse_path(T, _pivot_start_once(T, reverse_path(T, p), k > 0))
    if not p.cross and p.start == p.end:  # pragma: no cover
        raise AssertionError("shift produced a trivial path")
    out = _finish(T, p)
    assert out is not None, "shift of a curve is never zero"
    return out


def ar_triangle(curve: Curve) -> tuple[Curve, list[Curve], Curve]:
    """``(shift(c), middle terms, c)``; pivots that hit a boundary segment
    are dropped from the middle."""
    mids = [pivot(curve, "start"), pivot(curve, "end")]
    return shift(curve), [m for m in mids if m is not None], curve


# ---------------------------------------------------------------- closed curves

def cyclic_reduce(T: Triangulation, cross) -> tuple[int, ...]:
    tw = T.twin
    stack: list[int] = []
    for x in cross:
        if stack and tw[stack[-1]] == x:
            stack.pop()
        else:
            stack.append(x)
    i, j = 0, len(stack)
    while j - i >= 2 and tw[stack[j - 1]] == stack[i]:
        i += 1
        j -= 1
    return tuple(stack[i:j])


def _min_rotation(w: tuple[int, ...]) -> tuple[int, ...]:
    return min(w[i:] + w[:i] for i in range(len(w)))


def _is_proper_power(w: tuple[int, ...]) -> bool:
    n = len(w)
    return any(n % d == 0 and w == w[:d] * (n // d) for d in range(1, n))


class ClosedCurve:
    """A primitive non-contractible closed curve with a band parameter."""

    __slots__ = ("T", "cross", "lam", "key")

    def __init__(self, T: Triangulation, cross, lam="l1"):
        cross = tuple(cross)
        n = len(cross)
        tw = T.twin
        for k in range(n):
            x, y = cross[k], cross[(k + 1) % n]
            if tw[x] < 0 or tri(tw[x]) != tri(y):
                raise InvalidCurve("closed word does not follow the dual graph")
        red = cyclic_reduce(T, cross)
        if not red:
            raise InvalidCurve("closed curve is contractible")
        if _is_proper_power(red):
            raise InvalidCurve("closed curve is not primitive")
        self.T = T
        self.cross = red
        self.lam = lam
        self.key = ("c", min(_min_rotation(red), _min_rotation(reverse_word(T, red))), lam)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClosedCurve) and self.T is other.T
                and self.key == other.key)

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"ClosedCurve({[self.T.side_name(x) for x in self.cross]}, {self.lam})"

    def names(self) -> list[str]:
        return [self.T.side_name(x) for x in self.cross]


def shift_closed(c: ClosedCurve) -> ClosedCurve:
    """Bands are fixed by the shift."""
    return c


# ---------------------------------------------------------------- enumeration

def iter_words(T: Triangulation, max_len: int) -> Iterator[tuple[int, ...]]:
    """Reduced crossing words of length 1..max_len, one per unoriented curve."""
    tw = T.twin
    arcs_h = [h for h in range(len(tw)) if tw[h] >= 0]

    def grow(word):
        yield word
        if len(word) == max_len:
            return
        u = tw[word[-1]]
        for y in (nxt(u), prv(u)):
            if tw[y] >= 0:
                yield from grow(word + (y,))

    for h in arcs_h:
        for w in grow((h,)):
            if w <= reverse_word(T, w):
                yield w


def enumerate_curves(T: Triangulation, max_len: int) -> list[Curve]:
    """Arcs of ``T`` and every curve crossing it at most ``max_len`` times."""
    out = [arc_curve(T, a) for a in range(T.n_arcs)]
    out.extend(word_curve(T, w) for w in iter_words(T, max_len))
    return out


def enumerate_closed(T: Triangulation, max_len: int) -> list[ClosedCurve]:
    """Primitive closed curves crossing ``T`` at most ``max_len`` times."""
    tw = T.twin
    seen = set()
    out = []
    for w in iter_words(T, max_len):
        if tri(tw[w[-1]]) != tri(w[0]) or tw[w[-1]] == w[0]:
            continue
        if _is_proper_power(w):
            continue
        c = ClosedCurve(T, w)
        if c.key in seen:
            continue
        seen.add(c.key)
        out.append(c)
    return out
