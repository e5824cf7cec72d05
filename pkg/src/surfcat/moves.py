"""Local moves on triangulations and the rewriting of curves through them.

A move replaces the triangles of a small disk (two triangles for a flip, one
for a point insertion) and keeps every other half-edge id.  A curve is
rewritten one passage at a time: each maximal run through the old region
enters and leaves by features of the region's boundary polygon, and is
replaced by the shortest run through the new region between the same two
features.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .curves import ClosedCurve, Curve, Path, cyclic_reduce, normalize
from .errors import NotFlippable
from .topology import Label, MarkedSurface
from .triangulation import Triangulation, nxt, prv, tri


@dataclass
class _Side:
    T: Triangulation
    tris: frozenset
    internal: frozenset  # half-edges interior to the region
    key: dict            # ("s", h) / ("c", c) -> polygon feature
    by_key: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for f, k in self.key.items():
            self.by_key.setdefault(k, []).append(f)


class LocalMove:
    def __init__(self, old: _Side, new: _Side, reversible: bool):
        self.old, self.new = old, new
        self.reversible = reversible

    @property
    def source(self) -> Triangulation:
        return self.old.T

    @property
    def target(self) -> Triangulation:
        return self.new.T

    # -- passage rewriting

    @staticmethod
    def _run(src: _Side, dst: _Side, tail, head):
        """Features and internal crossings of the shortest run in ``dst``."""
        tk, hk = src.key[tail], src.key[head]
        tails = dst.by_key[tk]
        heads = dst.by_key[hk]
        best = None
        for ft in tails:
            t0 = tri(ft[1])
            for fh in heads:
                t1 = tri(fh[1])
                path = _region_path(dst, t0, t1)
                if path is not None and (best is None or len(path) < len(best[2])):
                    best = (ft, fh, path)
        if best is None:  # pragma: no cover
            raise AssertionError("region features are disconnected")
        return best

    def _rewrite(self, src: _Side, dst: _Side, pos):
        """``pos`` lists (triangle, entry, exit) per position; returns the
        new first entry and the new sequence of exits."""
        out = []
        first = pos[0][1]
        k, n = 0, len(pos)
        while k < n:
            t, ent, ext = pos[k]
            if t not in src.tris:
                out.append(ext)
                k += 1
                continue
            k1 = k
            while pos[k1][2][0] == "s" and pos[k1][2][1] in src.internal:
                k1 += 1
            ft, fh, inner = self._run(src, dst, ent, pos[k1][2])
            if k == 0:
                first = ft
            out.extend(("s", x) for x in inner)
            out.append(fh)
            k = k1 + 1
        return first, out

    def _apply(self, path: Path, forward: bool) -> Path:
        src, dst = (self.old, self.new) if forward else (self.new, self.old)
        tw = src.T.twin
        xs = path.cross
        tris = [tri(path.start)] + [tri(tw[x]) for x in xs]
        if not any(t in src.tris for t in tris):
            return path
        ents = [("c", path.start)] + [("s", tw[x]) for x in xs]
        exts = [("s", x) for x in xs] + [("c", path.end)]
        first, out = self._rewrite(src, dst, list(zip(tris, ents, exts)))
        return normalize(dst.T, first[1], tuple(f[1] for f in out[:-1]), out[-1][1])

    def _apply_closed(self, cross, forward: bool):
        src, dst = (self.old, self.new) if forward else (self.new, self.old)
        tw = src.T.twin
        n = len(cross)
        if not any(tri(x) in src.tris for x in cross):
            return cross
        # rotate so that no run wraps around the end of the word
        r = next((i for i in range(n) if cross[i - 1] not in src.internal), None)
        if r is None:  # pragma: no cover
            raise AssertionError("closed curve trapped in a disk")
        cross = cross[r:] + cross[:r]
        pos = [(tri(cross[k]), ("s", tw[cross[k - 1]]), ("s", cross[k]))
               for k in range(n)]
        _, out = self._rewrite(src, dst, pos)
        return cyclic_reduce(dst.T, tuple(f[1] for f in out))

    def forward(self, obj):
        return self._move(obj, True)

    def backward(self, obj):
        if not self.reversible:
            raise ValueError("move cannot be undone")
        return self._move(obj, False)

    def _move(self, obj, forward: bool):
        src = self.old.T if forward else self.new.T
        dst = self.new.T if forward else self.old.T
        if obj.T is not src:
            raise ValueError("object does not live on the source triangulation")
        if isinstance(obj, Curve):
            return Curve(dst, self._apply(obj.path, forward))
        if isinstance(obj, ClosedCurve):
            return ClosedCurve(dst, self._apply_closed(obj.cross, forward), obj.lam)
        raise TypeError(type(obj))


def _region_path(side: _Side, t0: int, t1: int) -> list[int] | None:
    if t0 == t1:
        return []
    prev = {t0: None}
    queue = [t0]
    tw = side.T.twin
    for t in queue:
        for i in range(3):
            h = 3 * t + i
            if h not in side.internal:
                continue
            u = tri(tw[h])
            if u in prev:
                continue
            prev[u] = h
            if u == t1:
                out = []
                while prev[u] is not None:
                    out.append(prev[u])
                    u = tri(prev[u])
                return out[::-1]
            queue.append(u)
    return None


def _rebuild(T: Triangulation, surface: MarkedSurface, n_tri: int, remap: dict,
             fresh: dict, names) -> Triangulation:
    """New triangulation: ``remap`` sends moved outer half-edges to their new
    ids; ``fresh`` gives (twin, vert, arc) for every rewritten half-edge."""
    size = 3 * n_tri
    twin = list(T.twin) + [-1] * (size - len(T.twin))
    vert = list(T.vert) + [None] * (size - len(T.vert))
    arc_of = list(T.arc_of) + [-1] * (size - len(T.arc_of))
    for z in range(len(T.twin)):
        if z not in fresh and twin[z] in remap:
            twin[z] = remap[twin[z]]
    for h, (tw, v, a) in fresh.items():
        twin[h], vert[h], arc_of[h] = tw, v, a
    return Triangulation(surface, twin, vert, arc_of, names)


def flip(T: Triangulation, arc: int) -> LocalMove:
    """Replace ``arc`` by the other diagonal of its quadrilateral; the new
    diagonal keeps the arc's id and name."""
    if not 0 <= arc < T.n_arcs:
        raise NotFlippable(f"no arc with id {arc}")
    h = T.arc_half[arc]
    g = T.twin[h]
    t, s = tri(h), tri(g)
    if t == s:
        raise NotFlippable("arc borders a single triangle")
    vt, tw = T.vert, T.twin
    A, B, C, D = vt[h], vt[nxt(h)], vt[prv(h)], vt[prv(g)]
    ca, ad, db, bc = prv(h), nxt(g), prv(g), nxt(h)
    remap = {ca: 3 * t, ad: 3 * t + 1, db: 3 * s, bc: 3 * s + 1}
    u0, u1 = 3 * t, 3 * s

    def outer(o):
        w = tw[o]
        return remap.get(w, w)

    fresh = {
        u0: (outer(ca), C, T.arc_of[ca]),
        u0 + 1: (outer(ad), A, T.arc_of[ad]),
        u0 + 2: (u1 + 2, D, arc),
        u1: (outer(db), D, T.arc_of[db]),
        u1 + 1: (outer(bc), B, T.arc_of[bc]),
        u1 + 2: (u0 + 2, C, arc),
    }
    new = _rebuild(T, T.surface, T.n_tri, remap, fresh, T.arc_names)
    old_side = _Side(T, frozenset((t, s)), frozenset((h, g)), {
        ("s", ca): "CA", ("s", ad): "AD", ("s", db): "DB", ("s", bc): "BC",
        ("c", h): "A", ("c", nxt(g)): "A", ("c", nxt(h)): "B", ("c", g): "B",
        ("c", prv(h)): "C", ("c", prv(g)): "D"})
    new_side = _Side(new, frozenset((t, s)), frozenset((u0 + 2, u1 + 2)), {
        ("s", u0): "CA", ("s", u0 + 1): "AD", ("s", u1): "DB", ("s", u1 + 1): "BC",
        ("c", u0 + 1): "A", ("c", u1 + 1): "B", ("c", u0): "C", ("c", u1 + 2): "C",
        ("c", u0 + 2): "D", ("c", u1): "D"})
    return LocalMove(old_side, new_side, True)


def insert_point(T: Triangulation, h: int, label: Label) -> LocalMove:
    """Add marked point ``label`` in the middle of boundary side ``h``, joined
    to the opposite corner by a new arc."""
    if T.twin[h] >= 0:
        raise ValueError("side is not a boundary segment")
    s = T.surface
    if s.has_point(label):
        raise ValueError(f"marked point {label} already exists")
    u, v, w = T.vert[h], T.vert[nxt(h)], T.vert[prv(h)]
    b, i = s.position(u)
    pts = s.boundaries[b]
    bds = list(s.boundaries)
    bds[b] = pts[:i + 1] + (label,) + pts[i + 1:]
    surface = MarkedSurface(s.genera, tuple(bds), s.owner)
    t = tri(h)
    N = T.n_tri
    wu, vw = prv(h), nxt(h)
    remap = {wu: 3 * t + 2, vw: 3 * N + 1}
    tw = T.twin
    a = T.n_arcs
    names = T.arc_names + (f"a{a + 1}",)

    def outer(o):
        z = tw[o]
        return remap.get(z, z)

    fresh = {
        3 * t: (-1, u, -1),
        3 * t + 1: (3 * N + 2, label, a),
        3 * t + 2: (outer(wu), w, T.arc_of[wu]),
        3 * N: (-1, label, -1),
        3 * N + 1: (outer(vw), v, T.arc_of[vw]),
        3 * N + 2: (3 * t + 1, w, a),
    }
    new = _rebuild(T, surface, N + 1, remap, fresh, names)
    old_side = _Side(T, frozenset((t,)), frozenset(), {
        ("s", wu): "wu", ("s", vw): "vw",
        ("c", h): "u", ("c", vw): "v", ("c", wu): "w"})
    new_side = _Side(new, frozenset((t, N)), frozenset((3 * t + 1, 3 * N + 2)), {
        ("s", 3 * t + 2): "wu", ("s", 3 * N + 1): "vw",
        ("c", 3 * t): "u", ("c", 3 * t + 1): "x", ("c", 3 * t + 2): "w",
        ("c", 3 * N): "x", ("c", 3 * N + 1): "v", ("c", 3 * N + 2): "w"})
    return LocalMove(old_side, new_side, False)


class Chart:
    """A composite of moves from a base triangulation to ``self.T``."""

    def __init__(self, base: Triangulation):
        self.base = base
        self.T = base
        self.moves: list[LocalMove] = []

    def push(self, move: LocalMove) -> LocalMove:
        if move.source is not self.T:
            raise ValueError("move does not start at the current triangulation")
        self.moves.append(move)
        self.T = move.target
        return move

    def flip(self, arc: int) -> None:
        self.push(flip(self.T, arc))

    def to_current(self, obj):
        for m in self.moves:
            obj = m.forward(obj)
        return obj

    def to_base(self, obj):
        for m in reversed(self.moves):
            obj = m.backward(obj)
        return obj

    def make_arc(self, curve: Curve, keep=()) -> int:
        """Flip until ``curve`` (on the current triangulation) is an arc;
        returns its arc id.  Arcs in ``keep`` are never flipped."""
        while curve.arc is None:
            a = curve.T.arc_of[curve.path.cross[0]]
            if a in keep:
                raise ValueError("curve crosses an arc that must be kept")
            m = flip(self.T, a)
            self.push(m)
            curve = m.forward(curve)
        return curve.arc
