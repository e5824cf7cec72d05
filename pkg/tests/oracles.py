"""Independent oracles used by the test-suite."""
from __future__ import annotations

import itertools
import random

from surfcat.stralg import Quiver, StringWord, is_string


def random_string_algebra(rng: random.Random, max_vertices: int = 5,
                          max_arrows: int = 7) -> Quiver:
    """Random finite-dimensional string algebra: at most two arrows in and
    out of each vertex, and a random partial matching of incoming with
    outgoing arrows at each vertex marks the composites that survive."""
    while True:
        n = rng.randint(1, max_vertices)
        arrows = []
        indeg = [0] * n
        outdeg = [0] * n
        for _ in range(rng.randint(0, max_arrows)):
            s, t = rng.randrange(n), rng.randrange(n)
            if outdeg[s] < 2 and indeg[t] < 2:
                arrows.append((s, t))
                outdeg[s] += 1
                indeg[t] += 1
        allowed = set()
        for v in range(n):
            ins = [a for a, (_, t) in enumerate(arrows) if t == v]
            outs = [b for b, (s, _) in enumerate(arrows) if s == v]
            rng.shuffle(outs)
            for a, b in zip(ins, outs):
                if rng.random() < 0.6:
                    allowed.add((a, b))
        rel = set()
        for a, (_, t) in enumerate(arrows):
            for b, (s, _) in enumerate(arrows):
                if s == t and (a, b) not in allowed:
                    rel.add((a, b))
        # nonzero paths must be finite: the allowed-composition graph is acyclic
        succ = {a: [b for (x, b) in allowed if x == a] for a in range(len(arrows))}
        if _has_cycle(succ):
            continue
        return Quiver(n, tuple(arrows), frozenset(rel))


def _has_cycle(succ) -> bool:
    state = {}

    def visit(a) -> bool:
        state[a] = 1
        for b in succ[a]:
            if state.get(b) == 1 or (b not in state and visit(b)):
                return True
        state[a] = 2
        return False

    return any(a not in state and visit(a) for a in succ)


def strings_of(q: Quiver, max_len: int) -> list[StringWord]:
    """All strings up to ``max_len`` letters, one per inverse pair."""
    out = [StringWord((v,), ()) for v in range(q.n_vertices)]
    seen = set()
    frontier = list(out)
    for _ in range(max_len):
        new = []
        for w in frontier:
            x = w.vertices[-1]
            for a, (s, t) in enumerate(q.arrows):
                for sign, (u, v) in ((1, (s, t)), (-1, (t, s))):
                    if u != x:
                        continue
                    cand = StringWord(w.vertices + (v,), w.letters + ((a, sign),))
                    if is_string(q, cand):
                        new.append(cand)
        frontier = new
        for w in new:
            k = w.canonical()
            if k not in seen:
                seen.add(k)
                out.append(w)
    return out


def interleaved(a: int, b: int, c: int, d: int) -> bool:
    if len({a, b, c, d}) < 4:
        return False
    lo, hi = min(a, b), max(a, b)
    return (lo < c < hi) != (lo < d < hi)


def ptolemy_diagrams(n: int) -> set[frozenset]:
    """All sets of diagonals of an n-gon satisfying the Ptolemy condition:
    whenever two members cross, every diagonal joining two of their four
    endpoints is a member as well."""
    diags = [(i, j) for i, j in itertools.combinations(range(n), 2)
             if (j - i) % n not in (1, n - 1)]
    is_diag = set(diags)
    cross = {}
    for a, b in itertools.combinations(diags, 2):
        if interleaved(*a, *b):
            ends = sorted(set(a) | set(b))
            need = [p for p in itertools.combinations(ends, 2) if p in is_diag]
            cross[(a, b)] = need
    out = set()
    for mask in range(1 << len(diags)):
        chosen = {diags[i] for i in range(len(diags)) if mask >> i & 1}
        ok = True
        for (a, b), need in cross.items():
            if a in chosen and b in chosen and not all(p in chosen for p in need):
                ok = False
                break
        if ok:
            out.add(frozenset(chosen))
    return out
