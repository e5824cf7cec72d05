"""Pure-Python versions of the hot loops.

The compiled module ``_kernels`` exposes the same functions with the same
signatures; ``kernels.py`` picks one at import time.
"""
from __future__ import annotations


def segment_crossings(ta, ea, xa, ca, tb, eb, xb, cb, singles, skip_identity):
    """Crossings between one lift of curve A and the lifts of curve B that
    share a maximal run of triangles with it, B running the same way as A.

    ``t*`` is the triangle at each position, ``e*``/``x*`` the entry/exit
    feature codes (corner i -> 2i, side i -> 2i+1) and ``c*`` the half-edges
    crossed between consecutive positions.  Runs of a single triangle are
    only counted when ``singles`` is set and no feature is shared.
    """
    n, m = len(ta), len(tb)
    total = 0
    for a in range(n):
        ta_a = ta[a]
        for b in range(m):
            if tb[b] != ta_a:
                continue
            if a and b and ca[a - 1] == cb[b - 1]:
                continue
            k = 0
            while a + k < n - 1 and b + k < m - 1 and ca[a + k] == cb[b + k]:
                k += 1
            if skip_identity and a == 0 and b == 0 and k == n - 1 and n == m:
                continue
            if k == 0:
                if not singles:
                    continue
                p, q, r, s = ea[a], xa[a], eb[b], xb[b]
                # a shared side belongs to a run in the other direction
                if p == r or p == s or q == r or q == s:
                    continue
                lo, hi = (p, q) if p < q else (q, p)
                if (lo < r < hi) != (lo < s < hi):
                    total += 1
                continue
            pa, pb = ea[a], eb[b]
            qa, qb = xa[a + k], xb[b + k]
            if pa == pb or qa == qb:  # common endpoint
                continue
            x0 = xa[a]
            y0 = ea[a + k]
            tail = (pa - x0) % 6 < (pb - x0) % 6
            head = (qa - y0) % 6 < (qb - y0) % 6
            if tail == head:
                total += 1
    return total


def _key(w, j, k):
    return tuple(w[2 * j:2 * k + 1])


def _inverse(key):
    return tuple(-v if i & 1 else v for i, v in enumerate(reversed(key)))


def admissible_pairs(w, fsegs, v, ssegs):
    """Pairs (factor segment of ``w``, substring segment of ``v``) whose
    underlying walks agree up to inversion.

    Walks are flat int lists ``[x0, l0, x1, l1, ..., xn]``: vertices at even
    offsets, letters at odd offsets as ``+-(arrow + 1)``.  Segments are
    ``(j, k)`` vertex index pairs, inclusive.
    """
    counts: dict = {}
    for j, k in ssegs:
        key = _key(v, j, k)
        counts[key] = counts.get(key, 0) + 1
    total = 0
    for j, k in fsegs:
        key = _key(w, j, k)
        total += counts.get(key, 0)
        inv = _inverse(key)
        if inv != key:
            total += counts.get(inv, 0)
    return total
