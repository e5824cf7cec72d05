# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the loops in ``_kernels_py``; same signatures."""

from libc.stdlib cimport malloc, free


cdef long* _carr(seq) except NULL:
    cdef Py_ssize_t n = len(seq), i
    cdef long* out = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


cdef inline long _mod6(long x):
    x %= 6
    return x + 6 if x < 0 else x


def segment_crossings(ta, ea, xa, ca, tb, eb, xb, cb, bint singles, bint skip_identity):
    cdef Py_ssize_t n = len(ta), m = len(tb), a, b, k
    cdef long *TA = _carr(ta)
    cdef long *EA = _carr(ea)
    cdef long *XA = _carr(xa)
    cdef long *CA = _carr(ca)
    cdef long *TB = _carr(tb)
    cdef long *EB = _carr(eb)
    cdef long *XB = _carr(xb)
    cdef long *CB = _carr(cb)
    cdef long total = 0, p, q, r, s, lo, hi, x0, y0
    cdef bint tail, head
    try:
        for a in range(n):
            for b in range(m):
                if TB[b] != TA[a]:
                    continue
                if a > 0 and b > 0 and CA[a - 1] == CB[b - 1]:
                    continue
                k = 0
                while a + k < n - 1 and b + k < m - 1 and CA[a + k] == CB[b + k]:
                    k += 1
                if skip_identity and a == 0 and b == 0 and k == n - 1 and n == m:
                    continue
                if k == 0:
                    if not singles:
                        continue
                    p = EA[a]; q = XA[a]; r = EB[b]; s = XB[b]
                    if p == r or p == s or q == r or q == s:
                        continue
                    if p < q:
                        lo = p; hi = q
                    else:
                        lo = q; hi = p
                    if (lo < r and r < hi) != (lo < s and s < hi):
                        total += 1
                    continue
                p = EA[a]; r = EB[b]
                q = XA[a + k]; s = XB[b + k]
                if p == r or q == s:
                    continue
                x0 = XA[a]
                y0 = EA[a + k]
                tail = _mod6(p - x0) < _mod6(r - x0)
                head = _mod6(q - y0) < _mod6(s - y0)
                if tail == head:
                    total += 1
    finally:
        free(TA); free(EA); free(XA); free(CA)
        free(TB); free(EB); free(XB); free(CB)
    return total


def admissible_pairs(w, fsegs, v, ssegs):
    cdef long *W = _carr(w)
    cdef long *V = _carr(v)
    cdef Py_ssize_t nf = len(fsegs), ns = len(ssegs), i, f, s, L
    cdef long *FJ = <long*> malloc((nf + 1) * sizeof(long))
    cdef long *FK = <long*> malloc((nf + 1) * sizeof(long))
    cdef long *SJ = <long*> malloc((ns + 1) * sizeof(long))
    cdef long *SK = <long*> malloc((ns + 1) * sizeof(long))
    cdef long total = 0, wj, wk, vj, x, y
    cdef bint fwd, rev
    if FJ == NULL or FK == NULL or SJ == NULL or SK == NULL:
        free(W); free(V); free(FJ); free(FK); free(SJ); free(SK)
        raise MemoryError()
    try:
        for f in range(nf):
            FJ[f] = fsegs[f][0]; FK[f] = fsegs[f][1]
        for s in range(ns):
            SJ[s] = ssegs[s][0]; SK[s] = ssegs[s][1]
        for f in range(nf):
            wj = 2 * FJ[f]
            wk = 2 * FK[f]
            L = wk - wj
            for s in range(ns):
                vj = 2 * SJ[s]
                if 2 * SK[s] - vj != L:
                    continue
                fwd = True
                for i in range(L + 1):
                    if W[wj + i] != V[vj + i]:
                        fwd = False
                        break
                rev = True
                for i in range(L + 1):
                    x = W[wk - i]
                    if i & 1:
                        x = -x
                    if x != V[vj + i]:
                        rev = False
                        break
                if L == 0:
                    total += fwd
                else:
                    total += fwd + rev
    finally:
        free(W); free(V); free(FJ); free(FK); free(SJ); free(SK)
    return total
