# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of quadlie._kernels_py.

Same algorithms over arbitrary-precision Python ints; the win comes from
removing interpreter dispatch in the inner elimination loops. Outputs must be
identical to the pure backend (enforced by tests/test_kernels.py).
"""

from math import gcd


cdef void _content_reduce(list row):
    cdef Py_ssize_t i, n = len(row)
    g = 0
    for i in range(n):
        x = row[i]
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for i in range(n):
            x = row[i]
            if x:
                row[i] = x // g


def rref_int(rows, ncols):
    """Canonical integer RREF representative and pivot columns (see pure twin)."""
    cdef Py_ssize_t nc = ncols
    cdef list work = [list(src) for src in rows]
    cdef Py_ssize_t nrows = len(work)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, best
    cdef list row, prow
    for c in range(nc):
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            v = (<list>work[i])[c]
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
        if best < 0:
            continue
        if best != r:
            work[r], work[best] = work[best], work[r]
        prow = <list>work[r]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list>work[i]
            q = row[c]
            if not q:
                continue
            g = gcd(p, q)
            a = p // g
            b = q // g
            for j in range(nc):
                row[j] = a * row[j] - b * prow[j]
            _content_reduce(row)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for r in range(len(pivots)):
        c = pivots[r]
        row = <list>work[r]
        _content_reduce(row)
        if row[c] < 0:
            for j in range(nc):
                row[j] = -row[j]
    return work, pivots


def det_int(rows):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    cdef list work = [list(r) for r in rows]
    cdef Py_ssize_t n = len(work)
    if n == 0:
        return 1
    cdef int sign = 1
    cdef Py_ssize_t k, i, j
    cdef list ri, rk
    prev = 1
    for k in range(n - 1):
        if (<list>work[k])[k] == 0:
            for i in range(k + 1, n):
                if (<list>work[i])[k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = <list>work[k]
        pk = rk[k]
        for i in range(k + 1, n):
            ri = <list>work[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * (<list>work[n - 1])[n - 1]
