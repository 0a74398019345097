# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fundamental-identity sweep over a dense int64 structure table.

``coef[rank(t), k]`` is the k-th coordinate of [e_t1, ..., e_tn] for the
sorted 0-based tuple t, rows in colex order.  The caller scales rational
constants to integers and guarantees |entries| small enough that every
residual fits in int64.
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef inline long colex_rank(long* t, int n, long[:, ::1] binom) noexcept nogil:
    cdef long r = 0
    cdef int i
    for i in range(n):
        r += binom[t[i], i + 1]
    return r


cdef inline int sort_signed(long* t, int n) noexcept nogil:
    """Insertion sort in place; returns permutation sign, 0 on a repeat."""
    cdef int i, j, sign = 1
    cdef long v
    for i in range(1, n):
        v = t[i]
        j = i - 1
        while j >= 0 and t[j] > v:
            t[j + 1] = t[j]
            j -= 1
            sign = -sign
        t[j + 1] = v
        if j >= 0 and t[j] == v:
            return 0
    return sign


def fi_sweep(long[:, ::1] coef, int n, int d, long[:, ::1] xs, long[:, ::1] ys,
             long[:, ::1] binom):
    """Nonzero residuals of the fundamental identity.

    Returns a list of ``(x_row, y_row, residual)`` where the rows index
    ``xs`` and ``ys`` and ``residual`` is an int64 array of length d.
    """
    cdef Py_ssize_t nx = xs.shape[0], ny = ys.shape[0]
    cdef Py_ssize_t ix, iy
    cdef int i, j, m, k, p, sgn
    cdef long r, c, a
    cdef bint any_ad, touched
    cdef long[:, ::1] ad = np.zeros((d, d), dtype=np.int64)
    cdef long[::1] dom = np.zeros(d, dtype=np.int64)
    cdef long[::1] res = np.zeros(d, dtype=np.int64)
    cdef long[::1] rowzero = np.zeros(coef.shape[0], dtype=np.int64)
    cdef long* t = <long*> malloc(n * sizeof(long))
    out = []
    try:
        for r in range(coef.shape[0]):
            rowzero[r] = 1
            for k in range(d):
                if coef[r, k] != 0:
                    rowzero[r] = 0
                    break
        for iy in range(ny):
            # ad[m, :] = [e_m, e_y1, ..., e_y(n-1)]
            any_ad = False
            for m in range(d):
                dom[m] = 0
                for k in range(d):
                    ad[m, k] = 0
                t[0] = m
                for j in range(n - 1):
                    t[j + 1] = ys[iy, j]
                sgn = sort_signed(t, n)
                if sgn == 0:
                    continue
                r = colex_rank(t, n, binom)
                if rowzero[r]:
                    continue
                for k in range(d):
                    ad[m, k] = sgn * coef[r, k]
                dom[m] = 1
                any_ad = True
            if not any_ad:
                continue
            for ix in range(nx):
                for j in range(n):
                    t[j] = xs[ix, j]
                r = colex_rank(t, n, binom)
                touched = not rowzero[r]
                if not touched:
                    for j in range(n):
                        if dom[xs[ix, j]]:
                            touched = True
                            break
                if not touched:
                    continue
                for k in range(d):
                    res[k] = 0
                if not rowzero[r]:
                    for m in range(d):
                        c = coef[r, m]
                        if c != 0 and dom[m]:
                            for k in range(d):
                                res[k] += c * ad[m, k]
                for i in range(n):
                    if not dom[xs[ix, i]]:
                        continue
                    for m in range(d):
                        a = ad[xs[ix, i], m]
                        if a == 0:
                            continue
                        for j in range(n):
                            t[j] = xs[ix, j]
                        t[i] = m
                        sgn = sort_signed(t, n)
                        if sgn == 0:
                            continue
                        p = colex_rank(t, n, binom)
                        if rowzero[p]:
                            continue
                        for k in range(d):
                            res[k] -= a * sgn * coef[p, k]
                for k in range(d):
                    if res[k] != 0:
                        out.append((ix, iy, np.asarray(res).copy()))
                        break
    finally:
        free(t)
    return out
