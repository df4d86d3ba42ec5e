# cython: language_level=3
"""Compiled polynomial kernels for the cyclotomic arithmetic hot loop.

Same semantics as eistrace._core_py; coefficients stay generic Python
objects (exact rationals), the speedup comes from compiled loop and list
indexing overhead.
"""


def poly_mul(list a, list b, zero):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j
    cdef list out = [zero] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def poly_reduce(list c, list phi_tail):
    cdef Py_ssize_t d = len(phi_tail)
    cdef Py_ssize_t i, j, base
    for i in range(len(c) - 1, d - 1, -1):
        t = c[i]
        if t:
            base = i - d
            for j in range(d):
                pj = phi_tail[j]
                if pj:
                    c[base + j] = c[base + j] - t * pj
    return c[:d]
