# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled tableau kernels. Same contracts as ``polylrs._pykernels``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.math cimport fabs

import numpy as np

NO_CANDIDATE = -1
TIE = -2


def pivot_inplace(T, Py_ssize_t t, Py_ssize_t s, double zero_snap):
    if T.dtype == object:
        _pivot_object(T, t, s)
    else:
        _pivot_float(T, t, s, zero_snap)


cdef void _pivot_float(double[:, ::1] T, Py_ssize_t t, Py_ssize_t s, double zero_snap) noexcept:
    cdef Py_ssize_t rows = T.shape[0], cols = T.shape[1], i, j
    cdef double piv = T[t, s], f
    for j in range(cols):
        T[t, j] = T[t, j] / piv
    for i in range(rows):
        if i == t:
            continue
        f = T[i, s]
        if f == 0.0:
            continue
        for j in range(cols):
            T[i, j] = T[i, j] - f * T[t, j]
    if zero_snap > 0.0:
        for i in range(rows):
            for j in range(cols):
                if fabs(T[i, j]) <= zero_snap:
                    T[i, j] = 0.0
    for i in range(rows):
        T[i, s] = 0.0
    T[t, s] = 1.0


cdef _pivot_object(object[:, :] T, Py_ssize_t t, Py_ssize_t s):
    cdef Py_ssize_t rows = T.shape[0], cols = T.shape[1], i, j, k, nnz = 0
    cdef object piv = T[t, s]
    cdef object zero = piv - piv
    cdef object one = piv / piv
    cdef object f
    cdef Py_ssize_t *nz = <Py_ssize_t *> PyMem_Malloc(cols * sizeof(Py_ssize_t))
    if nz == NULL:
        raise MemoryError()
    try:
        for j in range(cols):
            if T[t, j]:
                nz[nnz] = j
                nnz += 1
                T[t, j] = T[t, j] / piv
        for i in range(rows):
            if i == t:
                continue
            f = T[i, s]
            if not f:
                continue
            for k in range(nnz):
                j = nz[k]
                T[i, j] = T[i, j] - f * T[t, j]
            T[i, s] = zero
        T[t, s] = one
    finally:
        PyMem_Free(nz)


def lex_ratio_row(T, Py_ssize_t s, Py_ssize_t d):
    if T.dtype == object:
        return _ratio_object(T, s, d)
    return _ratio_float(T, s, d)


cdef Py_ssize_t _ratio_float(double[:, ::1] T, Py_ssize_t s, Py_ssize_t d) except -3:
    cdef Py_ssize_t rows = T.shape[0], cols = T.shape[1]
    cdef Py_ssize_t i, k, c, n = 0, kept
    cdef double low, val
    cdef Py_ssize_t *cand = <Py_ssize_t *> PyMem_Malloc(rows * sizeof(Py_ssize_t))
    cdef double *scale = <double *> PyMem_Malloc(rows * sizeof(double))
    cdef double *vals = <double *> PyMem_Malloc(rows * sizeof(double))
    if cand == NULL or scale == NULL or vals == NULL:
        PyMem_Free(cand); PyMem_Free(scale); PyMem_Free(vals)
        raise MemoryError()
    try:
        for i in range(d + 1, rows):
            if T[i, s] > 0.0:
                cand[n] = i
                scale[n] = 1.0 / T[i, s]
                n += 1
        if n == 0:
            return NO_CANDIDATE
        # column order: last, then 0 .. rows-1
        for k in range(-1, rows):
            if n == 1:
                break
            c = cols - 1 if k < 0 else k
            low = scale[0] * T[cand[0], c]
            for i in range(n):
                vals[i] = scale[i] * T[cand[i], c]
                if vals[i] < low:
                    low = vals[i]
            kept = 0
            for i in range(n):
                if vals[i] == low:
                    cand[kept] = cand[i]
                    scale[kept] = scale[i]
                    kept += 1
            n = kept
        return cand[0] if n == 1 else TIE
    finally:
        PyMem_Free(cand); PyMem_Free(scale); PyMem_Free(vals)


cdef Py_ssize_t _ratio_object(object[:, :] T, Py_ssize_t s, Py_ssize_t d) except -3:
    cdef Py_ssize_t rows = T.shape[0], cols = T.shape[1]
    cdef Py_ssize_t i, k, c
    cdef list cand = [], scale = [], vals, keep_c, keep_s
    cdef object low, x
    for i in range(d + 1, rows):
        if T[i, s] > 0:
            cand.append(i)
            scale.append(T[i, s])
    if not cand:
        return NO_CANDIDATE
    for k in range(-1, rows):
        if len(cand) == 1:
            break
        c = cols - 1 if k < 0 else k
        vals = []
        for i in range(len(cand)):
            x = T[<Py_ssize_t> cand[i], c]
            vals.append(x / scale[i] if x else x)
        low = min(vals)
        keep_c = []
        keep_s = []
        for i in range(len(cand)):
            if vals[i] == low:
                keep_c.append(cand[i])
                keep_s.append(scale[i])
        cand, scale = keep_c, keep_s
    return cand[0] if len(cand) == 1 else TIE


def lexmin_violation(T, basis, cobasis, Py_ssize_t v):
    if T.dtype == object:
        return _lexmin_object(T, list(basis), list(cobasis), v)
    return _lexmin_float(T, np.asarray(basis, dtype=np.intp), np.asarray(cobasis, dtype=np.intp), v)


cdef bint _lexmin_float(double[:, ::1] T, Py_ssize_t[::1] basis, Py_ssize_t[::1] cobasis, Py_ssize_t v):
    cdef Py_ssize_t last = T.shape[1] - 1, t, k, r, s
    for t in range(basis.shape[0]):
        if T[t, last] != 0.0:
            continue
        if v and T[t, v - 1] != 0.0:
            continue
        r = basis[t]
        for k in range(cobasis.shape[0]):
            s = cobasis[k]
            if r > s and T[t, s - 1] != 0.0:
                return True
    return False


cdef bint _lexmin_object(object[:, :] T, list basis, list cobasis, Py_ssize_t v) except -1:
    cdef Py_ssize_t last = T.shape[1] - 1, t, r, s
    for t in range(len(basis)):
        if T[t, last]:
            continue
        if v and T[t, v - 1]:
            continue
        r = basis[t]
        for s in cobasis:
            if r > s and T[t, s - 1]:
                return True
    return False
