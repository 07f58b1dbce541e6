# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: hypergeometric series and cyclic Jacobi.

Mirrors the API of _pure.py; selected automatically in _kernels/__init__.
"""

from libc.math cimport fabs, sqrt

import numpy as np

BACKEND = "compiled"


def hyp2f1_series(double a, double b, double c, double z,
                  double rtol=1e-16, long max_terms=10_000_000):
    cdef double total = 1.0
    cdef double term = 1.0
    cdef int small = 0
    cdef long m = 0
    while m < max_terms:
        term *= (a + m) * (b + m) * z / ((c + m) * (m + 1.0))
        total += term
        m += 1
        if fabs(term) < rtol * fabs(total):
            small += 1
            if small == 2:
                return total, m + 1, True
        else:
            small = 0
    return total, m + 1, False


def jacobi_eigenvalues(mat, double tol=1e-14, int max_sweeps=100):
    cdef double[:, ::1] a = np.array(mat, dtype=np.float64, order="C", copy=True)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i, sweep
    cdef double off, apq, theta, t, cs, sn, aip, aiq
    if n == 1:
        return np.asarray(a).diagonal().copy(), 0, True
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p, q] * a[p, q]
        off = sqrt(2.0 * off)
        if off <= tol:
            return np.asarray(a).diagonal().copy(), sweep, True
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 if theta >= 0 else -1.0
                t /= fabs(theta) + sqrt(theta * theta + 1.0)
                cs = 1.0 / sqrt(t * t + 1.0)
                sn = t * cs
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = cs * aip - sn * aiq
                    a[i, q] = sn * aip + cs * aiq
                for i in range(n):
                    aip = a[p, i]
                    aiq = a[q, i]
                    a[p, i] = cs * aip - sn * aiq
                    a[q, i] = sn * aip + cs * aiq
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off += a[p, q] * a[p, q]
    off = sqrt(2.0 * off)
    return np.asarray(a).diagonal().copy(), max_sweeps, bool(off <= tol)
