# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled stepping kernels for the built-in systems.

Mirror of ``koopcert._backend._ref``: same functions, same floating-point
operation order (the build uses -ffp-contract=off), so results are
bit-identical to the NumPy reference.  Keep the two files in sync.
"""

from libc.math cimport sqrt, fabs, isfinite

import numpy as np

GUARD = 1.0e12
cdef double _GUARD = 1.0e12


def em_paths_ou(double[::1] x0, double h, double[:, ::1] noise, double[:, ::1] out):
    cdef Py_ssize_t B = noise.shape[0]
    cdef Py_ssize_t n = noise.shape[1]
    cdef Py_ssize_t b, k
    cdef double x, ns, dr
    cdef double sqrt_h = sqrt(h)
    bad_arr = np.full(B, -1, dtype=np.int64)
    cdef long long[::1] bad = bad_arr
    with nogil:
        for b in range(B):
            x = x0[b]
            out[b, 0] = x
            for k in range(n):
                ns = sqrt_h * noise[b, k]
                dr = -x
                x = x + dr * h + 1.0 * ns
                out[b, k + 1] = x
                if bad[b] < 0 and not (fabs(x) <= _GUARD):
                    bad[b] = k + 1
    return bad_arr


def em_paths_ou_controlled(double alpha, double beta, double[::1] x0,
                           double[:, ::1] u, Py_ssize_t substeps, double h,
                           double[:, ::1] noise, double[:, ::1] out):
    cdef Py_ssize_t B = u.shape[0]
    cdef Py_ssize_t K = u.shape[1]
    cdef Py_ssize_t b, j, s, k
    cdef double x, ns, g, dr, c
    cdef double sqrt_h = sqrt(h)
    cdef double sig = sqrt(2.0 / beta)
    bad_arr = np.full(B, -1, dtype=np.int64)
    cdef long long[::1] bad = bad_arr
    with nogil:
        for b in range(B):
            x = x0[b]
            out[b, 0] = x
            k = 0
            for j in range(K):
                c = u[b, j]
                for s in range(substeps):
                    ns = sqrt_h * noise[b, k]
                    g = -(alpha * x)
                    dr = g * c
                    x = x + dr * h + sig * ns
                    out[b, k + 1] = x
                    if bad[b] < 0 and not (fabs(x) <= _GUARD):
                        bad[b] = k + 1
                    k += 1
    return bad_arr


cdef inline void _duffing_field(double alpha, double beta, double delta,
                                double x1, double x2, double c,
                                double* f1, double* f2) nogil:
    cdef double cub = (x1 * x1) * x1
    cdef double g2 = -((2.0 * beta) * cub)
    f1[0] = x2
    f2[0] = (-(delta * x2) - alpha * x1) + g2 * c


def em_paths_duffing(double alpha, double beta, double delta,
                     double[:, ::1] x0, double[:, ::1] u, Py_ssize_t substeps,
                     double h, double[:, :, ::1] out):
    cdef Py_ssize_t B = u.shape[0]
    cdef Py_ssize_t K = u.shape[1]
    cdef Py_ssize_t b, j, s, k
    cdef double x1, x2, f1, f2, c
    bad_arr = np.full(B, -1, dtype=np.int64)
    cdef long long[::1] bad = bad_arr
    with nogil:
        for b in range(B):
            x1 = x0[b, 0]
            x2 = x0[b, 1]
            out[b, 0, 0] = x1
            out[b, 0, 1] = x2
            k = 0
            for j in range(K):
                c = u[b, j]
                for s in range(substeps):
                    _duffing_field(alpha, beta, delta, x1, x2, c, &f1, &f2)
                    x1 = x1 + f1 * h
                    x2 = x2 + f2 * h
                    out[b, k + 1, 0] = x1
                    out[b, k + 1, 1] = x2
                    if bad[b] < 0 and not (fabs(x1) <= _GUARD and fabs(x2) <= _GUARD):
                        bad[b] = k + 1
                    k += 1
    return bad_arr


def rk4_paths_duffing(double alpha, double beta, double delta,
                      double[:, ::1] x0, double[:, ::1] u, Py_ssize_t substeps,
                      double h, double[:, :, ::1] out):
    cdef Py_ssize_t B = u.shape[0]
    cdef Py_ssize_t K = u.shape[1]
    cdef Py_ssize_t b, j, s, k
    cdef double x1, x2, c
    cdef double k11, k12, k21, k22, k31, k32, k41, k42, s1, s2
    cdef double hh = h * 0.5
    cdef double h6 = h / 6.0
    bad_arr = np.full(B, -1, dtype=np.int64)
    cdef long long[::1] bad = bad_arr
    with nogil:
        for b in range(B):
            x1 = x0[b, 0]
            x2 = x0[b, 1]
            out[b, 0, 0] = x1
            out[b, 0, 1] = x2
            k = 0
            for j in range(K):
                c = u[b, j]
                for s in range(substeps):
                    _duffing_field(alpha, beta, delta, x1, x2, c, &k11, &k12)
                    _duffing_field(alpha, beta, delta, x1 + hh * k11, x2 + hh * k12, c, &k21, &k22)
                    _duffing_field(alpha, beta, delta, x1 + hh * k21, x2 + hh * k22, c, &k31, &k32)
                    _duffing_field(alpha, beta, delta, x1 + h * k31, x2 + h * k32, c, &k41, &k42)
                    s1 = ((k11 + 2.0 * k21) + 2.0 * k31) + k41
                    s2 = ((k12 + 2.0 * k22) + 2.0 * k32) + k42
                    x1 = x1 + h6 * s1
                    x2 = x2 + h6 * s2
                    out[b, k + 1, 0] = x1
                    out[b, k + 1, 1] = x2
                    if bad[b] < 0 and not (fabs(x1) <= _GUARD and fabs(x2) <= _GUARD):
                        bad[b] = k + 1
                    k += 1
    return bad_arr
