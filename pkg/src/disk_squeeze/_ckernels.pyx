# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, cos, sin, tanh, pow

cnp.import_array()

cdef int KIND_STABLE = 0
cdef int KIND_FREE = 1


def squeezed_amplitudes(z, Py_ssize_t n):
    cdef double complex zz = z
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.zeros(n, dtype=np.complex128)
    if n == 0:
        return out
    cdef double complex c = pow(1.0 - (zz.real * zz.real + zz.imag * zz.imag), 0.25)
    cdef double complex h = -0.5 * zz
    cdef Py_ssize_t m = 0
    out[0] = c
    while 2 * m + 2 < n:
        c = c * h * sqrt(<double>((2 * m + 1) * (2 * m + 2))) / (m + 1)
        out[2 * m + 2] = c
        m += 1
    return out


cdef inline void _coeffs(double omega, int kind, double rate, double t, double* C, double* s) noexcept nogil:
    if kind == KIND_STABLE:
        C[0] = cos(rate * t)
        s[0] = sin(rate * t) / rate
    elif kind == KIND_FREE:
        C[0] = 1.0
        s[0] = t
    else:
        C[0] = 1.0
        s[0] = tanh(rate * t) / rate


def simulate_sequence(z0, durations, indices, omegas, alphas, kinds, rates):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] z = np.array(z0, dtype=np.complex128, copy=True)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] dur = np.ascontiguousarray(durations, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] om = np.ascontiguousarray(omegas, dtype=np.float64)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] al = np.ascontiguousarray(alphas, dtype=np.complex128)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] kd = np.ascontiguousarray(kinds, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rt = np.ascontiguousarray(rates, dtype=np.float64)
    cdef Py_ssize_t m = dur.shape[0], n = dur.shape[1], i, j
    cdef int h
    cdef double C, s, w, ar, ai, x, y, pr, pi, qr, qi, q2
    with nogil:
        for i in range(m):
            x = z[i].real
            y = z[i].imag
            for j in range(n):
                h = <int>idx[j]
                _coeffs(om[h], <int>kd[h], rt[h], dur[i, j], &C, &s)
                w = om[h] * s
                ar = al[h].real * s
                ai = al[h].imag * s
                # plain real arithmetic; C99 complex ops go through slow NaN-safe helpers
                # numerator (C - i w) z + i conj(alpha) s, denominator -i alpha s z + C + i w
                pr = C * x + w * y + ai
                pi = C * y - w * x + ar
                qr = ai * x + ar * y + C
                qi = ai * y - ar * x + w
                q2 = qr * qr + qi * qi
                x = (pr * qr + pi * qi) / q2
                y = (pi * qr - pr * qi) / q2
            z[i] = x + 1j * y
    return z


def mobius_orbit(a, b, c, d, z0, Py_ssize_t n):
    cdef double complex aa = a, bb = b, cc = c, dd = d, z = z0
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(n, dtype=np.complex128)
    cdef double x = z.real, y = z.imag, pr, pi, qr, qi, q2
    cdef Py_ssize_t k
    for k in range(n):
        out[k] = x + 1j * y
        pr = aa.real * x - aa.imag * y + bb.real
        pi = aa.real * y + aa.imag * x + bb.imag
        qr = cc.real * x - cc.imag * y + dd.real
        qi = cc.real * y + cc.imag * x + dd.imag
        q2 = qr * qr + qi * qi
        x = (pr * qr + pi * qi) / q2
        y = (pi * qr - pr * qi) / q2
    return out
