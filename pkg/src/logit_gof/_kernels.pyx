# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Monte Carlo kernels: limit-law series draws and null statistics.

Consumes the numpy bit generator through the C API in the same order as the
numpy fallback (_pykernels), so both paths see identical variates for a
given substream.
"""

from cpython.pycapsule cimport PyCapsule_GetPointer, PyCapsule_IsValid
from libc.math cimport log, log1p, sqrt
from libc.stdlib cimport free, malloc, qsort

import numpy as np

cimport numpy as cnp
from numpy.random cimport bitgen_t
from numpy.random.c_distributions cimport (
    random_standard_normal,
    random_standard_uniform,
)

cnp.import_array()

cdef double WEIGHTED_VARIANCE = 3.141592653589793 ** 2 / 3.0 - 2.0


cdef bitgen_t* _bitgen(object bit_generator) except NULL:
    capsule = bit_generator.capsule
    if not PyCapsule_IsValid(capsule, "BitGenerator"):
        raise ValueError("invalid BitGenerator capsule")
    return <bitgen_t*> PyCapsule_GetPointer(capsule, "BitGenerator")


cdef int _cmp_double(const void* pa, const void* pb) noexcept nogil:
    cdef double x = (<const double*> pa)[0]
    cdef double y = (<const double*> pb)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def series_draws(bit_generator, str kind, int truncation, Py_ssize_t count):
    """`count` draws of the truncated limit-law series from one substream."""
    if kind not in ("w", "v"):
        raise ValueError(f"kind must be 'w' or 'v', got {kind!r}")
    if truncation < 2:
        raise ValueError(f"truncation must be >= 2, got {truncation}")
    cdef bint location_scale = kind == "v"
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(count)
    cdef double[::1] o = out
    cdef bitgen_t* rng = _bitgen(bit_generator)
    cdef Py_ssize_t i
    cdef long k, ell
    cdef double z, quad_part, lin_part, coeff
    cdef double inv_nu = 1.0 / WEIGHTED_VARIANCE
    with bit_generator.lock, nogil:
        for i in range(count):
            z = random_standard_normal(rng)  # Z_1, discarded: series starts at k=2
            quad_part = 0.0
            lin_part = 0.0
            for k in range(2, truncation + 1):
                z = random_standard_normal(rng)
                quad_part += 6.0 / (k * (k + 1.0)) * z * z
                if location_scale and k % 2 == 0:
                    ell = k // 2
                    coeff = (
                        3.0 * sqrt(4.0 * ell + 1.0)
                        / (ell * (ell + 1.0) * (2.0 * ell - 1.0) * (2.0 * ell + 1.0))
                    )
                    lin_part += coeff * z
            if location_scale:
                o[i] = quad_part * inv_nu - (lin_part * inv_nu) ** 2
            else:
                o[i] = quad_part
    return out


def null_statistics(
    bit_generator,
    str kind,
    int n,
    Py_ssize_t count,
    const double[::1] a,
    const double[::1] b,
):
    """Raw W or V statistics of `count` standard-logistic samples of size n."""
    if kind not in ("w", "v"):
        raise ValueError(f"kind must be 'w' or 'v', got {kind!r}")
    if a.shape[0] != n or b.shape[0] != n:
        raise ValueError("coefficient arrays must have length n")
    cdef bint location_scale = kind == "v"
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(count)
    cdef double[::1] o = out
    cdef bitgen_t* rng = _bitgen(bit_generator)
    cdef double* x = <double*> malloc(n * sizeof(double))
    if x == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long j
    cdef double u, m, s2, sa, d
    try:
        with bit_generator.lock, nogil:
            for i in range(count):
                for j in range(n):
                    u = random_standard_uniform(rng)
                    x[j] = log(u) - log1p(-u)
                qsort(x, n, sizeof(double), _cmp_double)
                m = 0.0
                for j in range(n):
                    m += b[j] * x[j]
                s2 = 0.0
                sa = 0.0
                for j in range(n):
                    d = x[j] - m
                    s2 += b[j] * d * d
                    sa += a[j] * d
                if location_scale:
                    o[i] = 1.0 - sa * sa / (WEIGHTED_VARIANCE * s2)
                else:
                    o[i] = WEIGHTED_VARIANCE + s2 - 2.0 * sa
    finally:
        free(x)
    return out
