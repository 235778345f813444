"""Eigensystem of the normalized Brownian bridge covariance on (0, 1).

The kernel (min(s,t) - st) / sqrt(s(1-s)t(1-t)) has eigenvalues 1/(k(k+1))
with eigenfunctions proportional to Jacobi (1,1) polynomials times
sqrt(t(1-t)).  This module provides those pieces plus the two integral
identities that pin down the series coefficients used by the limit-law
samplers: a closed form (with quadrature oracle) for

    integral over (-1, 1) of P_n^(1,1)(x) (1-x^2) ln((1+x)/(1-x)) dx

and the small-cell asymptotics of

    n * integral over (0, 1/(n+1)) of ln^k(n t/(1-t)) t(1-t) dt.

Everything here is verification-facing; the statistic computation itself
never calls into this module.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

__all__ = [
    "jacobi_p11",
    "eigenvalue",
    "eigenfunction_norm",
    "eigenfunction",
    "covariance_kernel",
    "jacobi_log_integral",
    "jacobi_log_integral_quad",
    "tail_log_moment",
]


def jacobi_p11(n: int, x):
    """Jacobi polynomial with parameters (1, 1) by forward recurrence.

    Accepts scalar or array x in [-1, 1].  The three-term recurrence for
    alpha = beta = 1 reduces to

        P_m = ((m+1)(2m+1) x P_{m-1} - m(m+1) P_{m-2}) / (m(m+2))

    which is stable on [-1, 1] for the degrees used here.
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr < -1.0) or np.any(x_arr > 1.0):
        raise ValueError("x must lie in [-1, 1]")
    p_prev = np.ones_like(x_arr)
    if n == 0:
        return p_prev if np.ndim(x) else float(p_prev)
    p = 2.0 * x_arr
    for m in range(2, n + 1):
        p, p_prev = (
            ((m + 1.0) * (2.0 * m + 1.0) * x_arr * p - m * (m + 1.0) * p_prev)
            / (m * (m + 2.0)),
            p,
        )
    return p if np.ndim(x) else float(p)


def eigenvalue(k: int) -> float:
    """k-th eigenvalue 1/(k(k+1)) of the covariance operator."""
    k = int(k)
    if k < 1:
        raise ValueError(f"mode index must be >= 1, got {k}")
    return 1.0 / (k * (k + 1.0))


def eigenfunction_norm(k: int) -> float:
    """Normalization constant sqrt((2k+1)(k+1)/k) of the k-th eigenfunction."""
    k = int(k)
    if k < 1:
        raise ValueError(f"mode index must be >= 1, got {k}")
    return math.sqrt((2.0 * k + 1.0) * (k + 1.0) / k)


def eigenfunction(k: int, t):
    """L2-normalized eigenfunction: norm * P_{k-1}^(1,1)(2t-1) * sqrt(t(1-t))."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= 0.0) or np.any(t_arr >= 1.0):
        raise ValueError("t must lie in (0, 1)")
    val = eigenfunction_norm(k) * jacobi_p11(k - 1, 2.0 * t_arr - 1.0) * np.sqrt(
        t_arr * (1.0 - t_arr)
    )
    return val if np.ndim(t) else float(val)


def covariance_kernel(s: float, t: float) -> float:
    """Covariance (min(s,t) - st) / sqrt(s(1-s)t(1-t)) of the normalized bridge."""
    s, t = float(s), float(t)
    if not (0.0 < s < 1.0 and 0.0 < t < 1.0):
        raise ValueError("arguments must lie in (0, 1)")
    # grouping the product per variable keeps K(s,t) == K(t,s) exactly
    return (min(s, t) - s * t) / math.sqrt((s * (1.0 - s)) * (t * (1.0 - t)))


def jacobi_log_integral(n: int) -> float:
    """Closed form of int_{-1}^{1} P_n^(1,1)(x)(1-x^2)ln((1+x)/(1-x)) dx.

    Zero for even n; for n = 2k+1 the value is 8/((2k+1)(2k+3)(k+2)).
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n % 2 == 0:
        return 0.0
    k = (n - 1) // 2
    return 8.0 / ((2.0 * k + 1.0) * (2.0 * k + 3.0) * (k + 2.0))


def jacobi_log_integral_quad(n: int) -> float:
    """Adaptive-quadrature oracle for the same integral.

    The factor (1-x^2) kills the log singularity, so the integrand extends
    continuously by 0 at x = +-1.
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")

    def integrand(x: float) -> float:
        if abs(x) >= 1.0:
            return 0.0
        return jacobi_p11(n, x) * (1.0 - x * x) * (math.log1p(x) - math.log1p(-x))

    val, err = quad(integrand, -1.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=300)
    if err > 1e-10:
        raise RuntimeError(f"quadrature did not converge (error estimate {err:.2e})")
    return val


def tail_log_moment(n: int, k: int) -> tuple[float, float, float]:
    """Numeric value, leading term, and residual of the edge-cell log moment.

    Computes n * int_0^{1/(n+1)} ln^k(n t/(1-t)) t (1-t) dt by quadrature and
    compares it with the first-order term (-1)^k k! / 2^(k+1) / n; the
    residual is O(1/n^2).  For k >= 3 the integral is evaluated in the
    substituted variable y = n t/(1-t), which tames the ln^k spike near 0.
    """
    n, k = int(n), int(k)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0 <= k <= 6:
        raise ValueError(f"k must be in 0..6, got {k}")

    if k >= 3:

        def integrand_y(y: float) -> float:
            if y <= 0.0:
                return 0.0
            return y * math.log(y) ** k / (1.0 + y / n) ** 4

        val, err = quad(integrand_y, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=300)
        val /= n
    else:

        def integrand_t(t: float) -> float:
            if t <= 0.0:
                return 0.0
            return math.log(n * t / (1.0 - t)) ** k * t * (1.0 - t)

        val, err = quad(
            integrand_t, 0.0, 1.0 / (n + 1.0), epsabs=1e-16, epsrel=1e-13, limit=300
        )
        val *= n
    if err > 1e-10:
        raise RuntimeError(f"quadrature did not converge (error estimate {err:.2e})")
    leading = (-1.0) ** k * math.factorial(k) / 2.0 ** (k + 1) / n
    return val, leading, val - leading
