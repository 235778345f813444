"""Self-verification suite for the spectral identities.

These checks tie the series-sampler coefficients to independent numerics:
eigenfunction orthonormality by quadrature, the closed-form log integral
against adaptive quadrature, the edge-cell moment asymptotics, and the
recomposition of the linear series coefficient from its spectral factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .limitlaw import lin_coeff
from .spectral import (
    eigenfunction,
    eigenfunction_norm,
    eigenvalue,
    jacobi_log_integral,
    jacobi_log_integral_quad,
    tail_log_moment,
)

__all__ = ["CheckResult", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_orthonormality(max_mode: int = 10, tol: float = 1e-8) -> CheckResult:
    """Gram matrix of the first eigenfunctions equals the identity."""
    worst = 0.0
    for k in range(1, max_mode + 1):
        for l in range(k, max_mode + 1):
            val, _ = quad(
                lambda t: eigenfunction(k, t) * eigenfunction(l, t),
                0.0,
                1.0,
                epsabs=1e-12,
                epsrel=1e-12,
                limit=200,
            )
            worst = max(worst, abs(val - (1.0 if k == l else 0.0)))
    return CheckResult(
        name="eigenfunction orthonormality",
        passed=worst < tol,
        detail=f"max |Gram - I| = {worst:.3e} (modes 1..{max_mode}, tol {tol:g})",
    )


def check_log_integral(max_degree: int = 10, tol: float = 1e-9) -> CheckResult:
    """Closed-form Jacobi log integral agrees with quadrature; even degrees vanish."""
    worst = 0.0
    for n in range(max_degree + 1):
        worst = max(worst, abs(jacobi_log_integral(n) - jacobi_log_integral_quad(n)))
    return CheckResult(
        name="jacobi log integral closed form",
        passed=worst < tol,
        detail=f"max |closed - quadrature| = {worst:.3e} (degrees 0..{max_degree}, tol {tol:g})",
    )


def check_tail_moment_scaling(
    sizes=(50, 100, 200, 400), max_k: int = 3, ratio_window=(3.5, 4.5)
) -> CheckResult:
    """Residual against the leading term shrinks like 1/n^2.

    Doubling n should divide the residual by about 4; the window absorbs
    the O(1/n^3) correction at the smallest n.
    """
    lo, hi = ratio_window
    worst = None
    ok = True
    for k in range(max_k + 1):
        residuals = {n: tail_log_moment(n, k)[2] for n in sizes}
        for n in sizes[:-1]:
            if 2 * n not in residuals:
                continue
            ratio = residuals[n] / residuals[2 * n]
            if not lo <= ratio <= hi:
                ok = False
            if worst is None or abs(ratio - 4.0) > abs(worst - 4.0):
                worst = ratio
    return CheckResult(
        name="edge-cell moment residual scaling",
        passed=ok,
        detail=f"residual ratios within [{lo}, {hi}]; farthest from 4: {worst:.4f}",
    )


def check_coefficient_recomposition(max_l: int = 20, tol: float = 1e-12) -> CheckResult:
    """Linear series coefficient rebuilt from eigenvalue, norm and log integral.

    lin_coeff(l) = 6 * sqrt(lambda_{2l}) * norm(2l) * (1/8) * I(2l-1) where I
    is the closed-form log integral; the 6 comes from the functional and the
    1/8 from mapping (0,1) to (-1,1).
    """
    worst = 0.0
    for l in range(1, max_l + 1):
        k = 2 * l
        rebuilt = (
            6.0
            * np.sqrt(eigenvalue(k))
            * eigenfunction_norm(k)
            * 0.125
            * jacobi_log_integral(k - 1)
        )
        worst = max(worst, abs(rebuilt - lin_coeff(l)))
    return CheckResult(
        name="linear coefficient recomposition",
        passed=worst < tol,
        detail=f"max |recomposed - direct| = {worst:.3e} (l = 1..{max_l}, tol {tol:g})",
    )


def run_checks() -> list[CheckResult]:
    return [
        check_orthonormality(),
        check_log_integral(),
        check_tail_moment_scaling(),
        check_coefficient_recomposition(),
    ]
