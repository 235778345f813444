"""Standard logistic distribution, the 6t(1-t) weight, and its weighted moments."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "WeightedMoments",
    "cdf",
    "pdf",
    "quantile",
    "weight",
    "weighted_moments",
    "WEIGHTED_VARIANCE",
]

# weighted second moment of the logistic quantile under w(t) = 6t(1-t);
# the weighted first moment vanishes, so this is also the generated variance
WEIGHTED_VARIANCE = math.pi**2 / 3.0 - 2.0


def _check_finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return x


def _check_open_unit(u: float, name: str) -> float:
    u = float(u)
    if not 0.0 < u < 1.0:
        raise ValueError(f"{name} must lie in (0, 1), got {u!r}")
    return u


def cdf(x: float) -> float:
    """Standard logistic distribution function 1 / (1 + exp(-x))."""
    x = _check_finite(x, "x")
    # evaluate with exp(-|x|) only so large |x| cannot overflow
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def pdf(x: float) -> float:
    """Standard logistic density exp(-x) / (1 + exp(-x))^2."""
    x = _check_finite(x, "x")
    e = math.exp(-abs(x))
    return e / (1.0 + e) ** 2


def quantile(u: float) -> float:
    """Logistic quantile ln(u / (1 - u)) for u in (0, 1)."""
    u = _check_open_unit(u, "u")
    return math.log(u) - math.log1p(-u)


def weight(t: float) -> float:
    """Quantile-correlation weight 6t(1-t) on (0, 1); integrates to one."""
    t = _check_open_unit(t, "t")
    return 6.0 * t * (1.0 - t)


@dataclass(frozen=True)
class WeightedMoments:
    """Weighted moments of a quantile function: mu1, mu2 and nu = mu2 - mu1^2."""

    mu1: float
    mu2: float
    nu: float


def weighted_moments() -> WeightedMoments:
    """Exact weighted moments of the logistic quantile under the 6t(1-t) weight.

    The first moment is zero by symmetry and the second is pi^2/3 - 2;
    both are returned as closed-form constants, never by quadrature.
    """
    return WeightedMoments(mu1=0.0, mu2=WEIGHTED_VARIANCE, nu=WEIGHTED_VARIANCE)


def quantile_array(u: np.ndarray) -> np.ndarray:
    """Vectorized logistic quantile for arrays with entries in (0, 1)."""
    u = np.asarray(u, dtype=float)
    return np.log(u) - np.log1p(-u)
