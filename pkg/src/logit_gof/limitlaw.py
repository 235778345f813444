"""Samplers for the limiting laws of the scaled test statistics.

The location limit W and the location-scale limit V are sampled two ways:

* from their Gaussian series representations

      W = sum_{k>=2} 6/(k(k+1)) Z_k^2
      V = W'/nu - (L/nu)^2,   L = sum_{l>=1} 3 sqrt(4l+1) /
                                  (l(l+1)(2l-1)(2l+1)) Z_{2l}

  where the Z_{2l} in L are the same variates as the even-indexed terms of
  the quadratic sum (the expansions share one Gaussian sequence), and

* from a discretized weighted Brownian bridge, used only as a
  cross-validation oracle for the series samplers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .logistic import WEIGHTED_VARIANCE
from .streams import DOMAIN_BRIDGE, DOMAIN_SERIES, check_seed, run_blocks, substream

__all__ = [
    "DEFAULT_TRUNCATION",
    "EmpiricalDistribution",
    "quad_coeff",
    "lin_coeff",
    "sample_limit_w",
    "sample_limit_v",
    "sample_limit_via_bridge",
    "estimate_quantiles",
]

DEFAULT_TRUNCATION = 10_000


def quad_coeff(k: int) -> float:
    """Coefficient 6/(k(k+1)) of Z_k^2 in the quadratic series, k >= 2."""
    k = int(k)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return 6.0 / (k * (k + 1.0))


def lin_coeff(l: int) -> float:
    """Coefficient 3 sqrt(4l+1)/(l(l+1)(2l-1)(2l+1)) of Z_{2l} in the linear series."""
    l = int(l)
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    return (
        3.0
        * math.sqrt(4.0 * l + 1.0)
        / (l * (l + 1.0) * (2.0 * l - 1.0) * (2.0 * l + 1.0))
    )


def estimate_quantiles(draws: np.ndarray, levels) -> np.ndarray:
    """Order-statistic quantiles (ceil(p*N)-th value) of sorted draws.

    The small slack below protects exact-integer p*N against float
    representation of p; Monte Carlo error dominates the estimator choice
    at the replication counts used here.
    """
    draws = np.asarray(draws)
    if draws.size == 0:
        raise ValueError("empty distribution")
    levels = np.atleast_1d(np.asarray(levels, dtype=float))
    if np.any(levels <= 0.0) or np.any(levels >= 1.0):
        raise ValueError("levels must lie in (0, 1)")
    n = draws.size
    ranks = np.ceil(levels * n - 1e-9).astype(int)
    ranks = np.clip(ranks, 1, n)
    return draws[ranks - 1]


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Sorted Monte Carlo draws of a statistic, with provenance."""

    draws: np.ndarray
    kind: str
    size: int | None  # sample size, or None for a limit-law distribution
    truncation: int | None
    seed: int

    @property
    def reps(self) -> int:
        return int(self.draws.size)

    def quantiles(self, levels) -> np.ndarray:
        return estimate_quantiles(self.draws, levels)

    def p_value(self, statistic: float) -> float:
        """Fraction of null draws strictly above the observed statistic."""
        idx = np.searchsorted(self.draws, statistic, side="right")
        return float(self.reps - idx) / self.reps


def _sample_series(kind, truncation, seed, count, workers):
    truncation = int(truncation)
    if truncation < 2:
        raise ValueError(f"truncation must be >= 2, got {truncation}")
    seed = check_seed(seed)
    draws = run_blocks(
        count,
        lambda blk, cnt: backend.series_draws(
            substream(seed, DOMAIN_SERIES, blk), kind, truncation, cnt
        ),
        workers=workers,
    )
    draws.sort()
    draws.setflags(write=False)
    return EmpiricalDistribution(
        draws=draws, kind=kind, size=None, truncation=truncation, seed=seed
    )


def sample_limit_w(
    truncation: int, seed: int, count: int, workers: int = 1
) -> EmpiricalDistribution:
    """Draws of the location limit law from its truncated series."""
    return _sample_series("w", truncation, seed, count, workers)


def sample_limit_v(
    truncation: int, seed: int, count: int, workers: int = 1
) -> EmpiricalDistribution:
    """Draws of the location-scale limit law from its truncated series."""
    return _sample_series("v", truncation, seed, count, workers)


def sample_limit_via_bridge(
    kind: str, grid_size: int, seed: int, count: int, workers: int = 1
) -> EmpiricalDistribution:
    """Limit-law draws from a discretized Brownian bridge (oracle only).

    The bridge is evaluated at the m cell midpoints (i - 1/2)/m via
    cumulative Gaussian increments, and the integral functionals are
    midpoint sums over those interior points; the integrand 6 B(t)^2 /
    (t(1-t)) is singular at the endpoints in discretized form, so they are
    excluded.
    """
    if kind not in ("w", "v"):
        raise ValueError(f"kind must be 'w' or 'v', got {kind!r}")
    m = int(grid_size)
    if m < 100:
        raise ValueError(f"grid_size must be >= 100, got {m}")
    seed = check_seed(seed)

    t = (np.arange(m) + 0.5) / m
    log_quant = np.log(t) - np.log1p(-t)
    weight_sing = 6.0 / (t * (1.0 - t))
    incr_scale = np.full(m + 1, 1.0 / math.sqrt(m))
    incr_scale[0] = incr_scale[-1] = 1.0 / math.sqrt(2.0 * m)

    def block(blk, cnt):
        rng = np.random.Generator(substream(seed, DOMAIN_BRIDGE, blk))
        out = np.empty(cnt)
        done = 0
        while done < cnt:
            size = min(256, cnt - done)
            incr = rng.standard_normal((size, m + 1)) * incr_scale
            walk = np.cumsum(incr[:, :-1], axis=1)
            total = walk[:, -1] + incr[:, -1]
            bridge = walk - np.outer(total, t)
            int_quad = (bridge * bridge) @ weight_sing / m
            int_lin = 6.0 * bridge.sum(axis=1) / m
            vals = int_quad - int_lin**2
            if kind == "v":
                int_log = 6.0 * (bridge @ log_quant) / m
                vals = vals / WEIGHTED_VARIANCE - (int_log / WEIGHTED_VARIANCE) ** 2
            out[done : done + size] = vals
            done += size
        return out

    draws = run_blocks(count, block, workers=workers)
    draws.sort()
    draws.setflags(write=False)
    return EmpiricalDistribution(
        draws=draws, kind=kind, size=None, truncation=None, seed=seed
    )
