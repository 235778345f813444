"""Monte Carlo orchestration: null distributions, critical values, power.

Plain Monte Carlo throughout, no variance reduction.  Output depends only
on (seed, parameters): see streams for the substream derivation that makes
results independent of the worker count.  Critical-value tables and power
runs draw from separate stream domains, so a power run never reuses the
draws that produced its critical value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .alternatives import draw
from .limitlaw import (
    DEFAULT_TRUNCATION,
    EmpiricalDistribution,
    sample_limit_v,
    sample_limit_w,
)
from .statistics import batch_raw, cell_coefficients
from .streams import DOMAIN_ALT, DOMAIN_NULL, check_seed, run_blocks, substream

__all__ = [
    "ASYMPTOTIC",
    "CriticalValueTable",
    "PowerResult",
    "simulate_null_distribution",
    "critical_values",
    "empirical_power",
]

ASYMPTOTIC = "asymptotic"

DEFAULT_LEVELS = (0.85, 0.90, 0.95, 0.99)


def _check_kind(kind: str) -> str:
    if kind not in ("w", "v"):
        raise ValueError(f"kind must be 'w' or 'v', got {kind!r}")
    return kind


def _check_levels(levels) -> tuple[float, ...]:
    arr = sorted(float(p) for p in levels)
    if not arr:
        raise ValueError("need at least one level")
    if arr[0] <= 0.0 or arr[-1] >= 1.0:
        raise ValueError("levels must lie in (0, 1)")
    out = []
    for p in arr:
        if not out or p > out[-1]:
            out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class CriticalValueTable:
    """Critical values of n*W or n*V at several confidence levels."""

    kind: str
    size: int | str  # sample size, or ASYMPTOTIC
    levels: tuple[float, ...]
    critvals: tuple[float, ...]
    reps: int
    truncation: int | None  # set for asymptotic tables only
    seed: int

    def critical_value(self, level: float) -> float:
        for p, c in zip(self.levels, self.critvals):
            if abs(p - level) < 1e-12:
                return c
        raise KeyError(f"table has no critical value at level {level}")


@dataclass(frozen=True)
class PowerResult:
    """Empirical rejection rate against one alternative."""

    kind: str
    alternative: str
    n: int
    alpha: float
    critical_value: float
    power: float
    reps: int
    seed: int


def simulate_null_distribution(
    kind: str, n: int, reps: int, seed: int, workers: int = 1
) -> EmpiricalDistribution:
    """Distribution of the scaled statistic under the logistic null.

    Draws `reps` samples of size n from the standard logistic law and
    evaluates n * raw statistic for each.
    """
    _check_kind(kind)
    n = int(n)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    seed = check_seed(seed)
    table = cell_coefficients(n)
    raw = run_blocks(
        reps,
        lambda blk, cnt: backend.null_statistics(
            substream(seed, DOMAIN_NULL, blk), kind, n, cnt, table.a, table.b
        ),
        workers=workers,
    )
    draws = n * raw
    if not np.all(np.isfinite(draws)):
        raise AssertionError("non-finite statistic under the continuous null")
    draws.sort()
    draws.setflags(write=False)
    return EmpiricalDistribution(
        draws=draws, kind=kind, size=n, truncation=None, seed=seed
    )


def critical_values(
    kind: str,
    size,
    levels=DEFAULT_LEVELS,
    reps: int = 20_000,
    seed: int = 0,
    truncation: int = DEFAULT_TRUNCATION,
    workers: int = 1,
) -> CriticalValueTable:
    """Critical-value table for a finite sample size or the limiting law.

    `size` is a sample size n >= 2, or ASYMPTOTIC (equivalently None) for
    the limit law sampled from its truncated series.
    """
    _check_kind(kind)
    levels = _check_levels(levels)
    if size in (ASYMPTOTIC, None):
        sampler = sample_limit_w if kind == "w" else sample_limit_v
        dist = sampler(truncation, seed, reps, workers=workers)
        size_out: int | str = ASYMPTOTIC
        trunc_out: int | None = int(truncation)
    else:
        dist = simulate_null_distribution(kind, int(size), reps, seed, workers=workers)
        size_out = int(size)
        trunc_out = None
    critvals = tuple(float(c) for c in dist.quantiles(levels))
    return CriticalValueTable(
        kind=kind,
        size=size_out,
        levels=levels,
        critvals=critvals,
        reps=int(reps),
        truncation=trunc_out,
        seed=check_seed(seed),
    )


def empirical_power(
    kind: str,
    alternative: str,
    n: int,
    alpha: float,
    table: CriticalValueTable,
    reps: int = 20_000,
    seed: int = 0,
    workers: int = 1,
) -> PowerResult:
    """Rejection rate of the level-alpha test against a named alternative.

    The test rejects on strict inequality (statistic > critical value); the
    null law is continuous so the boundary carries no probability.  The
    table must match `kind` and be either for this n or asymptotic.
    """
    _check_kind(kind)
    n = int(n)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if table.kind != kind:
        raise ValueError(f"table is for kind {table.kind!r}, requested {kind!r}")
    if table.size not in (n, ASYMPTOTIC):
        raise ValueError(f"table is for size {table.size!r}, requested n={n}")
    crit = table.critical_value(1.0 - alpha)
    seed = check_seed(seed)
    coeffs = cell_coefficients(n)

    def block(blk, cnt):
        rng = np.random.Generator(substream(seed, DOMAIN_ALT, blk))
        x = draw(alternative, rng, (cnt, n))
        x = np.sort(x, axis=1)
        return batch_raw(kind, x, coeffs.a, coeffs.b)

    raw = run_blocks(reps, block, workers=workers)
    power = float(np.mean(n * raw > crit))
    return PowerResult(
        kind=kind,
        alternative=alternative,
        n=n,
        alpha=alpha,
        critical_value=float(crit),
        power=power,
        reps=int(reps),
        seed=seed,
    )
