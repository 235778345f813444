"""Random variates for the null law and the power-study alternatives.

All distributions are sampled in their standard forms and fed to the tests
without standardization.  Laws with a closed-form quantile use inverse
transform sampling; the rest use the usual constructions from normal or
exponential building blocks.  Every sampler draws from the passed Generator
only, so a fixed substream fixes the output.
"""

from __future__ import annotations

import numpy as np

__all__ = ["ALTERNATIVES", "draw", "null_sample"]

# CLI-facing names
ALTERNATIVES = (
    "logistic",
    "normal",
    "uniform",
    "cauchy",
    "laplace",
    "exp1",
    "triangle1",
    "triangle2",
    "beta22",
    "weibull2",
    "gamma21",
    "lognormal",
    "student5",
    "chisq1",
    "negexp",
)


def _logistic(rng, size):
    u = rng.random(size)
    return np.log(u) - np.log1p(-u)


def _normal(rng, size):
    return rng.standard_normal(size)


def _uniform(rng, size):
    return rng.random(size)


def _cauchy(rng, size):
    # extreme variates are kept as-is; the statistics are finite for any
    # finite sample
    return np.tan(np.pi * (rng.random(size) - 0.5))


def _laplace(rng, size):
    # density exp(-|t|)/2; quantile ln(2u) below the median, -ln(2(1-u)) above
    u = rng.random(size)
    return np.where(u < 0.5, np.log(2.0 * u), -np.log1p(-2.0 * (u - 0.5)))


def _exp1(rng, size):
    return -np.log1p(-rng.random(size))


def _negexp(rng, size):
    # mirror of Exp(1): the law of -E
    return np.log1p(-rng.random(size))


def _triangle1(rng, size):
    # density 1-|t| on (-1, 1)
    u = rng.random(size)
    return np.where(u < 0.5, np.sqrt(2.0 * u) - 1.0, 1.0 - np.sqrt(2.0 * (1.0 - u)))


def _triangle2(rng, size):
    # density 2-2t on (0, 1); CDF 1-(1-t)^2
    return 1.0 - np.sqrt(1.0 - rng.random(size))


def _beta22(rng, size):
    # median of three uniforms
    u = rng.random(tuple(np.atleast_1d(size)) + (3,))
    return np.median(u, axis=-1)


def _weibull2(rng, size):
    # W = sqrt(E), E ~ Exp(1)
    return np.sqrt(-np.log1p(-rng.random(size)))


def _gamma21(rng, size):
    # sum of two independent Exp(1)
    return -np.log1p(-rng.random(size)) - np.log1p(-rng.random(size))


def _lognormal(rng, size):
    return np.exp(rng.standard_normal(size))


def _student5(rng, size):
    # Z / sqrt(chi2_5 / 5) from six normals per variate
    z = rng.standard_normal(tuple(np.atleast_1d(size)) + (6,))
    return z[..., 0] / np.sqrt((z[..., 1:] ** 2).mean(axis=-1))


def _chisq1(rng, size):
    return rng.standard_normal(size) ** 2


_SAMPLERS = {
    "logistic": _logistic,
    "normal": _normal,
    "uniform": _uniform,
    "cauchy": _cauchy,
    "laplace": _laplace,
    "exp1": _exp1,
    "triangle1": _triangle1,
    "triangle2": _triangle2,
    "beta22": _beta22,
    "weibull2": _weibull2,
    "gamma21": _gamma21,
    "lognormal": _lognormal,
    "student5": _student5,
    "chisq1": _chisq1,
    "negexp": _negexp,
}


def draw(name: str, rng: np.random.Generator, size) -> np.ndarray:
    """i.i.d. variates of the named law, shaped `size`."""
    try:
        sampler = _SAMPLERS[name]
    except KeyError:
        known = ", ".join(ALTERNATIVES)
        raise ValueError(f"unknown distribution {name!r}; known: {known}") from None
    if int(np.prod(np.atleast_1d(size))) < 1:
        raise ValueError("size must contain at least one variate")
    return sampler(rng, size)


def null_sample(n: int, rng: np.random.Generator) -> np.ndarray:
    """One standard-logistic sample of size n (the null hypothesis law)."""
    n = int(n)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return _logistic(rng, n)
