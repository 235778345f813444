"""Numpy implementations of the Monte Carlo kernels.

These mirror the compiled kernels in _kernels.pyx: both consume the
underlying bit generator in exactly the same order (one block of variates
per draw, row-major), so a given substream produces the same random inputs
on either path.  Results agree to floating round-off; summation order is
the only difference.
"""

from __future__ import annotations

import numpy as np

from .logistic import WEIGHTED_VARIANCE
from .statistics import batch_raw

__all__ = ["series_draws", "null_statistics", "series_value_from_normals"]

# keep per-call scratch arrays bounded: count x truncation doubles
_CHUNK = 256


def _series_coefficients(truncation: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(2, truncation + 1, dtype=float)
    cq = 6.0 / (k * (k + 1.0))
    ell = np.arange(1, truncation // 2 + 1, dtype=float)
    cl = (
        3.0
        * np.sqrt(4.0 * ell + 1.0)
        / (ell * (ell + 1.0) * (2.0 * ell - 1.0) * (2.0 * ell + 1.0))
    )
    return cq, cl


def series_value_from_normals(z: np.ndarray, kind: str) -> np.ndarray:
    """Limit-law draw(s) from explicit normal variates z[..., j] = Z_{j+1}.

    The quadratic sum runs over Z_2..Z_K; for the location-scale limit the
    linear sum reuses the even-indexed variates Z_2, Z_4, ... of the same
    block (index parity is what couples the two sums).
    """
    z = np.atleast_2d(np.asarray(z, dtype=float))
    truncation = z.shape[-1]
    if truncation < 2:
        raise ValueError("need at least 2 variates per draw")
    cq, cl = _series_coefficients(truncation)
    quad_part = (z[:, 1:] ** 2) @ cq
    if kind == "w":
        return quad_part
    lin_part = z[:, 1::2] @ cl
    return quad_part / WEIGHTED_VARIANCE - (lin_part / WEIGHTED_VARIANCE) ** 2


def series_draws(bit_generator, kind: str, truncation: int, count: int) -> np.ndarray:
    """`count` draws of the truncated limit-law series from one substream.

    Each draw consumes `truncation` standard normals Z_1..Z_K; Z_1 is
    generated and discarded (the quadratic series starts at k = 2) so that
    index parity for the linear sum is unambiguous.
    """
    if kind not in ("w", "v"):
        raise ValueError(f"kind must be 'w' or 'v', got {kind!r}")
    truncation = int(truncation)
    if truncation < 2:
        raise ValueError(f"truncation must be >= 2, got {truncation}")
    count = int(count)
    rng = np.random.Generator(bit_generator)
    out = np.empty(count)
    done = 0
    while done < count:
        m = min(_CHUNK, count - done)
        z = rng.standard_normal((m, truncation))
        out[done : done + m] = series_value_from_normals(z, kind)
        done += m
    return out


def null_statistics(
    bit_generator, kind: str, n: int, count: int, a: np.ndarray, b: np.ndarray
) -> np.ndarray:
    """Raw W or V statistics of `count` standard-logistic samples of size n.

    Each replication consumes n uniforms, mapped through the logistic
    quantile and sorted.
    """
    if kind not in ("w", "v"):
        raise ValueError(f"kind must be 'w' or 'v', got {kind!r}")
    rng = np.random.Generator(bit_generator)
    count = int(count)
    out = np.empty(count)
    done = 0
    while done < count:
        m = min(4096, count - done)
        u = rng.random((m, n))
        with np.errstate(divide="ignore"):
            x = np.log(u) - np.log1p(-u)
        x.sort(axis=1)
        out[done : done + m] = batch_raw(kind, x, a, b)
        done += m
    return out
