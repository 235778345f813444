"""Kernel backend selection.

The two Monte Carlo kernels have different performance profiles (see
benchmarks/bench_kernels.py):

* series_draws spends its time in the scalar ziggurat normal generator, so
  the compiled loop beats the numpy path by avoiding large temporaries; the
  compiled version is preferred when built.
* null_statistics is dominated by log evaluations and sorting, where
  numpy's SIMD kernels win over a scalar C loop; the numpy version is
  always used.  This also keeps finite-n critical value tables bit-identical
  whether or not the extension is built.

Set LOGIT_GOF_PURE=1 to force the numpy path for everything (used by the
benchmark and the cross-backend tests).  Both implementations consume the
bit generator identically, so switching paths never changes the variates,
only round-off from summation order.
"""

from __future__ import annotations

import os

from . import _pykernels


def _select():
    if os.environ.get("LOGIT_GOF_PURE", "0") not in ("", "0"):
        return _pykernels, False
    try:
        from . import _kernels
    except ImportError:
        return _pykernels, False
    return _kernels, True


_impl, COMPILED = _select()

series_draws = _impl.series_draws
null_statistics = _pykernels.null_statistics
