#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Both paths consume identical random streams, so the timing comparison is
apples to apples; the script also reports the worst relative disagreement
between the two (expected: round-off only).

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from logit_gof import _pykernels, backend
from logit_gof.statistics import cell_coefficients
from logit_gof.streams import DOMAIN_NULL, DOMAIN_SERIES, substream


def time_call(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def rel_gap(a, b):
    scale = np.maximum(np.abs(b), 1e-300)
    return float(np.max(np.abs(a - b) / scale))


def bench_series(kind, truncation, count, repeats):
    rows = []
    outputs = {}
    for label, mod in (("compiled", backend if backend.COMPILED else None),
                       ("numpy", _pykernels)):
        if mod is None:
            continue
        secs, out = time_call(
            lambda m=mod: m.series_draws(
                substream(1, DOMAIN_SERIES, 0), kind, truncation, count
            ),
            repeats,
        )
        rows.append((label, secs))
        outputs[label] = out
    return rows, outputs


def bench_null(kind, n, count, repeats):
    table = cell_coefficients(n)
    rows = []
    outputs = {}
    for label, mod in (("compiled", backend if backend.COMPILED else None),
                       ("numpy", _pykernels)):
        if mod is None:
            continue
        secs, out = time_call(
            lambda m=mod: m.null_statistics(
                substream(2, DOMAIN_NULL, 0), kind, n, count, table.a, table.b
            ),
            repeats,
        )
        rows.append((label, secs))
        outputs[label] = out
    return rows, outputs


def report(name, rows, outputs):
    print(f"\n{name}")
    base = dict(rows).get("numpy")
    for label, secs in rows:
        speedup = f"  ({base / secs:.2f}x vs numpy)" if label == "compiled" else ""
        print(f"  {label:9s} {secs * 1e3:9.1f} ms{speedup}")
    if len(outputs) == 2:
        print(f"  agreement: max relative gap {rel_gap(outputs['compiled'], outputs['numpy']):.2e}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if not backend.COMPILED:
        print("compiled extension not available; timing the numpy path only")

    scale = 0.1 if args.quick else 1.0
    repeats = 2 if args.quick else 3

    count = max(1, int(20_000 * scale))
    for kind in ("w", "v"):
        rows, outs = bench_series(kind, 2_000, count, repeats)
        report(f"series draws, kind={kind}, K=2000, count={count}", rows, outs)

    for kind, n in (("w", 20), ("v", 20), ("v", 500)):
        cnt = max(1, int((100_000 if n == 20 else 10_000) * scale))
        rows, outs = bench_null(kind, n, cnt, repeats)
        report(f"null statistics, kind={kind}, n={n}, count={cnt}", rows, outs)


if __name__ == "__main__":
    main()
