"""Command-line interface.

Subcommands: test (run a test on a data file), critvals (critical-value
tables, cached), power (empirical power against an alternative), limitdist
(empirical CDF of a limit law, for plotting), verify (spectral
self-checks).  Exit codes: test returns 0 when not rejected at the 0.95
level, 1 when rejected, 2 on usage or data errors; verify returns 0 only if
every check passes.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import __version__
from .engine import (
    ASYMPTOTIC,
    DEFAULT_LEVELS,
    critical_values,
    empirical_power,
    simulate_null_distribution,
)
from .limitlaw import DEFAULT_TRUNCATION, sample_limit_v, sample_limit_w
from .statistics import DegenerateSampleError, Sample, statistic_v, statistic_w
from .tables import load_or_compute, write_critical_values
from .verify import run_checks

__all__ = ["main"]


def read_sample_file(path) -> Sample:
    """Parse one value per line (or per CSV field); '#' lines are comments."""
    values = []
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        for token in line.replace(",", " ").split():
            try:
                values.append(float(token))
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: non-numeric value {token!r}"
                ) from None
    if len(values) < 2:
        raise ValueError(f"{path}: need at least 2 observations, found {len(values)}")
    return Sample.from_values(values)


def _parse_levels(text: str):
    return tuple(float(p) for p in text.split(","))


def _add_common(parser):
    parser.add_argument("--seed", type=int, default=0, help="master 64-bit seed")
    parser.add_argument(
        "--reps", type=int, default=20_000, help="Monte Carlo replications"
    )
    parser.add_argument(
        "--workers", type=int, default=1, help="worker threads (never changes output)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logit-gof",
        description="Weighted quantile correlation tests for the logistic family.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="test a sample file for logistic fit")
    p.add_argument("--in", dest="input", required=True, metavar="PATH")
    p.add_argument("--kind", choices=("v", "w"), default="v")
    p.add_argument(
        "--table",
        choices=("finite", "asymptotic"),
        default="finite",
        help="critical values from the sample-size null simulation or the limit law",
    )
    p.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--levels", type=_parse_levels, default=DEFAULT_LEVELS)
    _add_common(p)

    p = sub.add_parser("critvals", help="critical-value table (cached)")
    p.add_argument("--kind", choices=("v", "w"), default="v")
    p.add_argument(
        "--n", type=int, default=None, help="sample size; omit for asymptotic"
    )
    p.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--levels", type=_parse_levels, default=DEFAULT_LEVELS)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--cache-dir", type=Path, default=None)
    _add_common(p)

    p = sub.add_parser("power", help="empirical power against an alternative")
    p.add_argument("--alt", required=True, help="alternative distribution name")
    p.add_argument("--kind", choices=("v", "w"), default="v")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--alpha", type=float, default=0.10)
    p.add_argument(
        "--table",
        choices=("finite", "asymptotic"),
        default="finite",
        help="reject against finite-n critical values (default) or the limit law's",
    )
    p.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--cache-dir", type=Path, default=None)
    _add_common(p)

    p = sub.add_parser("limitdist", help="empirical CDF of a limit law as CSV")
    p.add_argument("--kind", choices=("v", "w"), default="v")
    p.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--out", type=Path, required=True)
    _add_common(p)

    sub.add_parser("verify", help="run the spectral self-checks")

    return parser


def cmd_test(args) -> int:
    sample = read_sample_file(args.input)
    result = statistic_v(sample) if args.kind == "v" else statistic_w(sample)
    if args.table == "finite":
        dist = simulate_null_distribution(
            args.kind, sample.n, args.reps, args.seed, workers=args.workers
        )
        source = f"null simulation at n={sample.n}, reps={args.reps}"
    else:
        sampler = sample_limit_v if args.kind == "v" else sample_limit_w
        dist = sampler(args.truncation, args.seed, args.reps, workers=args.workers)
        source = f"limit-law series, K={args.truncation}, reps={args.reps}"
    critvals = dist.quantiles(args.levels)
    label = "nV_n" if args.kind == "v" else "nW_n"
    print(f"kind={args.kind} n={sample.n} {label}={result.statistic!r}")
    print(f"critical values from {source} (seed={args.seed})")
    rejected_95 = False
    for level, crit in zip(args.levels, critvals):
        rejected = result.statistic > crit
        if abs(level - 0.95) < 1e-12:
            rejected_95 = rejected
        verdict = "rejected" if rejected else "not rejected"
        print(f"level {level:.2f}: critical value {crit:.4f} -> {verdict}")
    print(f"p-value (empirical): {dist.p_value(result.statistic):.4f}")
    return 1 if rejected_95 else 0


def cmd_critvals(args) -> int:
    size = args.n if args.n is not None else ASYMPTOTIC
    table, from_cache = load_or_compute(
        args.kind,
        size,
        args.levels,
        reps=args.reps,
        seed=args.seed,
        truncation=args.truncation,
        cache_dir=args.cache_dir,
        workers=args.workers,
    )
    if args.out is not None:
        write_critical_values(table, args.out)
        origin = "cache" if from_cache else "fresh run"
        print(f"wrote {args.out} ({origin})")
    else:
        trunc = "" if table.truncation is None else str(table.truncation)
        print("kind,size,level,critval,reps,truncation,seed")
        for level, crit in zip(table.levels, table.critvals):
            size_txt = table.size if table.size == ASYMPTOTIC else str(table.size)
            print(
                f"{table.kind},{size_txt},{level!r},{crit!r},"
                f"{table.reps},{trunc},{table.seed}"
            )
    return 0


def cmd_power(args) -> int:
    levels = tuple(sorted(set(DEFAULT_LEVELS) | {round(1.0 - args.alpha, 12)}))
    size = args.n if args.table == "finite" else ASYMPTOTIC
    table, _ = load_or_compute(
        args.kind,
        size,
        levels,
        reps=args.reps,
        seed=args.seed,
        truncation=args.truncation,
        cache_dir=args.cache_dir,
        workers=args.workers,
    )
    result = empirical_power(
        args.kind,
        args.alt,
        args.n,
        args.alpha,
        table,
        reps=args.reps,
        seed=args.seed,
        workers=args.workers,
    )
    lines = [
        "kind,alternative,n,alpha,power,reps,seed",
        f"{result.kind},{result.alternative},{result.n},{result.alpha!r},"
        f"{result.power!r},{result.reps},{result.seed}",
    ]
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    else:
        for line in lines:
            print(line)
    return 0


def cmd_limitdist(args) -> int:
    sampler = sample_limit_v if args.kind == "v" else sample_limit_w
    dist = sampler(args.truncation, args.seed, args.reps, workers=args.workers)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["value", "cdf"])
        reps = dist.reps
        for i, value in enumerate(dist.draws, start=1):
            writer.writerow([repr(float(value)), repr(i / reps)])
    print(f"wrote {args.out} ({dist.reps} draws)")
    return 0


def cmd_verify(_args) -> int:
    results = run_checks()
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name}: {res.detail}")
    return 0 if all(r.passed for r in results) else 1


_COMMANDS = {
    "test": cmd_test,
    "critvals": cmd_critvals,
    "power": cmd_power,
    "limitdist": cmd_limitdist,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, DegenerateSampleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
