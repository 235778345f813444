"""CSV persistence and the content-addressed critical-value cache.

The on-disk format is one row per confidence level:

    kind,size,level,critval,reps,truncation,seed

with size either an integer or "asymptotic" and truncation empty for
finite-n tables.  Floats are written in repr form, so a read table is
structurally identical to the one written.  Cache files are keyed by a hash
of (kind, size, reps, truncation, seed, code version); levels are not part
of the key, so a cached table is reused only when it covers every requested
level.
"""

from __future__ import annotations

import csv
import hashlib
import os
import tempfile
from pathlib import Path

from . import __version__
from .engine import ASYMPTOTIC, CriticalValueTable, critical_values

__all__ = [
    "default_cache_dir",
    "parse_size",
    "format_size",
    "write_critical_values",
    "read_critical_values",
    "cache_path",
    "load_or_compute",
]

_HEADER = ["kind", "size", "level", "critval", "reps", "truncation", "seed"]


def default_cache_dir() -> Path:
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "logit-gof"


def format_size(size) -> str:
    return ASYMPTOTIC if size in (ASYMPTOTIC, None) else str(int(size))


def parse_size(text: str):
    text = text.strip().lower()
    if text in (ASYMPTOTIC, "inf", "none", ""):
        return ASYMPTOTIC
    return int(text)


def write_critical_values(table: CriticalValueTable, path) -> None:
    """Write a table as CSV, atomically (write to temp file, then rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(_HEADER)
            trunc = "" if table.truncation is None else str(table.truncation)
            for level, crit in zip(table.levels, table.critvals):
                writer.writerow(
                    [
                        table.kind,
                        format_size(table.size),
                        repr(float(level)),
                        repr(float(crit)),
                        str(table.reps),
                        trunc,
                        str(table.seed),
                    ]
                )
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_critical_values(path) -> CriticalValueTable:
    path = Path(path)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != _HEADER:
            raise ValueError(f"{path}: unexpected header {header!r}")
        rows = [row for row in reader if row]
    if not rows:
        raise ValueError(f"{path}: no data rows")
    first = rows[0]
    kind = first[0]
    size = parse_size(first[1])
    reps = int(first[4])
    truncation = int(first[5]) if first[5] else None
    seed = int(first[6])
    levels = []
    critvals = []
    for row in rows:
        if row[0] != kind or parse_size(row[1]) != size:
            raise ValueError(f"{path}: inconsistent kind/size across rows")
        levels.append(float(row[2]))
        critvals.append(float(row[3]))
    return CriticalValueTable(
        kind=kind,
        size=size,
        levels=tuple(levels),
        critvals=tuple(critvals),
        reps=reps,
        truncation=truncation,
        seed=seed,
    )


def cache_path(cache_dir, kind: str, size, reps: int, truncation, seed: int) -> Path:
    """Content-addressed cache location for one parameter set.

    The code version participates in the key, so tables from an older build
    are never silently reused.
    """
    trunc = "" if truncation is None else str(int(truncation))
    key = "|".join(
        [kind, format_size(size), str(int(reps)), trunc, str(int(seed)), __version__]
    )
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    return Path(cache_dir) / f"critvals-{digest}.csv"


def load_or_compute(
    kind: str,
    size,
    levels,
    reps: int,
    seed: int,
    truncation: int,
    cache_dir=None,
    workers: int = 1,
) -> tuple[CriticalValueTable, bool]:
    """Cached critical-value table; computes and stores it on a miss.

    Returns (table, from_cache).  A cached file is used only when it holds
    every requested level; otherwise the table is recomputed for the
    requested levels and the file is rewritten.
    """
    cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    trunc_for_key = truncation if size in (ASYMPTOTIC, None) else None
    path = cache_path(cache_dir, kind, size, reps, trunc_for_key, seed)
    wanted = tuple(sorted(float(p) for p in levels))
    if path.exists():
        cached = read_critical_values(path)
        have = {round(p, 12): c for p, c in zip(cached.levels, cached.critvals)}
        if all(round(p, 12) in have for p in wanted):
            return (
                CriticalValueTable(
                    kind=cached.kind,
                    size=cached.size,
                    levels=wanted,
                    critvals=tuple(have[round(p, 12)] for p in wanted),
                    reps=cached.reps,
                    truncation=cached.truncation,
                    seed=cached.seed,
                ),
                True,
            )
    table = critical_values(
        kind, size, wanted, reps=reps, seed=seed, truncation=truncation, workers=workers
    )
    write_critical_values(table, path)
    return table, False
