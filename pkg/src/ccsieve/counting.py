"""Count series, growth-exponent fits, and the Scholz-direction falsifier.

Two counting functions are confronted: the sieve count (qualifying d
discovered by the witness box) and the ground-truth count of squarefree
d with 3 | h(d) from the form-class oracle.  The truth series must
dominate the sieve series pointwise.  The falsifier searches for
squarefree d where 3 divides the class number of Q(sqrt(-3d)) but not
that of Q(sqrt(d)), which kills the reflection-style implication from
the imaginary side to the real side.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .classnum import (
    PRACTICAL_DISCRIMINANT_CAP,
    class_number_imaginary,
    class_number_real_narrow,
    three_divides_real_class_number,
)
from .honda import ConfigurationError, EnumConfig, enumerate_discriminants
from .intmath import fundamental_discriminant, squarefree_decompose

__all__ = [
    "SCHOLZ_BOUND_CAP",
    "TRUTH_X_CAP",
    "CountSeries",
    "ScholzCounterexample",
    "SlopeReport",
    "fit_slope",
    "honda_count_series",
    "scholz_counterexample_search",
    "truth_count_series",
    "write_counterexamples_csv",
    "write_series_csv",
]

# d maps to discriminant 4d at worst, and the falsifier touches Q(sqrt(-3d)).
TRUTH_X_CAP = PRACTICAL_DISCRIMINANT_CAP // 4
SCHOLZ_BOUND_CAP = PRACTICAL_DISCRIMINANT_CAP // 12


@dataclass(frozen=True)
class CountSeries:
    """Ordered (X, count) checkpoints for an N-type counting function."""

    label: str
    checkpoints: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SlopeReport:
    """Least-squares fit of log(count) against log(X)."""

    slope: float
    intercept: float
    residual_max: float
    window: tuple[int, int]


@dataclass(frozen=True)
class ScholzCounterexample:
    """Squarefree d with 3 | h(Q(sqrt(-3d))) but 3 not dividing h(Q(sqrt(d)));
    h_real is the narrow class number, h_imag the exact imaginary one."""

    d: int
    h_real: int
    h_imag: int


def _check_checkpoints(checkpoints: Sequence[int]) -> None:
    if not checkpoints:
        raise ValueError("at least one checkpoint is required")
    if any(x < 2 for x in checkpoints):
        raise ValueError("checkpoints must be >= 2")
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise ValueError("checkpoints must be strictly increasing")


def _prefix_counts(values: Sequence[int], checkpoints: Sequence[int]) -> list[tuple[int, int]]:
    """Counts of sorted `values` up to each checkpoint, in one pass."""
    out = []
    i = 0
    for x in checkpoints:
        while i < len(values) and values[i] <= x:
            i += 1
        out.append((x, i))
    return out


def honda_count_series(
    checkpoints: Sequence[int], config: EnumConfig = EnumConfig()
) -> CountSeries:
    """Sieve count series: qualifying d per checkpoint from one enumeration
    at the largest checkpoint."""
    _check_checkpoints(checkpoints)
    if checkpoints[-1] > config.x_cap:
        raise ConfigurationError(
            f"checkpoint {checkpoints[-1]} exceeds the enumeration cap {config.x_cap}"
        )
    items = enumerate_discriminants(checkpoints[-1], config)
    ds = [wd.d for wd in items]
    return CountSeries(label="N_honda", checkpoints=tuple(_prefix_counts(ds, checkpoints)))


def _truth_chunk(lo: int, hi: int) -> list[int]:
    """Squarefree d in [lo, hi] whose real class number is divisible by 3."""
    hits = []
    for d in range(lo, hi + 1):
        if squarefree_decompose(d).square_part != 1:
            continue
        if three_divides_real_class_number(d):
            hits.append(d)
    return hits


def truth_count_series(
    checkpoints: Sequence[int], x_max: int = 10_000, workers: int = 1
) -> CountSeries:
    """Ground-truth count series: for every squarefree d <= x_max the
    form-class oracle decides 3 | h(d); counts per checkpoint."""
    _check_checkpoints(checkpoints)
    if checkpoints[-1] > x_max:
        raise ConfigurationError(f"checkpoint {checkpoints[-1]} exceeds x_max={x_max}")
    if x_max > TRUTH_X_CAP:
        raise ConfigurationError(f"x_max={x_max} exceeds the oracle range {TRUTH_X_CAP}")
    if workers < 1:
        raise ConfigurationError("workers must be >= 1")
    hits = sorted(_parallel_chunks(_truth_chunk, 2, x_max, workers))
    return CountSeries(label="N_plus_truth", checkpoints=tuple(_prefix_counts(hits, checkpoints)))


def _parallel_chunks(fn, lo: int, hi: int, workers: int) -> list:
    """Order-independent merge of fn over a partition of [lo, hi]."""
    if hi < lo:
        return []
    if workers == 1:
        return fn(lo, hi)
    span = hi - lo + 1
    parts = min(workers * 4, span)
    step = -(-span // parts)
    bounds = []
    a = lo
    while a <= hi:
        bounds.append((a, min(a + step - 1, hi)))
        a = bounds[-1][1] + 1
    merged: list = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(fn, *zip(*bounds)):
            merged.extend(chunk)
    return merged


def fit_slope(series: CountSeries, window: tuple[int, int]) -> SlopeReport:
    """Ordinary least squares of log(count) on log(X) inside the window.

    Only checkpoints with count >= 1 participate; fewer than 3 such points
    is a domain error.
    """
    x_lo, x_hi = window
    pts = [
        (math.log(x), math.log(c))
        for x, c in series.checkpoints
        if x_lo <= x <= x_hi and c >= 1
    ]
    if len(pts) < 3:
        raise ValueError(
            f"need at least 3 checkpoints with count >= 1 in window {window}, got {len(pts)}"
        )
    k = len(pts)
    mean_x = sum(p[0] for p in pts) / k
    mean_y = sum(p[1] for p in pts) / k
    sxx = sum((p[0] - mean_x) ** 2 for p in pts)
    sxy = sum((p[0] - mean_x) * (p[1] - mean_y) for p in pts)
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    residual_max = max(abs(y - (intercept + slope * x)) for x, y in pts)
    return SlopeReport(slope=slope, intercept=intercept, residual_max=residual_max, window=window)


def _imaginary_kernel(d: int) -> int:
    """Squarefree kernel of -3d for squarefree d: -d/3 when 3 | d, else -3d."""
    return -(d // 3) if d % 3 == 0 else -3 * d


def _scholz_chunk(lo: int, hi: int) -> list[tuple[int, int, int]]:
    hits = []
    for d in range(lo, hi + 1):
        if squarefree_decompose(d).square_part != 1:
            continue
        h_imag = class_number_imaginary(fundamental_discriminant(_imaginary_kernel(d))).count
        if h_imag % 3:
            continue
        h_real = class_number_real_narrow(fundamental_discriminant(d)).count
        if h_real % 3:
            hits.append((d, h_real, h_imag))
    return hits


def scholz_counterexample_search(bound: int, workers: int = 1) -> list[ScholzCounterexample]:
    """All squarefree d <= bound with 3 | h(Q(sqrt(-3d))) and 3 not
    dividing h(Q(sqrt(d))), ascending.

    Each hit is a counterexample to the implication "3 | h(-3k) forces
    3 | h(k)"; a nonempty result shows that direction of reflection fails.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if bound > SCHOLZ_BOUND_CAP:
        raise ConfigurationError(f"bound={bound} exceeds the oracle range {SCHOLZ_BOUND_CAP}")
    if workers < 1:
        raise ConfigurationError("workers must be >= 1")
    hits = sorted(_parallel_chunks(_scholz_chunk, 2, bound, workers))
    return [ScholzCounterexample(d=d, h_real=hr, h_imag=hi) for d, hr, hi in hits]


def write_series_csv(series: CountSeries, path) -> None:
    """Series export: `# label` comment line, then `X,count` rows."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# {series.label}\n")
        fh.write("X,count\n")
        for x, c in series.checkpoints:
            fh.write(f"{x},{c}\n")


def write_counterexamples_csv(items: Iterable[ScholzCounterexample], path) -> None:
    """Counterexample export: `d,h_real_narrow,h_imag` rows, ascending d."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("d,h_real_narrow,h_imag\n")
        for ce in items:
            fh.write(f"{ce.d},{ce.h_real},{ce.h_imag}\n")
