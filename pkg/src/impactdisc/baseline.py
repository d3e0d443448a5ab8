"""Unsupervised x-only discretizers used as comparison baselines.

Neither method looks at ``y``; that is the point of comparing them with the
impact-driven partitionings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DataSeries, check_k, tie_split_flags
from .errors import KZero


@dataclass(frozen=True)
class BinSpec:
    method: str  # "equal_width" or "equal_frequency"
    k: int
    edges: tuple[float, ...]
    # canonical cut indices; only set for equal_frequency
    cut_indices: tuple[int, ...] = ()
    tie_split: tuple[bool, ...] = ()


def equal_width(series: DataSeries, k: int) -> BinSpec:
    if k < 1:
        raise KZero(f"bin count must be at least 1, got {k}")
    lo = float(series.x[0])
    hi = float(series.x[-1])
    width = (hi - lo) / k
    edges = tuple(lo + (j + 1) * width for j in range(k - 1))
    return BinSpec("equal_width", k, edges)


def equal_frequency_cuts(n: int, k: int) -> list[int]:
    """Bin j holds canonical indices ``(floor(j*n/k), floor((j+1)*n/k)]``."""
    return [(j * n) // k for j in range(1, k)]


def equal_frequency(series: DataSeries, k: int) -> BinSpec:
    check_k(k, series.n)
    cuts = equal_frequency_cuts(series.n, k)
    edges = tuple(float(series.x[c - 1]) for c in cuts)
    return BinSpec(
        "equal_frequency", k, edges,
        cut_indices=tuple(cuts),
        tie_split=tuple(tie_split_flags(series, cuts)),
    )
