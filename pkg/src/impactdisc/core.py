"""Domain types and partition arithmetic.

Indices follow the 1-based convention used throughout the reports: a cut at
index ``i`` closes a partition after the i-th point, so partition ``j``
covers the half-open index range ``(cuts[j-1], cuts[j]]`` with implied
``cuts[-1] = 0`` and ``cuts[k-1] = n``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DataError, KTooLarge, KZero, LengthMismatch, NonFiniteValue, TooFewPoints, UsageError


class Objective(str, enum.Enum):
    LSQM = "lsqm"  # squared deviations from the partition mean
    LADM = "ladm"  # absolute deviations from the partition mean

    @classmethod
    def parse(cls, value: "Objective | str") -> "Objective":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UsageError(f"unknown objective {value!r}; expected lsqm or ladm") from None


def _frozen(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DataSeries:
    """Points sorted by x, ties by y, then by input position."""

    x: np.ndarray
    y: np.ndarray
    # position of each canonical point in the caller's input
    source_index: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        x = _frozen(self.x)
        y = _frozen(self.y)
        if x.ndim != 1 or x.shape != y.shape:
            raise LengthMismatch("x and y must be 1-d and of equal length")
        if len(x) < 2:
            raise TooFewPoints(f"need at least 2 points, got {len(x)}")
        bad = ~(np.isfinite(x) & np.isfinite(y))
        if bad.any():
            row = int(np.argmax(bad))
            raise NonFiniteValue(row, x[row] if not np.isfinite(x[row]) else y[row])
        if np.any(np.diff(x) < 0):
            raise DataError("points are not sorted by x; build the series with canonicalize()")
        src = np.arange(len(x)) if self.source_index is None else self.source_index
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "source_index", _frozen(src, dtype=np.int64))

    def __len__(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist()))

    def __eq__(self, other):
        if not isinstance(other, DataSeries):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.y, other.y)

    def __hash__(self):
        return hash((self.x.tobytes(), self.y.tobytes()))


def canonicalize(raw_points: Iterable[Sequence[float]]) -> DataSeries:
    """Sort ``(x, y)`` pairs into canonical order.

    Raises :class:`TooFewPoints` for fewer than two rows and
    :class:`NonFiniteValue` naming the first row holding a NaN or infinity.
    """
    pts = [tuple(p) for p in raw_points]
    if len(pts) < 2:
        raise TooFewPoints(f"need at least 2 points, got {len(pts)}")
    xs, ys = [], []
    for row, p in enumerate(pts):
        if len(p) != 2:
            raise LengthMismatch(f"row {row} has {len(p)} fields, expected 2")
        for v in p:
            if not math.isfinite(float(v)):
                raise NonFiniteValue(row, v)
        xs.append(float(p[0]))
        ys.append(float(p[1]))
    x = np.asarray(xs)
    y = np.asarray(ys)
    # lexsort keys are last-major; the trailing stable index breaks full ties
    order = np.lexsort((np.arange(len(x)), y, x))
    return DataSeries(x[order], y[order], order)


def series_from_arrays(x, y) -> DataSeries:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise LengthMismatch(f"x has {x.size} values, y has {y.size}")
    return canonicalize(zip(x.tolist(), y.tolist()))


@dataclass(frozen=True)
class Partitioning:
    n: int
    k: int
    cuts: tuple[int, ...]

    def __post_init__(self):
        cuts = tuple(int(c) for c in self.cuts)
        object.__setattr__(self, "cuts", cuts)
        check_k(self.k, self.n)
        if len(cuts) != self.k - 1:
            raise UsageError(f"k={self.k} needs {self.k - 1} cuts, got {len(cuts)}")
        bounds = (0,) + cuts + (self.n,)
        if any(lo >= hi for lo, hi in zip(bounds, bounds[1:])):
            raise UsageError(f"cuts {list(cuts)} are not strictly increasing within 1..{self.n - 1}")

    @classmethod
    def from_cuts(cls, n: int, cuts: Sequence[int]) -> "Partitioning":
        return cls(n=n, k=len(cuts) + 1, cuts=tuple(cuts))

    @property
    def bounds(self) -> tuple[int, ...]:
        return (0,) + self.cuts + (self.n,)

    def ranges(self) -> list[tuple[int, int]]:
        b = self.bounds
        return list(zip(b[:-1], b[1:]))


def check_k(k: int, n: int) -> None:
    if k < 1:
        raise KZero(f"partition count must be at least 1, got {k}")
    if k > n:
        raise KTooLarge(f"partition count {k} exceeds the number of points {n}")


@dataclass(frozen=True)
class CutPoints:
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def cuts_to_x(series: DataSeries, partitioning: Partitioning) -> CutPoints:
    """x-coordinate of the last point of every partition but the final one."""
    if partitioning.n != series.n:
        raise LengthMismatch(f"partitioning is over {partitioning.n} points, series has {series.n}")
    return CutPoints(tuple(series.x[c - 1] for c in partitioning.cuts))


def tie_split_flags(series: DataSeries, cuts: Sequence[int]) -> list[bool]:
    """True for every cut that separates two points sharing an x value."""
    return [bool(series.x[c - 1] == series.x[c]) for c in cuts]


@dataclass(frozen=True)
class PartitionStat:
    lo: int
    hi: int
    mean: float
    cost: float


@dataclass(frozen=True)
class SolveResult:
    objective: Objective
    partitioning: Partitioning
    cut_points: CutPoints
    total_cost: float
    per_partition: tuple[PartitionStat, ...]
    solver: str  # "dp" or "brute"
    tie_split: tuple[bool, ...] = ()

    @property
    def k(self) -> int:
        return self.partitioning.k

    @property
    def cuts(self) -> tuple[int, ...]:
        return self.partitioning.cuts
