"""Interval cost tables.

For a half-open index interval ``(a, b]`` (1-based points ``a+1..b``) the
cost is the sum of squared (LSQM) or absolute (LADM) deviations of ``y`` from
the interval mean. Note that LADM measures deviation around the mean, not
the median.

Two access paths are offered:

* ``query(a, b)`` for a single interval. LSQM answers in O(1) from
  compensated prefix sums; LADM answers from a dense matrix built eagerly
  when it fits the memory budget, otherwise from a cached row.
* ``row(a)`` for every interval sharing the left endpoint ``a``. This is
  what the solver consumes. LSQM rows use the same prefix sums, switching
  to a running (Welford) update where the identity cancels badly, and
  LADM rows use a Fenwick tree over the global y-ranks, so a full LADM
  table costs O(n^2 log n).

``y`` is shifted by its global mean before anything is accumulated; both
costs are translation invariant and the shift keeps the prefix-sum identity
``S2 - S1^2/m`` away from catastrophic cancellation for offset data.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from numba import njit

from .core import DataSeries, Objective
from .errors import BadInterval

DEFAULT_MAX_DENSE_BYTES = 256 * 2**20

# LSQM prefix-sum answers below this fraction of the interval's sum of
# squares are recomputed without the identity.
_CANCELLATION_GUARD = 1e-6


def _check_interval(n: int, a: int, b: int) -> None:
    if not (0 <= a < b <= n):
        raise BadInterval(f"interval ({a}, {b}] is not valid for n={n}")


def interval_mean(series: DataSeries, a: int, b: int) -> float:
    _check_interval(series.n, a, b)
    return math.fsum(series.y[a:b]) / (b - a)


def interval_cost_sq(series: DataSeries, a: int, b: int) -> float:
    _check_interval(series.n, a, b)
    mu = interval_mean(series, a, b)
    return math.fsum((series.y[a:b] - mu) ** 2)


def interval_cost_abs(series: DataSeries, a: int, b: int) -> float:
    _check_interval(series.n, a, b)
    mu = interval_mean(series, a, b)
    return math.fsum(np.abs(series.y[a:b] - mu))


def compensated_cumsum(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Neumaier running sum, returned as (high, low) parts with a leading 0."""
    n = len(values)
    hi = np.zeros(n + 1)
    lo = np.zeros(n + 1)
    s = 0.0
    c = 0.0
    for i, v in enumerate(values.tolist()):
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
        hi[i + 1] = s
        lo[i + 1] = c
    return hi, lo


def run_ends(y: np.ndarray) -> np.ndarray:
    """``out[a]`` is the largest ``b`` such that y is constant on ``(a, b]``."""
    n = len(y)
    out = np.empty(n, dtype=np.int64)
    out[n - 1] = n
    for a in range(n - 2, -1, -1):
        out[a] = out[a + 1] if y[a] == y[a + 1] else a + 1
    return out


@njit(cache=True)
def _lsqm_row(yc, a, run_end, h1, l1, h2, l2, guard, out):
    # prefix-sum identity where it is well conditioned, Welford otherwise
    n = yc.shape[0]
    mean = 0.0
    m2 = 0.0
    for b in range(a, n):
        m = b - a + 1
        v = yc[b]
        d = v - mean
        mean += d / m
        m2 += d * (v - mean)
        if b + 1 <= run_end[a]:
            out[b - a] = 0.0
            continue
        s1 = (h1[b + 1] - h1[a]) + (l1[b + 1] - l1[a])
        s2 = (h2[b + 1] - h2[a]) + (l2[b + 1] - l2[a])
        cost = s2 - s1 * s1 / m
        out[b - a] = cost if cost > guard * s2 else m2


@njit(cache=True)
def _ladm_row(yc, a, run_end, rank, sorted_vals, out):
    n = yc.shape[0]
    cnt = np.zeros(n + 1, dtype=np.int64)
    sm = np.zeros(n + 1)
    total = 0.0
    for b in range(a, n):
        m = b - a + 1
        v = yc[b]
        total += v
        i = rank[b] + 1
        while i <= n:
            cnt[i] += 1
            sm[i] += v
            i += i & (-i)
        if b + 1 <= run_end[a]:
            out[b - a] = 0.0
            continue
        mean = total / m
        # inserted points with rank < r are exactly those with value <= mean
        r = np.searchsorted(sorted_vals, mean, side="right")
        c = 0
        s = 0.0
        i = r
        while i > 0:
            c += cnt[i]
            s += sm[i]
            i -= i & (-i)
        cost = mean * (2 * c - m) - 2.0 * s + total
        out[b - a] = cost if cost > 0.0 else 0.0


class CostTable:
    """Interval costs of one series under one objective. Immutable once built."""

    def __init__(self, series: DataSeries, objective: Objective | str,
                 max_dense_bytes: int = DEFAULT_MAX_DENSE_BYTES):
        self.series = series
        self.objective = Objective.parse(objective)
        self.n = series.n
        y = series.y
        self._center = math.fsum(y) / len(y)
        yc = np.ascontiguousarray(y - self._center)
        yc.setflags(write=False)
        self._yc = yc
        self._run_end = run_ends(y)
        self._s1 = compensated_cumsum(yc)
        self._s2 = compensated_cumsum(yc * yc)
        self._dense = None
        if self.objective is Objective.LADM:
            order = np.argsort(yc, kind="stable")
            self._rank = np.empty(self.n, dtype=np.int64)
            self._rank[order] = np.arange(self.n)
            self._sorted = np.ascontiguousarray(yc[order])
            if (self.n + 1) ** 2 * 8 <= max_dense_bytes:
                self._dense = self._build_dense()
            self._row_cache = lru_cache(maxsize=8)(self._compute_row)

    def _build_dense(self) -> np.ndarray:
        dense = np.zeros((self.n + 1, self.n + 1))
        for a in range(self.n):
            dense[a, a + 1:] = self._compute_row(a)
        dense.setflags(write=False)
        return dense

    def _interval_sum(self, prefix, a, b) -> float:
        hi, lo = prefix
        return (hi[b] - hi[a]) + (lo[b] - lo[a])

    def mean(self, a: int, b: int) -> float:
        _check_interval(self.n, a, b)
        return self._interval_sum(self._s1, a, b) / (b - a) + self._center

    def query(self, a: int, b: int) -> float:
        _check_interval(self.n, a, b)
        if b <= self._run_end[a]:
            return 0.0
        if self.objective is Objective.LSQM:
            m = b - a
            s1 = self._interval_sum(self._s1, a, b)
            s2 = self._interval_sum(self._s2, a, b)
            cost = s2 - s1 * s1 / m
            if cost <= _CANCELLATION_GUARD * s2:
                seg = self._yc[a:b]
                cost = math.fsum((seg - math.fsum(seg) / m) ** 2)
            return max(cost, 0.0)
        if self._dense is not None:
            return float(self._dense[a, b])
        return float(self._row_cache(a)[b - a - 1])

    def row(self, a: int) -> np.ndarray:
        """Costs of ``(a, b]`` for ``b = a+1..n`` (length ``n - a``)."""
        if not 0 <= a < self.n:
            raise BadInterval(f"left endpoint {a} is not valid for n={self.n}")
        if self._dense is not None:
            return self._dense[a, a + 1:]
        if self.objective is Objective.LADM:
            return self._row_cache(a)
        return self._compute_row(a)

    def _compute_row(self, a: int) -> np.ndarray:
        out = np.empty(self.n - a)
        if self.objective is Objective.LSQM:
            _lsqm_row(self._yc, a, self._run_end, *self._s1, *self._s2,
                      _CANCELLATION_GUARD, out)
        else:
            _ladm_row(self._yc, a, self._run_end, self._rank, self._sorted, out)
        out.setflags(write=False)
        return out


def build_cost_table(series: DataSeries, objective: Objective | str,
                     max_dense_bytes: int = DEFAULT_MAX_DENSE_BYTES) -> CostTable:
    return CostTable(series, objective, max_dense_bytes=max_dense_bytes)
