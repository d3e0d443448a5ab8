"""Exact order-preserving k-partitioning.

The dynamic program runs over suffixes: ``best[j, i]`` is the minimal cost
of splitting points ``(i, n]`` into ``j`` partitions,

    best[0, n] = 0
    best[j, i] = min over i < m <= n of cost(i, m) + best[j-1, m]

Left endpoints are visited from ``n-1`` down to ``0`` so each interval-cost
row is computed once and relaxed into every ``j`` at the same time; a single
pass therefore yields the optimum for every ``k <= k_max``.

Among partitionings whose cost is within the tie tolerance of the optimum
the lexicographically smallest cut vector is returned. The suffix table
makes that a greedy forward walk: each cut is the smallest index that still
admits a completion inside the tolerance.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import (
    CutPoints,
    DataSeries,
    Objective,
    PartitionStat,
    Partitioning,
    SolveResult,
    check_k,
    cuts_to_x,
    tie_split_flags,
)
from .cost import CostTable, build_cost_table
from .errors import EnumerationTooLarge

TIE_RTOL = 1e-9
# absolute slack, relative to the single-partition cost of the series
TIE_ATOL_SCALE = 1e-12
DEFAULT_ENUMERATION_CAP = 10**6


def tie_threshold(optimum: float, scale: float) -> float:
    return optimum + TIE_RTOL * abs(optimum) + TIE_ATOL_SCALE * abs(scale)


@njit(cache=True)
def _relax(row, best, a, k_max):
    n = best.shape[1] - 1
    for j in range(1, k_max + 1):
        acc = np.inf
        for b in range(a + 1, n + 1):
            v = row[b - a - 1] + best[j - 1, b]
            if v < acc:
                acc = v
        best[j, a] = acc


@dataclass(frozen=True)
class DpTable:
    """Suffix optimum table, ``best[j, i]`` for ``0 <= j <= k_max``."""

    best: np.ndarray
    table: CostTable

    @property
    def k_max(self) -> int:
        return self.best.shape[0] - 1

    def optimum(self, k: int) -> float:
        return float(self.best[k, 0])


def solve_table(series: DataSeries, k_max: int, objective: Objective | str,
                table: CostTable | None = None) -> DpTable:
    check_k(k_max, series.n)
    if table is None:
        table = build_cost_table(series, objective)
    n = series.n
    best = np.full((k_max + 1, n + 1), np.inf)
    best[0, n] = 0.0
    for a in range(n - 1, -1, -1):
        _relax(table.row(a), best, a, k_max)
    best.setflags(write=False)
    return DpTable(best=best, table=table)


def _result(series, objective, cuts, costs, means, solver) -> SolveResult:
    part = Partitioning.from_cuts(series.n, cuts)
    stats = tuple(
        PartitionStat(lo=lo, hi=hi, mean=float(mu), cost=float(c))
        for (lo, hi), mu, c in zip(part.ranges(), means, costs)
    )
    return SolveResult(
        objective=Objective.parse(objective),
        partitioning=part,
        cut_points=cuts_to_x(series, part),
        total_cost=math.fsum(costs),
        per_partition=stats,
        solver=solver,
        tie_split=tuple(tie_split_flags(series, cuts)),
    )


def _backtrack(dp: DpTable, k: int) -> tuple[list[int], list[float]]:
    best = dp.best
    n = best.shape[1] - 1
    limit = tie_threshold(best[k, 0], best[1, 0])
    cuts, costs = [], []
    acc = 0.0
    prev = 0
    for remaining in range(k - 1, 0, -1):
        row = dp.table.row(prev)
        # candidate m closes the current partition at (prev, m]
        ms = np.arange(prev + 1, n - remaining + 1)
        totals = acc + row[ms - prev - 1] + best[remaining, ms]
        m = int(ms[np.flatnonzero(totals <= limit)[0]])
        c = float(row[m - prev - 1])
        cuts.append(m)
        costs.append(c)
        acc += c
        prev = m
    costs.append(float(dp.table.row(prev)[n - prev - 1]))
    return cuts, costs


def optimal_partition(series: DataSeries, k: int, objective: Objective | str,
                      table: CostTable | None = None) -> SolveResult:
    """Globally optimal k-partitioning by dynamic programming.

    Runs in O(k n^2) interval-cost evaluations and O(k n) memory on top of
    the cost table.
    """
    objective = Objective.parse(objective)
    check_k(k, series.n)
    dp = solve_table(series, k, objective, table)
    cuts, costs = _backtrack(dp, k)
    bounds = [0] + cuts + [series.n]
    means = [dp.table.mean(lo, hi) for lo, hi in zip(bounds, bounds[1:])]
    return _result(series, objective, cuts, costs, means, "dp")


def cost_curve(series: DataSeries, k_max: int,
               objective: Objective | str) -> list[tuple[int, float]]:
    """Optimal cost for every k in ``1..k_max`` from one DP pass."""
    dp = solve_table(series, k_max, objective)
    return [(k, dp.optimum(k)) for k in range(1, k_max + 1)]


def _direct_cost(y: np.ndarray, objective: Objective) -> float:
    if (y == y[0]).all():
        return 0.0
    mu = math.fsum(y) / len(y)
    dev = y - mu
    if objective is Objective.LSQM:
        return math.fsum(dev * dev)
    return math.fsum(np.abs(dev))


def brute_force_partition(series: DataSeries, k: int, objective: Objective | str,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> SolveResult:
    """Exhaustive search over all C(n-1, k-1) cut vectors.

    Interval costs are evaluated by direct two-pass summation, without the
    cost table, so this serves as an independent check of the DP.
    """
    objective = Objective.parse(objective)
    n = series.n
    check_k(k, n)
    count = math.comb(n - 1, k - 1)
    if count > cap:
        raise EnumerationTooLarge(count, cap)
    y = series.y
    memo: dict[tuple[int, int], float] = {}

    def cost(a, b):
        key = (a, b)
        if key not in memo:
            memo[key] = _direct_cost(y[a:b], objective)
        return memo[key]

    totals = []
    # combinations() yields in lexicographic order
    for cuts in itertools.combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        totals.append((math.fsum(cost(lo, hi) for lo, hi in zip(bounds, bounds[1:])), cuts))
    optimum = min(t for t, _ in totals)
    limit = tie_threshold(optimum, cost(0, n))
    cuts = next(c for t, c in totals if t <= limit)
    bounds = (0,) + cuts + (n,)
    ranges = list(zip(bounds, bounds[1:]))
    costs = [cost(lo, hi) for lo, hi in ranges]
    means = [math.fsum(y[lo:hi]) / (hi - lo) for lo, hi in ranges]
    return _result(series, objective, list(cuts), costs, means, "brute")
