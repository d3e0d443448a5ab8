"""Exact impact-driven discretization of numerical attributes."""

__version__ = "0.1.0"

from .agree import AgreementReport, agreement_score, classify_match
from .baseline import BinSpec, equal_frequency, equal_width
from .core import (
    CutPoints,
    DataSeries,
    Objective,
    PartitionStat,
    Partitioning,
    SolveResult,
    canonicalize,
    cuts_to_x,
    series_from_arrays,
)
from .cost import CostTable, build_cost_table, interval_cost_abs, interval_cost_sq, interval_mean
from .io import SynthSpec, generate, load_csv, read_csv, write_result
from .solver import brute_force_partition, cost_curve, optimal_partition, solve_table

__all__ = [
    "AgreementReport", "BinSpec", "CostTable", "CutPoints", "DataSeries", "Objective",
    "PartitionStat", "Partitioning", "SolveResult", "SynthSpec", "agreement_score",
    "brute_force_partition", "build_cost_table", "canonicalize", "classify_match",
    "cost_curve", "cuts_to_x", "equal_frequency", "equal_width", "generate",
    "interval_cost_abs", "interval_cost_sq", "interval_mean", "load_csv",
    "optimal_partition", "read_csv", "series_from_arrays", "solve_table", "write_result",
]
