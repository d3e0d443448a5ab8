"""CSV ingestion, synthetic series and result serialization."""

from __future__ import annotations

import csv
import io as _io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import DataSeries, SolveResult, canonicalize
from .errors import BadSpec, ColumnNotFound, DataFileNotFound, TooFewPoints, UsageError, WriteFailed

FAMILIES = ("step", "linear", "mixed", "constant_noise")


# --- loading -----------------------------------------------------------------

@dataclass(frozen=True)
class LoadReport:
    path: str
    header: tuple[str, ...] | None
    rows_read: int
    rows_used: int
    rows_skipped: int


def parse_number(text: str) -> float | None:
    """Parse a numeric field; ``None`` for blanks and junk.

    Currency signs and thousands separators (commas left inside quoted
    fields) are tolerated since payroll exports carry them.
    """
    s = text.strip().replace("$", "").replace(",", "").strip()
    if not s:
        return None
    try:
        v = float(s)
    except ValueError:
        return None
    return v if math.isfinite(v) else None


def _resolve_column(selector, header, width) -> int:
    if isinstance(selector, int):
        idx = selector
    else:
        sel = str(selector)
        if header is not None and sel in header:
            return header.index(sel)
        if header is not None:
            lowered = [h.strip().lower() for h in header]
            if sel.strip().lower() in lowered:
                return lowered.index(sel.strip().lower())
        if not sel.lstrip("-").isdigit():
            raise ColumnNotFound(f"column {sel!r} not found in header {list(header or [])}")
        idx = int(sel)
    if not -width <= idx < width:
        raise ColumnNotFound(f"column index {idx} out of range for {width} columns")
    return idx % width


def read_csv(path, x_col, y_col, max_rows: int | None = None) -> tuple[DataSeries, LoadReport]:
    """Load two columns as a canonical series, with a row-count report.

    Columns are selected by header name or by 0-based index. The first row
    is treated as a header when any of its non-empty fields is not numeric.
    ``max_rows`` keeps only the first data rows of the file.
    """
    p = Path(path)
    if not p.is_file():
        raise DataFileNotFound(f"no such file: {p}")
    with p.open(newline="", encoding="utf-8-sig") as fh:
        rows = [r for r in csv.reader(fh) if r]
    if not rows:
        raise TooFewPoints(f"{p} is empty")
    header = None
    if any(f.strip() and parse_number(f) is None for f in rows[0]):
        header = [f.strip() for f in rows[0]]
        rows = rows[1:]
    if max_rows is not None:
        rows = rows[:max_rows]
    width = len(header) if header is not None else max((len(r) for r in rows), default=0)
    xi = _resolve_column(x_col, header, width)
    yi = _resolve_column(y_col, header, width)
    pts = []
    for r in rows:
        if max(xi, yi) >= len(r):
            continue
        x = parse_number(r[xi])
        y = parse_number(r[yi])
        if x is None or y is None:
            continue
        pts.append((x, y))
    report = LoadReport(
        path=str(p),
        header=tuple(header) if header is not None else None,
        rows_read=len(rows),
        rows_used=len(pts),
        rows_skipped=len(rows) - len(pts),
    )
    if len(pts) < 2:
        raise TooFewPoints(f"{p}: only {len(pts)} usable rows ({report.rows_skipped} skipped)")
    return canonicalize(pts), report


def load_csv(path, x_col, y_col, max_rows: int | None = None) -> DataSeries:
    return read_csv(path, x_col, y_col, max_rows)[0]


def write_series_csv(series: DataSeries, dest, header=("x", "y")) -> None:
    def emit(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for x, y in series.points:
            w.writerow([repr(x), repr(y)])

    _write(dest, emit)


# --- synthetic data ------------------------------------------------------------

@dataclass(frozen=True)
class SynthSpec:
    """Recipe for a synthetic series on ``x = 1..n``.

    ``step`` places ``levels`` in contiguous blocks (equal-sized unless
    ``block_sizes`` is given); ``linear`` is ``slope * x + intercept``;
    ``constant_noise`` is ``levels[0]`` (default 0) everywhere; ``mixed``
    concatenates ``segments``, each ``("step", length, (level,))`` or
    ``("linear", length, (slope, intercept))`` evaluated on the global x.
    Gaussian noise with standard deviation ``noise_sd`` is added to every y.
    """

    family: str
    n: int = 0
    levels: tuple[float, ...] = ()
    block_sizes: tuple[int, ...] = ()
    slope: float = 1.0
    intercept: float = 0.0
    segments: tuple[tuple[str, int, tuple[float, ...]], ...] = ()
    noise_sd: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise BadSpec("family", f"{self.family!r} is not one of {', '.join(FAMILIES)}")
        if not (self.noise_sd >= 0 and math.isfinite(self.noise_sd)):
            raise BadSpec("noise_sd", "must be a finite non-negative number")
        if self.family == "mixed":
            if not self.segments:
                raise BadSpec("segments", "mixed family needs at least one segment")
            for kind, length, params in self.segments:
                if kind not in ("step", "linear"):
                    raise BadSpec("segments", f"unknown segment kind {kind!r}")
                if length < 1:
                    raise BadSpec("segments", "segment lengths must be positive")
                if len(params) != (1 if kind == "step" else 2):
                    raise BadSpec("segments", f"{kind} segment has wrong parameter count")
            if self.n and self.n != sum(s[1] for s in self.segments):
                raise BadSpec("n", "does not equal the sum of segment lengths")
            if sum(s[1] for s in self.segments) < 2:
                raise BadSpec("n", "must be at least 2")
            return
        if self.n < 2:
            raise BadSpec("n", f"must be at least 2, got {self.n}")
        if self.family == "step":
            if len(set(self.levels)) < 2:
                raise BadSpec("levels", "step family needs at least 2 distinct levels")
            if len(self.levels) > self.n:
                raise BadSpec("levels", "more levels than points")
            if self.block_sizes:
                if len(self.block_sizes) != len(self.levels):
                    raise BadSpec("block_sizes", "needs one size per level")
                if sum(self.block_sizes) != self.n or min(self.block_sizes) < 1:
                    raise BadSpec("block_sizes", f"must be positive and sum to n={self.n}")
        if self.family == "constant_noise" and len(self.levels) > 1:
            raise BadSpec("levels", "constant_noise takes at most one level")


def _step_values(n, levels, block_sizes) -> np.ndarray:
    if not block_sizes:
        L = len(levels)
        bounds = [(j * n) // L for j in range(L + 1)]
        block_sizes = [hi - lo for lo, hi in zip(bounds, bounds[1:])]
    return np.repeat(np.asarray(levels, dtype=float), block_sizes)


def generate(spec: SynthSpec) -> DataSeries:
    spec.validate()
    if spec.family == "mixed":
        n = sum(s[1] for s in spec.segments)
    else:
        n = spec.n
    x = np.arange(1, n + 1, dtype=float)
    if spec.family == "step":
        y = _step_values(n, spec.levels, spec.block_sizes)
    elif spec.family == "linear":
        y = spec.slope * x + spec.intercept
    elif spec.family == "constant_noise":
        y = np.full(n, spec.levels[0] if spec.levels else 0.0)
    else:
        parts = []
        start = 0
        for kind, length, params in spec.segments:
            xs = x[start:start + length]
            if kind == "step":
                parts.append(np.full(length, float(params[0])))
            else:
                parts.append(params[0] * xs + params[1])
            start += length
        y = np.concatenate(parts)
    if spec.noise_sd > 0:
        rng = np.random.default_rng(spec.seed)
        y = y + rng.normal(0.0, spec.noise_sd, size=n)
    return DataSeries(x, y)


# --- results -------------------------------------------------------------------

def sig12(v: float) -> float:
    return float(f"{v:.12g}")


def result_to_dict(result: SolveResult) -> dict:
    return {
        "objective": result.objective.value,
        "k": result.k,
        "cut_indices": list(result.cuts),
        "cut_points": [sig12(v) for v in result.cut_points.values],
        "total_cost": sig12(result.total_cost),
        "partitions": [
            {"lo": p.lo, "hi": p.hi, "mean": sig12(p.mean), "cost": sig12(p.cost)}
            for p in result.per_partition
        ],
        "solver": result.solver,
        "tie_split_flags": list(result.tie_split),
    }


CSV_COLUMNS = ("kind", "index", "lo", "hi", "mean", "cost", "cut_point", "tie_split",
               "objective", "solver")


def _write(dest, emit) -> None:
    try:
        if dest is None or dest == "-":
            emit(sys.stdout)
        elif hasattr(dest, "write"):
            emit(dest)
        else:
            with open(dest, "w", newline="", encoding="utf-8") as fh:
                emit(fh)
    except OSError as exc:
        raise WriteFailed(f"cannot write {dest}: {exc}") from exc


def write_result(result: SolveResult, fmt: str = "json", dest=None) -> None:
    """Serialize a result as JSON or CSV to a path, a text stream or stdout.

    The CSV form has one ``partition`` row per partition (``cut_point`` and
    ``tie_split`` describe the cut closing it, blank for the last one) and a
    final ``summary`` row whose ``index`` is k, ``lo``/``hi`` span the series
    and ``cost`` is the total.
    """
    d = result_to_dict(result)
    if fmt == "json":
        _write(dest, lambda fh: fh.write(json.dumps(d, indent=2) + "\n"))
        return
    if fmt != "csv":
        raise UsageError(f"unknown format {fmt!r}")

    def emit(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for j, p in enumerate(d["partitions"]):
            last = j == len(d["partitions"]) - 1
            w.writerow([
                "partition", j + 1, p["lo"], p["hi"], repr(p["mean"]), repr(p["cost"]),
                "" if last else repr(d["cut_points"][j]),
                "" if last else str(d["tie_split_flags"][j]).lower(),
                d["objective"], d["solver"],
            ])
        n = d["partitions"][-1]["hi"]
        w.writerow(["summary", d["k"], 0, n, "", repr(d["total_cost"]), "", "",
                    d["objective"], d["solver"]])

    _write(dest, emit)


def parse_result(text: str, fmt: str = "json") -> dict:
    """Inverse of :func:`write_result`, returning the JSON-shaped dict."""
    if fmt == "json":
        return json.loads(text)
    rows = list(csv.DictReader(_io.StringIO(text)))
    parts = [r for r in rows if r["kind"] == "partition"]
    summary = next(r for r in rows if r["kind"] == "summary")
    return {
        "objective": summary["objective"],
        "k": int(summary["index"]),
        "cut_indices": [int(r["hi"]) for r in parts[:-1]],
        "cut_points": [float(r["cut_point"]) for r in parts[:-1]],
        "total_cost": float(summary["cost"]),
        "partitions": [
            {"lo": int(r["lo"]), "hi": int(r["hi"]), "mean": float(r["mean"]),
             "cost": float(r["cost"])}
            for r in parts
        ],
        "solver": summary["solver"],
        "tie_split_flags": [r["tie_split"] == "true" for r in parts[:-1]],
    }


def dump_json(obj, dest=None) -> None:
    _write(dest, lambda fh: fh.write(json.dumps(obj, indent=2) + "\n"))
