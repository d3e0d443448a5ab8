"""Agreement between two cut-point sets.

Cuts are paired within an x-axis tolerance. Because both sets are sorted, an
optimal pairing never crosses, so a small alignment DP finds the matching
with the most pairs and, among those, the least total distance.

``classify_match`` maps a score onto the five matching-status bands used when
reporting similarity between human-chosen and computed cut-points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import OutOfRange, UsageError

DEFAULT_TOLERANCE = 2.0

VERY_HIGH = "Very High"
HIGH = "High"
MEDIUM = "Medium"
LOW = "Low"
NO_MATCH = "No match"


@dataclass(frozen=True)
class AgreementReport:
    score: float
    matched_pairs: tuple[tuple[float, float, float], ...]
    unmatched_a: tuple[float, ...]
    unmatched_b: tuple[float, ...]
    tolerance: float
    label: str = field(default="")


def _values(cuts) -> list[float]:
    vals = getattr(cuts, "values", cuts)
    return sorted(float(v) for v in vals)


def agreement_score(a: Iterable[float], b: Iterable[float],
                    tolerance: float = DEFAULT_TOLERANCE) -> AgreementReport:
    if not tolerance >= 0:
        raise UsageError(f"tolerance must be non-negative, got {tolerance}")
    av = _values(a)
    bv = _values(b)
    na, nb = len(av), len(bv)

    # best[i][j] = (pairs, -distance) over av[i:], bv[j:]
    best = [[(0, 0.0)] * (nb + 1) for _ in range(na + 1)]
    for i in range(na - 1, -1, -1):
        for j in range(nb - 1, -1, -1):
            cand = max(best[i + 1][j], best[i][j + 1])
            d = abs(av[i] - bv[j])
            if d <= tolerance:
                cnt, neg = best[i + 1][j + 1]
                cand = max(cand, (cnt + 1, neg - d))
            best[i][j] = cand

    pairs = []
    used_a, used_b = set(), set()
    i = j = 0
    while i < na and j < nb:
        d = abs(av[i] - bv[j])
        if d <= tolerance:
            cnt, neg = best[i + 1][j + 1]
            if (cnt + 1, neg - d) == best[i][j]:
                pairs.append((av[i], bv[j], d))
                used_a.add(i)
                used_b.add(j)
                i += 1
                j += 1
                continue
        if best[i + 1][j] == best[i][j]:
            i += 1
        else:
            j += 1

    if na == 0 and nb == 0:
        score = 1.0
    else:
        score = len(pairs) / max(na, nb)
    return AgreementReport(
        score=score,
        matched_pairs=tuple(pairs),
        unmatched_a=tuple(v for k, v in enumerate(av) if k not in used_a),
        unmatched_b=tuple(v for k, v in enumerate(bv) if k not in used_b),
        tolerance=float(tolerance),
        label=classify_match(score),
    )


def classify_match(score: float) -> str:
    """Band a score in [0, 1].

    Bands are closed at the lower end: [80, 100] Very High, [60, 80) High,
    [40, 60) Medium, (0, 40) Low, exactly 0 No match.
    """
    if not 0.0 <= score <= 1.0:
        raise OutOfRange(f"score {score} is outside [0, 1]")
    pct = round(score * 100.0, 9)
    if pct >= 80:
        return VERY_HIGH
    if pct >= 60:
        return HIGH
    if pct >= 40:
        return MEDIUM
    if pct > 0:
        return LOW
    return NO_MATCH
