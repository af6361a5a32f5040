"""Calendar alignment of two markets' price series and correlation.

Alignment keeps every date inside the overlapping range where at least one
market traded; the closed market's price is carried forward from its most
recent prior close.  Dates where both markets are closed do not exist in
the output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AlignmentError, InvalidInputError, ZeroVarianceError
from .series import PriceSeries

__all__ = ["AlignedPair", "align", "pearson"]


@dataclass(frozen=True)
class AlignedPair:
    """Two equal-length price paths on a common trading calendar."""

    dates: tuple
    a_values: np.ndarray
    b_values: np.ndarray
    a_name: str
    b_name: str
    fill_count_a: int
    fill_count_b: int

    def __len__(self) -> int:
        return len(self.dates)

    def as_series(self) -> tuple:
        return (PriceSeries(self.a_name, self.dates, self.a_values),
                PriceSeries(self.b_name, self.dates, self.b_values))


def align(a: PriceSeries, b: PriceSeries) -> AlignedPair:
    """Equalize two series onto the union of their overlap-range dates.

    Raises
    ------
    AlignmentError
        If the date ranges do not overlap.
    """
    if len(a) == 0 or len(b) == 0:
        raise AlignmentError("cannot align an empty series")
    start = max(a.dates[0], b.dates[0])
    end = min(a.dates[-1], b.dates[-1])
    if start > end:
        raise AlignmentError(
            f"no overlapping dates between {a.index_name} ({a.dates[0]}..{a.dates[-1]}) "
            f"and {b.index_name} ({b.dates[0]}..{b.dates[-1]})")

    a_map = dict(zip(a.dates, a.values.tolist()))
    b_map = dict(zip(b.dates, b.values.tolist()))
    dates = sorted(d for d in set(a.dates) | set(b.dates) if start <= d <= end)

    def fill(series_map, series: PriceSeries):
        values, filled = [], 0
        last = None
        idx = 0
        for d in dates:
            while idx < len(series.dates) and series.dates[idx] <= d:
                last = float(series.values[idx])
                idx += 1
            if d in series_map:
                values.append(series_map[d])
            else:
                filled += 1
                values.append(last)
        return np.array(values), filled

    a_vals, fa = fill(a_map, a)
    b_vals, fb = fill(b_map, b)
    return AlignedPair(tuple(dates), a_vals, b_vals, a.index_name, b.index_name, fa, fb)


def pearson(x, y) -> float:
    """Product-moment correlation of two equal-length sequences.

    Raises
    ------
    InvalidInputError
        Mismatched lengths or fewer than 3 points.
    ZeroVarianceError
        Either input constant.
    """
    xv = np.asarray(getattr(x, "values", x), dtype=float)
    yv = np.asarray(getattr(y, "values", y), dtype=float)
    if xv.size != yv.size:
        raise InvalidInputError(f"length mismatch: {xv.size} vs {yv.size}")
    if xv.size < 3:
        raise InvalidInputError(f"pearson needs at least 3 points, got {xv.size}")
    dx = xv - xv.mean()
    dy = yv - yv.mean()
    sx = float(dx @ dx)
    sy = float(dy @ dy)
    if sx == 0.0 or sy == 0.0:
        raise ZeroVarianceError("zero variance: correlation undefined for a constant input")
    r = float((dx @ dy) / np.sqrt(sx * sy))
    return max(-1.0, min(1.0, r))
