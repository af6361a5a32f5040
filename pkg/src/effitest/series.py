"""Core time-series value types, return computation, and period segmentation.

Dates are plain :class:`datetime.date` objects (``TradingDate`` is an alias);
observation values live in read-only float64 arrays so a series can be
shared freely between threads once constructed.
"""

from __future__ import annotations

import datetime as dt
import logging
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence, Union

import numpy as np

from .errors import InvalidInputError

__all__ = [
    "TradingDate",
    "PriceSeries",
    "ReturnSeries",
    "Period",
    "PeriodScheme",
    "compute_returns",
    "segment",
    "default_scheme",
]

log = logging.getLogger(__name__)

TradingDate = dt.date


def _freeze(values, name) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise InvalidInputError(f"{name}: observations must be one-dimensional")
    if arr.size and not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name}: observations contain non-finite values")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


def _check_dates(dates: Sequence[TradingDate], name: str) -> tuple:
    dates = tuple(dates)
    for a, b in zip(dates, dates[1:]):
        if a >= b:
            raise InvalidInputError(f"{name}: dates must be strictly increasing ({a} !< {b})")
    return dates


@dataclass(frozen=True)
class PriceSeries:
    """Dated closing prices for one index.

    Invariants enforced at construction: strictly increasing dates, strictly
    positive finite prices, one price per date.
    """

    index_name: str
    dates: tuple = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dates", _check_dates(self.dates, self.index_name))
        object.__setattr__(self, "values", _freeze(self.values, self.index_name))
        if len(self.dates) != len(self.values):
            raise InvalidInputError(f"{self.index_name}: {len(self.dates)} dates vs {len(self.values)} prices")
        if self.values.size and np.any(self.values <= 0):
            raise InvalidInputError(f"{self.index_name}: prices must be positive")

    def __len__(self) -> int:
        return len(self.values)

    def observations(self) -> Iterator[tuple]:
        return zip(self.dates, self.values.tolist())

    def __eq__(self, other):
        if not isinstance(other, PriceSeries):
            return NotImplemented
        return (self.index_name == other.index_name and self.dates == other.dates
                and np.array_equal(self.values, other.values))


@dataclass(frozen=True)
class ReturnSeries:
    """Dated simple daily returns; each return carries the later price's date."""

    index_name: str
    dates: tuple = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dates", _check_dates(self.dates, self.index_name))
        object.__setattr__(self, "values", _freeze(self.values, self.index_name))
        if len(self.dates) != len(self.values):
            raise InvalidInputError(f"{self.index_name}: {len(self.dates)} dates vs {len(self.values)} returns")
        if self.values.size and np.any(self.values <= -1):
            raise InvalidInputError(f"{self.index_name}: simple returns must exceed -1")

    def __len__(self) -> int:
        return len(self.values)

    def observations(self) -> Iterator[tuple]:
        return zip(self.dates, self.values.tolist())

    def __eq__(self, other):
        if not isinstance(other, ReturnSeries):
            return NotImplemented
        return (self.index_name == other.index_name and self.dates == other.dates
                and np.array_equal(self.values, other.values))


AnySeries = Union[PriceSeries, ReturnSeries]


@dataclass(frozen=True)
class Period:
    """One labelled date interval, inclusive on both ends.

    ``full`` marks the whole-sample entry, which is allowed to span the
    other periods and is skipped by the overlap check.
    """

    label: str
    start: TradingDate
    end: TradingDate
    full: bool = False

    def __post_init__(self):
        if self.start > self.end:
            raise InvalidInputError(f"period {self.label!r}: start {self.start} after end {self.end}")

    def contains(self, d: TradingDate) -> bool:
        return self.start <= d <= self.end


@dataclass(frozen=True)
class PeriodScheme:
    """Named partition of the sample: sub-periods plus an optional full span."""

    periods: tuple

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(self.periods))
        labels = [p.label for p in self.periods]
        if len(set(labels)) != len(labels):
            raise InvalidInputError(f"period labels must be unique, got {labels}")
        subs = [p for p in self.periods if not p.full]
        for a, b in zip(subs, subs[1:]):
            if b.start <= a.end:
                raise InvalidInputError(
                    f"periods {a.label!r} and {b.label!r} overlap or are out of order")

    @property
    def labels(self) -> tuple:
        return tuple(p.label for p in self.periods)


def compute_returns(prices: PriceSeries) -> ReturnSeries:
    """Simple daily returns (P_t - P_{t-1}) / P_{t-1}, dated at the later price.

    Raises
    ------
    InvalidInputError
        If the price series has fewer than two observations.
    """
    if len(prices) < 2:
        raise InvalidInputError(
            f"price series {prices.index_name!r} needs at least 2 observations, has {len(prices)}")
    p = prices.values
    rets = (p[1:] - p[:-1]) / p[:-1]
    return ReturnSeries(prices.index_name, prices.dates[1:], rets)


def segment(series: AnySeries, scheme: PeriodScheme) -> Mapping[str, AnySeries]:
    """Split a series by the scheme's date intervals.

    Observations outside every period are dropped; an empty sub-period is
    returned empty (and logged) so downstream tests can raise their own
    minimum-length errors.
    """
    out = {}
    for period in scheme.periods:
        keep = [i for i, d in enumerate(series.dates) if period.contains(d)]
        sub = type(series)(
            series.index_name,
            tuple(series.dates[i] for i in keep),
            series.values[keep] if keep else np.empty(0),
        )
        if not keep:
            log.warning("period %r of %s is empty", period.label, series.index_name)
        out[period.label] = sub
    return out


def default_scheme() -> PeriodScheme:
    """Five-entry scheme: the full sample plus the four crisis sub-periods.

    Boundaries follow calendar month edges: the recession window opens
    Dec 2007 and closes Jun 2009, the post-recession window runs through
    May 2015, and the final window covers Jun 2015 onward.
    """
    return PeriodScheme((
        Period("Full", dt.date(1996, 1, 1), dt.date(2016, 4, 8), full=True),
        Period("I", dt.date(1996, 1, 1), dt.date(2007, 11, 30)),
        Period("II", dt.date(2007, 12, 1), dt.date(2009, 6, 30)),
        Period("III", dt.date(2009, 7, 1), dt.date(2015, 5, 31)),
        Period("IV", dt.date(2015, 6, 1), dt.date(2016, 4, 8)),
    ))
