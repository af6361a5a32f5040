"""Descriptive moment statistics and the Jarque-Bera normality test.

Skewness and kurtosis use population central moments (divisor n); that
convention makes the moment estimates and the statistic built from them
internally consistent.  Kurtosis is raw, so a normal sample centres on 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .distributions import chi2_sf
from .errors import InsufficientDataError, ZeroVarianceError

__all__ = ["DescriptiveStats", "TestResult", "describe", "jarque_bera"]


def _values(series_or_values) -> np.ndarray:
    values = getattr(series_or_values, "values", series_or_values)
    return np.asarray(values, dtype=float)


@dataclass(frozen=True)
class DescriptiveStats:
    """Sample moments of a return series (kurtosis raw, normal = 3)."""

    n: int
    mean: float
    max: float
    min: float
    std_dev: float
    skewness: float
    kurtosis: float


@dataclass(frozen=True)
class TestResult:
    """Outcome of one statistical test plus reproduction-mode metadata."""

    test_name: str
    statistic: float
    p_value: float
    reject_at_5pct: bool
    mode_notes: str = ""
    auxiliary: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 <= self.p_value <= 1.0:
            raise ValueError(f"{self.test_name}: p-value {self.p_value} outside [0, 1]")


def describe(returns) -> DescriptiveStats:
    """Sample moments: mean, extrema, sample std (n-1), skewness, kurtosis.

    Accepts a ReturnSeries or any 1-D array-like.

    Raises
    ------
    InsufficientDataError
        Fewer than two observations.
    ZeroVarianceError
        Constant input, where skewness and kurtosis are undefined.
    """
    x = _values(returns)
    n = x.size
    if n < 2:
        raise InsufficientDataError(f"describe needs at least 2 observations, got {n}")
    mean = float(np.mean(x))
    d = x - mean
    m2 = float(np.mean(d ** 2))
    if m2 == 0.0:
        raise ZeroVarianceError("zero variance: skewness and kurtosis are undefined")
    m3 = float(np.mean(d ** 3))
    m4 = float(np.mean(d ** 4))
    return DescriptiveStats(
        n=n,
        mean=mean,
        max=float(np.max(x)),
        min=float(np.min(x)),
        std_dev=float(np.std(x, ddof=1)),
        skewness=m3 / m2 ** 1.5,
        kurtosis=m4 / m2 ** 2,
    )


def jarque_bera(stats: DescriptiveStats) -> TestResult:
    """Jarque-Bera normality test: JB = n * (S^2/6 + (K-3)^2/24).

    The null of normality is rejected when the chi-square(2) upper-tail
    probability falls below 0.05.
    """
    s, k = stats.skewness, stats.kurtosis
    jb = stats.n * (s ** 2 / 6.0 + (k - 3.0) ** 2 / 24.0)
    p = chi2_sf(jb, 2)
    return TestResult(
        test_name="jarque_bera",
        statistic=jb,
        p_value=p,
        reject_at_5pct=p < 0.05,
        mode_notes="asymptotic chi-square(2) p-value",
        auxiliary={"n": float(stats.n), "skewness": s, "kurtosis": k},
    )
