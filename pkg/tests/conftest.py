"""Shared fixtures and independent oracle helpers.

Oracles here are deliberately written in the most obvious way possible
(dense linear algebra, double loops, library quadrature) so they stay
independent of the production code paths they check.
"""

import datetime as dt

import numpy as np
import pytest

from effitest import PriceSeries, ReturnSeries


def weekday_dates(start: dt.date, count: int) -> tuple:
    out = []
    d = start
    while len(out) < count:
        if d.weekday() < 5:
            out.append(d)
        d += dt.timedelta(days=1)
    return tuple(out)


def make_prices(values, start=dt.date(2000, 1, 3), name="TEST") -> PriceSeries:
    return PriceSeries(name, weekday_dates(start, len(values)), values)


def make_returns(values, start=dt.date(2000, 1, 3), name="TEST") -> ReturnSeries:
    return ReturnSeries(name, weekday_dates(start, len(values)), values)


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


# ------------------------------------------------------------------ oracles

def dense_hp_trend(y: np.ndarray, lam: float) -> np.ndarray:
    """Direct dense solve of (I + lam*D'D) trend = y."""
    n = y.size
    D = np.zeros((n - 2, n))
    for i in range(n - 2):
        D[i, i], D[i, i + 1], D[i, i + 2] = 1.0, -2.0, 1.0
    return np.linalg.solve(np.eye(n) + lam * (D.T @ D), y)


def double_loop_acf(y: np.ndarray, max_lag: int) -> np.ndarray:
    """O(n*K) textbook autocorrelation, full-sample mean in both factors."""
    n = y.size
    mean = sum(y) / n
    denom = sum((v - mean) ** 2 for v in y)
    out = []
    for k in range(1, max_lag + 1):
        num = 0.0
        for t in range(k, n):
            num += (y[t] - mean) * (y[t - k] - mean)
        out.append(num / denom)
    return np.array(out)


def exact_binomial_halfwidth(successes: int, trials: int) -> float:
    """Half-width of the exact Clopper-Pearson 95% interval."""
    from scipy.stats import beta

    lo = 0.0 if successes == 0 else beta.ppf(0.025, successes, trials - successes + 1)
    hi = 1.0 if successes == trials else beta.ppf(0.975, successes + 1, trials - successes)
    return (hi - lo) / 2.0
