"""Runs test, autocorrelation function with t-values, and Ljung-Box test.

The runs test classifies each observation against a reference value (the
sample mean, or zero); values exactly equal to the reference are excluded
from the run sequence but reported separately.  The ACF offers two
standard-error conventions: ``appendix`` uses 1/sqrt(n) per observation
count, ``paper_table`` uses sd(rho_1..rho_K)/sqrt(K) across the computed
coefficients.  Both are always stored on the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .descriptive import TestResult, _values
from .distributions import chi2_sf, normal_cdf
from .errors import InsufficientDataError, InvalidInputError, ZeroVarianceError

__all__ = [
    "RunsResult",
    "AcfResult",
    "runs_test",
    "runs_test_from_counts",
    "acf",
    "acf_from_rho",
    "ljung_box",
    "paper_table_se",
]


@dataclass(frozen=True)
class RunsResult:
    """Counts and normal-approximation statistic of a runs test.

    ``z`` is signed: negative means fewer runs than expected (clustering),
    positive means more (alternation).
    """

    n: int
    n_runs: int
    n_above: int
    n_below: int
    n_equal: int
    z: float
    p_value: float
    reference: str
    mode_notes: str = ""

    @property
    def reject_at_5pct(self) -> bool:
        return abs(self.z) > 1.959963984540054


def runs_test_from_counts(n_runs: int, n_above: int, n_below: int,
                          n_equal: int = 0, reference: str = "mean") -> RunsResult:
    """Runs test Z and p from the classification counts alone.

    Z = (U - mu_U) / sigma_U with mu_U = 2*nA*nB/n + 1 and
    sigma_U^2 = 2*nA*nB*(2*nA*nB - n) / (n^2 * (n - 1)), n = nA + nB.
    """
    if n_above < 1 or n_below < 1:
        raise InvalidInputError(
            f"runs test needs observations on both sides of the reference "
            f"(above={n_above}, below={n_below})")
    n = n_above + n_below
    two_ab = 2.0 * n_above * n_below
    mu = two_ab / n + 1.0
    var = two_ab * (two_ab - n) / (n * n * (n - 1.0))
    if var <= 0:
        raise InvalidInputError("runs test variance is degenerate for these counts")
    z = (n_runs - mu) / math.sqrt(var)
    p = 2.0 * (1.0 - normal_cdf(abs(z)))
    return RunsResult(
        n=n + n_equal, n_runs=n_runs, n_above=n_above, n_below=n_below,
        n_equal=n_equal, z=z, p_value=min(p, 1.0), reference=reference,
        mode_notes="signed Z; no continuity correction; ties excluded from run sequence",
    )


def runs_test(returns, reference: str = "mean") -> RunsResult:
    """Wald-Wolfowitz runs test of randomness relative to the mean or zero.

    Parameters
    ----------
    returns : ReturnSeries or 1-D array-like.
    reference : "mean" (sample mean) or "zero".
    """
    if reference not in ("mean", "zero"):
        raise InvalidInputError(f"reference must be 'mean' or 'zero', got {reference!r}")
    x = _values(returns)
    v = float(np.mean(x)) if reference == "mean" else 0.0
    above = x > v
    below = x < v
    n_equal = int(x.size - above.sum() - below.sum())
    signs = above[above | below]
    if signs.size == 0 or signs.all() or not signs.any():
        raise InvalidInputError(
            f"degenerate classification: all values on one side of the {reference} reference")
    n_runs = int(1 + np.count_nonzero(signs[1:] != signs[:-1]))
    return runs_test_from_counts(
        n_runs, int(above.sum()), int(below.sum()), n_equal, reference)


@dataclass(frozen=True)
class AcfResult:
    """Autocorrelations rho_1..rho_K with both SE conventions and Ljung-Box Q."""

    lags: int
    rho: np.ndarray
    se_appendix: float
    se_paper_table: float
    t_values: np.ndarray
    ljung_box_q: float
    q_p_value: float
    mode: str
    n_obs: int

    def significant(self, threshold: float = 1.959963984540054) -> np.ndarray:
        return np.abs(self.t_values) > threshold


def paper_table_se(rho) -> float:
    """sd(rho_1..rho_K)/sqrt(K), the tables' standard-error convention."""
    rho = np.asarray(rho, dtype=float)
    return float(np.std(rho, ddof=1) / math.sqrt(rho.size))


def _ljung_box_q(rho: np.ndarray, n: int, h: int) -> float:
    k = np.arange(1, h + 1)
    return float(n * (n + 2.0) * np.sum(rho[:h] ** 2 / (n - k)))


def acf_from_rho(rho, n: int, mode: str = "appendix") -> AcfResult:
    """Assemble an AcfResult from precomputed coefficients.

    Useful for reproducing published tables: the t-values and Ljung-Box Q
    are recomputed from the given rho under the selected SE convention.
    """
    if mode not in ("appendix", "paper_table"):
        raise InvalidInputError(f"mode must be 'appendix' or 'paper_table', got {mode!r}")
    rho = np.asarray(rho, dtype=float).copy()
    rho.setflags(write=False)
    k = rho.size
    se_a = 1.0 / math.sqrt(n)
    se_t = paper_table_se(rho) if k >= 2 else float("nan")
    se = se_a if mode == "appendix" else se_t
    t = rho / se
    t.setflags(write=False)
    q = _ljung_box_q(rho, n, k)
    return AcfResult(
        lags=k, rho=rho, se_appendix=se_a, se_paper_table=se_t, t_values=t,
        ljung_box_q=q, q_p_value=chi2_sf(q, k), mode=mode, n_obs=n,
    )


def acf(returns, max_lag: int = 20, mode: str = "appendix") -> AcfResult:
    """Sample autocorrelation function with significance t-values.

    rho_k = sum_{t>k} (y_t - ybar)(y_{t-k} - ybar) / sum_t (y_t - ybar)^2
    with the full-sample mean.  A coefficient is flagged significant when
    |t| > 1.96 under the selected SE mode.

    Raises
    ------
    InsufficientDataError
        If n <= max_lag.
    ZeroVarianceError
        Constant series.
    """
    x = _values(returns)
    n = x.size
    if max_lag < 1:
        raise InvalidInputError(f"max_lag must be >= 1, got {max_lag}")
    if n <= max_lag:
        raise InsufficientDataError(f"acf needs n > max_lag ({n} <= {max_lag})")
    d = x - np.mean(x)
    denom = float(np.dot(d, d))
    if denom == 0.0:
        raise ZeroVarianceError("zero variance: autocorrelation undefined on a constant series")
    rho = np.array([np.dot(d[k:], d[:-k]) / denom for k in range(1, max_lag + 1)])
    return acf_from_rho(rho, n, mode)


def ljung_box(acf_result: AcfResult, n: int, h: int | None = None) -> TestResult:
    """Ljung-Box portmanteau test that rho_1..rho_h are jointly zero.

    Q = n(n+2) * sum_{k=1..h} rho_k^2 / (n-k), compared to chi-square(h).
    """
    if h is None:
        h = acf_result.lags
    if not 1 <= h <= acf_result.lags:
        raise InvalidInputError(f"horizon h={h} must be in 1..{acf_result.lags}")
    if h >= n:
        raise InvalidInputError(f"horizon h={h} must be below the sample size {n}")
    q = _ljung_box_q(acf_result.rho, n, h)
    p = chi2_sf(q, h)
    return TestResult(
        test_name="ljung_box",
        statistic=q,
        p_value=p,
        reject_at_5pct=p < 0.05,
        mode_notes=f"h={h}, chi-square({h}) p-value",
        auxiliary={"h": float(h), "n": float(n)},
    )
