"""Ordinary least squares and the augmented Dickey-Fuller unit-root test.

Three regression variants are exposed: ``none`` (no deterministic terms),
``drift`` (constant), and ``drift_trend`` (constant plus linear trend).
The tau statistic does not follow Student's t under the unit-root null, so
p-values are interpolated from finite-sample quantile tables simulated for
each variant (see ``_adf_surface`` and ``scripts/gen_adf_surface.py``); an
independent Monte-Carlo check of those tables lives in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from . import _adf_surface as surface
from .descriptive import _values
from .distributions import normal_cdf, normal_icdf
from .errors import ConfigurationError, InsufficientDataError, SingularDesignError

__all__ = ["OlsFit", "AdfResult", "ols", "default_lag", "adf_test", "adf_pvalue",
           "tau_null_quantiles"]

MODELS = ("none", "drift", "drift_trend")

P_FLOOR = 0.01
P_CEIL = 0.99


@dataclass(frozen=True)
class OlsFit:
    coefficients: np.ndarray
    std_errors: np.ndarray
    t_stats: np.ndarray
    residuals: np.ndarray
    rss: float
    n_obs: int
    n_params: int


@dataclass(frozen=True)
class AdfResult:
    """ADF outcome: tau, its interpolated p-value, and the regression setup.

    ``n_obs`` is the regression sample size after differencing and lag
    consumption.  Rejection (p < 0.05) means the unit-root null is rejected,
    i.e. the series looks stationary.
    """

    tau: float
    lags: int
    model: str
    p_value: float
    n_obs: int
    target: str = "returns"

    @property
    def reject_at_5pct(self) -> bool:
        return self.p_value < 0.05


def ols(design, response) -> OlsFit:
    """Least-squares fit with classical standard errors s^2 (X'X)^-1.

    Raises
    ------
    SingularDesignError
        Rank-deficient design matrix.
    """
    X = np.asarray(design, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    y = np.asarray(response, dtype=float)
    n, p = X.shape
    if y.shape != (n,):
        raise ConfigurationError(f"response length {y.shape} does not match design rows {n}")
    if n <= p:
        raise InsufficientDataError(f"need more observations ({n}) than parameters ({p})")

    Q, R = np.linalg.qr(X)
    diag = np.abs(np.diag(R))
    if diag.min() <= n * np.finfo(float).eps * max(diag.max(), 1.0):
        raise SingularDesignError("design matrix is rank deficient")

    beta = solve_triangular(R, Q.T @ y)
    residuals = y - X @ beta
    rss = float(residuals @ residuals)
    s2 = rss / (n - p)
    r_inv = solve_triangular(R, np.eye(p))
    se = np.sqrt(s2 * np.sum(r_inv * r_inv, axis=1))
    with np.errstate(divide="ignore", invalid="ignore"):
        t = beta / se
    return OlsFit(beta, se, t, residuals, rss, n, p)


def default_lag(n: int) -> int:
    """Lag order rule floor((n - 1)^(1/3)), exact for perfect cubes."""
    if n < 10:
        raise InsufficientDataError(f"lag rule needs n >= 10, got {n}")
    q = int(round((n - 1) ** (1.0 / 3.0)))
    while (q + 1) ** 3 <= n - 1:
        q += 1
    while q ** 3 > n - 1:
        q -= 1
    return q


def _design(x: np.ndarray, lags: int, model: str):
    """Regression pieces for Delta x_t on x_{t-1}, lagged diffs, deterministics.

    Column order: lagged level, lagged differences, constant, trend.
    """
    dx = np.diff(x)
    rows = dx.size - lags
    y = dx[lags:]
    cols = [x[lags:-1]]
    for j in range(1, lags + 1):
        cols.append(dx[lags - j:dx.size - j])
    if model in ("drift", "drift_trend"):
        cols.append(np.ones(rows))
    if model == "drift_trend":
        cols.append(np.arange(1.0, rows + 1.0))
    return np.column_stack(cols), y, rows


def adf_test(series, lags: int | None = None, model: str = "drift_trend",
             target: str = "returns") -> AdfResult:
    """Augmented Dickey-Fuller test on returns or (log) price levels.

    Parameters
    ----------
    series : ReturnSeries or 1-D array-like of the values to test.
    lags : number of lagged-difference terms; default is the cube-root rule
        applied to the series length.
    model : "none", "drift", or "drift_trend".
    target : recorded in the result ("returns" or "log_prices").
    """
    if model not in MODELS:
        raise ConfigurationError(f"model must be one of {MODELS}, got {model!r}")
    x = _values(series)
    n = x.size
    if lags is None:
        lags = default_lag(n)
    if lags < 0:
        raise ConfigurationError(f"lags must be nonnegative, got {lags}")
    if n < lags + 10:
        raise InsufficientDataError(f"ADF with {lags} lags needs at least {lags + 10} observations, got {n}")
    X, y, rows = _design(x, lags, model)
    fit = ols(X, y)
    tau = float(fit.t_stats[0])
    return AdfResult(
        tau=tau, lags=lags, model=model,
        p_value=adf_pvalue(tau, model, rows), n_obs=rows, target=target,
    )


def _quantile_row(model: str, n: int) -> np.ndarray:
    """Tau quantiles at the surface's p-levels, interpolated in 1/n."""
    sizes = surface.SAMPLE_SIZES
    table = np.asarray(surface.QUANTILES[model])
    n = min(max(n, sizes[0]), sizes[-1])
    hi = next(i for i, s in enumerate(sizes) if s >= n)
    if sizes[hi] == n:
        return table[hi]
    lo = hi - 1
    w = (1.0 / n - 1.0 / sizes[lo]) / (1.0 / sizes[hi] - 1.0 / sizes[lo])
    return (1.0 - w) * table[lo] + w * table[hi]


def adf_pvalue(tau: float, model: str, n: int) -> float:
    """Finite-sample p-value for tau, clamped to [0.01, 0.99].

    Linear interpolation on the probit scale between simulated null
    quantiles; monotone non-decreasing in tau by construction.
    """
    if model not in MODELS:
        raise ConfigurationError(f"model must be one of {MODELS}, got {model!r}")
    q = _quantile_row(model, n)
    levels = np.asarray(surface.P_LEVELS)
    if tau <= q[0]:
        return P_FLOOR
    if tau >= q[-1]:
        return P_CEIL
    j = int(np.searchsorted(q, tau, side="right")) - 1
    j = min(j, q.size - 2)
    w = (tau - q[j]) / (q[j + 1] - q[j])
    z = (1.0 - w) * normal_icdf(levels[j]) + w * normal_icdf(levels[j + 1])
    p = normal_cdf(z)
    return float(min(max(p, P_FLOOR), P_CEIL))


def tau_null_quantiles(model: str, n_obs: int, trials: int, seed: int,
                       levels=(0.01, 0.05, 0.10)) -> np.ndarray:
    """Simulate the tau null distribution through the production code path.

    Generates driftless random walks with the package RNG, runs
    :func:`adf_test` with zero lags on each, and returns the empirical tau
    quantiles.  This is the in-repo oracle for the embedded surface tables,
    deliberately kept independent of the script that generated them.
    """
    from .simulate import GeneratorSpec, generate

    taus = np.empty(trials)
    for i in range(trials):
        spec = GeneratorSpec(kind="random_walk", n=n_obs + 1, seed=_trial_seed(seed, i))
        taus[i] = adf_test(generate(spec), lags=0, model=model).tau
    return np.quantile(taus, levels)


def _trial_seed(seed: int, i: int) -> int:
    from .simulate import splitmix64

    return int(splitmix64(seed, 1, start=i)[0])
