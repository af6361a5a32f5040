"""Seeded synthetic generators and the Monte-Carlo size/power harness.

Reproducibility contract
------------------------
Draws come from the SplitMix64 counter sequence: output ``i`` (0-based) for
seed ``s`` is ``mix(s + (i+1) * 0x9E3779B97F4A7C15)`` where ``mix`` is the
xor-shift/multiply finalizer with constants ``0xBF58476D1F4E5757`` (shift
30), ``0x94D049BB133111EB`` (shift 27), and a final 31-bit xor-shift, all
modulo 2^64.  A uniform in (0,1) takes the top 53 bits as
``(bits + 0.5) * 2^-53`` and becomes standard normal through the AS 241
inverse CDF (:func:`effitest.distributions.normal_icdf`).  Both pieces are
fixed algorithms, so identical GeneratorSpecs give bit-identical sequences
on any platform or implementation language.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .descriptive import describe, jarque_bera
from .distributions import normal_icdf
from .errors import ConfigurationError, InvalidInputError
from .randomness import acf, ljung_box, runs_test
from .unitroot import adf_test

__all__ = ["GeneratorSpec", "SizePowerResult", "BatteryCheck", "splitmix64",
           "generate", "size_power", "acceptance_battery"]

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1F4E5757)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK = (1 << 64) - 1

AR1_BURN_IN = 100


def splitmix64(seed: int, n: int, start: int = 0) -> np.ndarray:
    """Outputs start..start+n-1 of the SplitMix64 stream for this seed."""
    idx = np.arange(start + 1, start + n + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK) + idx * _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _standard_normals(seed: int, n: int, start: int = 0) -> np.ndarray:
    bits = splitmix64(seed, n, start) >> np.uint64(11)
    u = (bits.astype(np.float64) + 0.5) * 2.0 ** -53
    return normal_icdf(u)


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one synthetic series: what kind, how long, which seed."""

    kind: str
    n: int
    drift: float = 0.0
    phi: float = 0.0
    sigma: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("random_walk", "ar1", "iid_gaussian"):
            raise ConfigurationError(f"unknown generator kind {self.kind!r}")
        if self.n < 10:
            raise InvalidInputError(f"generator needs n >= 10, got {self.n}")
        if self.sigma <= 0:
            raise InvalidInputError(f"sigma must be positive, got {self.sigma}")
        if self.kind == "ar1" and not abs(self.phi) < 1:
            raise InvalidInputError(f"ar1 needs |phi| < 1, got {self.phi}")


def generate(spec: GeneratorSpec) -> np.ndarray:
    """Deterministic synthetic sequence drawn per ``spec``.

    random_walk: levels X_t = drift + X_{t-1} + sigma*z_t from X_0 = 0
    (X_0 itself is not emitted).  iid_gaussian: drift + sigma*z_t.  ar1:
    y_t = phi*y_{t-1} + sigma*z_t after a discarded burn-in of
    ``AR1_BURN_IN`` draws.
    """
    if spec.kind == "iid_gaussian":
        return spec.drift + spec.sigma * _standard_normals(spec.seed, spec.n)
    if spec.kind == "random_walk":
        steps = spec.drift + spec.sigma * _standard_normals(spec.seed, spec.n)
        return np.cumsum(steps)
    eps = spec.sigma * _standard_normals(spec.seed, spec.n + AR1_BURN_IN)
    y = np.empty(spec.n + AR1_BURN_IN)
    prev = 0.0
    for t, e in enumerate(eps.tolist()):
        prev = spec.phi * prev + e
        y[t] = prev
    return y[AR1_BURN_IN:]


@dataclass(frozen=True)
class SizePowerResult:
    """Rejection rate of one test over seeded Monte-Carlo trials."""

    test_name: str
    generator: GeneratorSpec
    trials: int
    alpha: float
    rejection_rate: float
    ci_halfwidth: float


def _p_runs(x, params):
    return runs_test(x, reference=params.get("reference", "mean")).p_value


def _p_jarque_bera(x, params):
    return jarque_bera(describe(x)).p_value


def _p_ljung_box(x, params):
    h = params.get("h", 10)
    result = acf(x, max_lag=h)
    return ljung_box(result, x.size, h).p_value


def _p_adf(x, params):
    return adf_test(x, lags=params.get("lags"), model=params.get("model", "drift_trend")).p_value


_TESTS = {
    "runs_test": _p_runs,
    "jarque_bera": _p_jarque_bera,
    "ljung_box": _p_ljung_box,
    "adf": _p_adf,
}


def size_power(test, spec: GeneratorSpec, trials: int, alpha: float = 0.05) -> SizePowerResult:
    """Rejection rate of ``test`` over independent draws from ``spec``.

    Parameters
    ----------
    test : test name, or (name, params-dict) for test options such as
        ``("ljung_box", {"h": 10})``.
    spec : generator recipe; trial i uses the seed stream derived from
        output i of SplitMix64(spec.seed), so results are independent of
        evaluation order.
    trials : at least 100.

    Raises
    ------
    ConfigurationError
        Unknown test identifier.
    """
    if isinstance(test, str):
        name, params = test, {}
    else:
        name, params = test
    if name not in _TESTS:
        raise ConfigurationError(f"unknown test identifier {name!r}; choose from {sorted(_TESTS)}")
    if trials < 100:
        raise InvalidInputError(f"need at least 100 trials, got {trials}")
    p_fn = _TESTS[name]
    trial_seeds = splitmix64(spec.seed, trials)
    rejections = 0
    for i in range(trials):
        x = generate(replace(spec, seed=int(trial_seeds[i])))
        if p_fn(x, params) < alpha:
            rejections += 1
    rate = rejections / trials
    return SizePowerResult(
        test_name=name, generator=spec, trials=trials, alpha=alpha,
        rejection_rate=rate,
        ci_halfwidth=1.96 * math.sqrt(rate * (1.0 - rate) / trials),
    )


@dataclass(frozen=True)
class BatteryCheck:
    """One line of the Monte-Carlo calibration battery."""

    name: str
    rate: float
    lo: float
    hi: float

    @property
    def passed(self) -> bool:
        return self.lo <= self.rate <= self.hi


def _adf_tau_power_rate(seed: int, trials: int = 200, n: int = 5000,
                        threshold: float = -10.0) -> float:
    hits = 0
    for s in splitmix64(seed, trials).tolist():
        x = generate(GeneratorSpec(kind="iid_gaussian", n=n, seed=s))
        if adf_test(x).tau < threshold:
            hits += 1
    return hits / trials


def acceptance_battery(seed: int = 42) -> list:
    """Size and power calibration of every test, with its target band.

    Size checks draw i.i.d. Gaussian samples (or driftless random walks for
    the ADF null); power checks use an AR(1) alternative for Ljung-Box and
    white-noise "returns" for ADF, where the tau statistic must be far in
    the rejection region.
    """
    seeds = splitmix64(seed ^ 0xBA77E127, 8).tolist()
    gauss500 = GeneratorSpec(kind="iid_gaussian", n=500, seed=0)
    checks = [
        BatteryCheck("runs_test size (iid gaussian n=500)",
                     size_power("runs_test", replace(gauss500, seed=seeds[0]), 2000).rejection_rate,
                     0.03, 0.07),
        BatteryCheck("jarque_bera size (iid gaussian n=500)",
                     size_power("jarque_bera", replace(gauss500, seed=seeds[1]), 2000).rejection_rate,
                     0.03, 0.08),
        BatteryCheck("ljung_box(h=10) size (iid gaussian n=500)",
                     size_power(("ljung_box", {"h": 10}), replace(gauss500, seed=seeds[2]),
                                2000).rejection_rate,
                     0.03, 0.08),
        BatteryCheck("adf(drift) size (random walk levels n=1000)",
                     size_power(("adf", {"model": "drift"}),
                                GeneratorSpec(kind="random_walk", n=1000, seed=seeds[3]),
                                1000).rejection_rate,
                     0.0, 0.10),
        BatteryCheck("ljung_box(h=10) power (AR(1) phi=0.3 n=500)",
                     size_power(("ljung_box", {"h": 10}),
                                GeneratorSpec(kind="ar1", n=500, phi=0.3, seed=seeds[4]),
                                1000).rejection_rate,
                     0.95, 1.0),
        BatteryCheck("adf tau < -10 (iid returns n=5000)",
                     _adf_tau_power_rate(seeds[5]),
                     0.99, 1.0),
    ]
    return checks
