import numpy as np
import pytest

from effitest import (
    ConfigurationError,
    InsufficientDataError,
    InvalidInputError,
    default_lambda,
    hp_filter,
)
from effitest.hpfilter import hp_objective

from conftest import dense_hp_trend


class TestHpFilter:
    def test_lambda_zero_identity(self, rng):
        y = rng.normal(0, 1, 50)
        decomp = hp_filter(y, 0.0)
        assert np.allclose(decomp.trend, y, atol=1e-9)
        assert np.allclose(decomp.cycle, 0.0, atol=1e-9)

    def test_linear_input_identity(self):
        t = np.arange(120.0)
        y = 3.0 - 0.25 * t
        for lam in (1.0, 1600.0, 1e8):
            decomp = hp_filter(y, lam)
            assert np.max(np.abs(decomp.trend - y)) <= 1e-9

    def test_matches_dense_oracle(self, rng):
        for _ in range(50):
            n = int(rng.integers(4, 201))
            lam = float(10 ** rng.uniform(-1, 6))
            y = rng.normal(0, 1, n)
            decomp = hp_filter(y, lam)
            assert np.max(np.abs(decomp.trend - dense_hp_trend(y, lam))) <= 1e-8

    def test_trend_plus_cycle_reconstruction(self, rng):
        y = rng.normal(0, 1, 300)
        decomp = hp_filter(y, 1600.0)
        assert np.max(np.abs(decomp.trend + decomp.cycle - y)) <= 1e-9

    def test_local_optimality_by_perturbation(self, rng):
        y = rng.normal(0, 1, 60)
        lam = 1600.0
        decomp = hp_filter(y, lam)
        base = decomp.objective_value
        for i in range(60):
            for eps in (1e-4, -1e-4):
                bumped = decomp.trend.copy()
                bumped[i] += eps
                assert hp_objective(y, bumped, lam) >= base - 1e-12

    def test_mean_preservation(self, rng):
        y = rng.normal(5.0, 2.0, 250)
        decomp = hp_filter(y, 129600.0)
        assert np.mean(decomp.trend) == pytest.approx(np.mean(y), abs=1e-9)

    def test_penalty_monotone_in_lambda(self, rng):
        y = rng.normal(0, 1, 200)
        penalties = []
        for lam in (1e2, 1e4, 1e6):
            trend = hp_filter(y, lam).trend
            dd = np.diff(trend, n=2)
            penalties.append(float(dd @ dd))
        assert penalties[0] >= penalties[1] >= penalties[2]

    def test_large_lambda_approaches_ols_line(self, rng):
        y = rng.normal(0, 1, 500) + 0.01 * np.arange(500)
        trend = hp_filter(y, 1e12).trend
        t = np.arange(500.0)
        X = np.column_stack([np.ones(500), t])
        beta, *_ = np.linalg.lstsq(X, y, rcond=None)
        line = X @ beta
        assert np.max(np.abs(trend - line)) <= 1e-3 * np.std(y)

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            hp_filter(np.array([1.0, 2.0, 3.0]), 10.0)

    def test_non_finite(self):
        with pytest.raises(InvalidInputError):
            hp_filter(np.array([1.0, np.nan, 3.0, 4.0]), 10.0)

    def test_negative_lambda(self):
        with pytest.raises(InvalidInputError):
            hp_filter(np.arange(10.0), -1.0)


class TestDefaultLambda:
    def test_period_value_rule(self):
        assert default_lambda("daily") == 13_322_500.0
        assert default_lambda("annual") == 100.0
        assert default_lambda("quarterly") == 1600.0
        assert default_lambda("monthly") == 14_400.0

    def test_unknown_frequency(self):
        with pytest.raises(ConfigurationError):
            default_lambda("weekly")
