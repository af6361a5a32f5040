import numpy as np
import pytest

from effitest import (
    GeneratorSpec,
    InsufficientDataError,
    SingularDesignError,
    adf_pvalue,
    adf_test,
    default_lag,
    generate,
    ols,
    tau_null_quantiles,
)
from effitest import _adf_surface as surface


class TestOls:
    def test_exact_fit(self):
        x = np.arange(1.0, 11.0)
        fit = ols(x[:, None], 2.0 * x)
        assert fit.coefficients[0] == pytest.approx(2.0)
        assert fit.rss == pytest.approx(0.0, abs=1e-20)

    def test_intercept_only_is_mean(self):
        fit = ols(np.ones((3, 1)), np.array([1.0, 2.0, 3.0]))
        assert fit.coefficients[0] == pytest.approx(2.0)

    def test_seeded_noise_within_three_se(self, rng):
        x = rng.uniform(0, 10, 200)
        y = 1.0 + 3.0 * x + rng.normal(0, 0.5, 200)
        fit = ols(np.column_stack([np.ones(200), x]), y)
        for est, se, truth in zip(fit.coefficients, fit.std_errors, (1.0, 3.0)):
            assert abs(est - truth) < 3.0 * se

    def test_residual_orthogonality(self, rng):
        X = rng.normal(0, 1, (150, 4))
        y = rng.normal(0, 1, 150)
        fit = ols(X, y)
        rnorm = np.linalg.norm(fit.residuals)
        for j in range(4):
            bound = 1e-8 * np.linalg.norm(X[:, j]) * max(rnorm, 1e-30)
            assert abs(float(X[:, j] @ fit.residuals)) <= max(bound, 1e-12)

    def test_rank_deficiency(self):
        X = np.column_stack([np.ones(20), np.ones(20)])
        with pytest.raises(SingularDesignError):
            ols(X, np.arange(20.0))

    def test_deterministic(self, rng):
        X = rng.normal(0, 1, (50, 2))
        y = rng.normal(0, 1, 50)
        a, b = ols(X, y), ols(X, y)
        assert np.array_equal(a.coefficients, b.coefficients)
        assert a.rss == b.rss


class TestDefaultLag:
    def test_published_observation_counts(self):
        assert [default_lag(n) for n in (5153, 3092, 399, 1465, 197)] == [17, 14, 7, 11, 5]

    def test_perfect_cube_boundary(self):
        assert default_lag(4914) == 17   # 4913 = 17^3
        assert default_lag(4913) == 16
        assert default_lag(28) == 3      # 27 = 3^3

    def test_minimum_n(self):
        with pytest.raises(InsufficientDataError):
            default_lag(9)


class TestAdfTest:
    def test_linear_ramp_is_singular(self):
        with pytest.raises(SingularDesignError):
            adf_test(np.arange(1.0, 101.0), model="drift_trend")

    def test_scale_invariance(self):
        x = generate(GeneratorSpec(kind="iid_gaussian", n=400, seed=11))
        a = adf_test(x, lags=3, model="drift")
        b = adf_test(1234.5 * x, lags=3, model="drift")
        assert b.tau == pytest.approx(a.tau, abs=1e-8)

    def test_insufficient_length(self):
        with pytest.raises(InsufficientDataError):
            adf_test(np.arange(12.0) ** 0.5, lags=5, model="drift")

    def test_iid_returns_strongly_stationary(self):
        x = generate(GeneratorSpec(kind="iid_gaussian", n=5000, seed=77))
        result = adf_test(x)
        assert result.tau < -10.0
        assert result.p_value == 0.01
        assert result.lags == default_lag(5000)

    def test_n_obs_accounts_for_lags(self):
        x = generate(GeneratorSpec(kind="iid_gaussian", n=300, seed=5))
        result = adf_test(x, lags=4, model="drift")
        assert result.n_obs == 300 - 1 - 4

    def test_target_recorded(self):
        x = generate(GeneratorSpec(kind="iid_gaussian", n=120, seed=6))
        assert adf_test(x, lags=1, target="log_prices").target == "log_prices"


class TestAdfPvalue:
    def test_clamp_floor_and_ceiling(self):
        for model in ("none", "drift", "drift_trend"):
            assert adf_pvalue(-30.0, model, 500) == 0.01
            assert adf_pvalue(5.0, model, 500) == 0.99

    def test_drift_five_percent_point(self):
        # classic tabulated 5% point for the constant-only variant at n=500
        assert adf_pvalue(-2.87, "drift", 500) == pytest.approx(0.05, abs=0.015)

    def test_monotone_in_tau(self):
        for model in ("none", "drift", "drift_trend"):
            taus = np.linspace(-6.0, 3.0, 100)
            ps = [adf_pvalue(float(t), model, 750) for t in taus]
            assert all(a <= b + 1e-15 for a, b in zip(ps, ps[1:]))

    def test_interpolates_between_sample_sizes(self):
        p_small = adf_pvalue(-2.87, "drift", 30)
        p_large = adf_pvalue(-2.87, "drift", 5000)
        assert p_small != p_large

    def test_surface_matches_package_monte_carlo(self):
        # the embedded tables came from a separate vectorized simulation with
        # a different RNG; re-derive selected quantiles through adf_test itself
        levels = [0.01, 0.05, 0.10]
        cases = [
            ("drift_trend", 100, 6000), ("drift_trend", 500, 6000), ("drift_trend", 2000, 3000),
            ("drift", 100, 6000), ("drift", 500, 6000), ("drift", 2000, 3000),
            ("none", 100, 6000), ("none", 500, 6000), ("none", 2000, 3000),
        ]
        from effitest.unitroot import _quantile_row

        for model, n_obs, trials in cases:
            simulated = tau_null_quantiles(model, n_obs, trials, seed=484850 + n_obs)
            row = _quantile_row(model, n_obs)
            embedded = [row[surface.P_LEVELS.index(p)] for p in levels]
            for sim, emb in zip(simulated, embedded):
                assert sim == pytest.approx(emb, abs=0.06), (model, n_obs)
