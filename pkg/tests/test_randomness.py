import numpy as np
import pytest

from effitest import (
    GeneratorSpec,
    InsufficientDataError,
    InvalidInputError,
    ZeroVarianceError,
    acf,
    acf_from_rho,
    generate,
    ljung_box,
    paper_table_se,
    runs_test,
    runs_test_from_counts,
)

from conftest import double_loop_acf

# 20 daily autocorrelations of the published reference table, lags 1..20
TABLE_RHO = [0.0319, -0.0505, 0.0576, 0.083, 0.0057, -0.0555, 0.0184, 0.0256,
             -0.0224, -0.0206, 0.0203, 0.0405, 0.0637, -0.0263, 0.0635, 0.0225,
             -0.0055, 0.0139, -0.0484, 0.0215]
TABLE_T = [3.57, -5.65, 6.45, 9.3, 0.64, -6.21, 2.06, 2.87, -2.50, -2.31,
           2.27, 4.53, 7.13, -2.94, 7.10, 2.51, -0.61, 1.56, -5.41, 2.40]


class TestRunsTest:
    def test_strict_alternation(self):
        # 20 values, 10 above/10 below: mu = 11, sigma^2 = 200*180/(400*19)
        x = np.tile([1.0, -1.0], 10)
        result = runs_test(x, reference="zero")
        assert result.n_runs == 20
        sigma = np.sqrt(200.0 * 180.0 / (400.0 * 19.0))
        assert result.z == pytest.approx(9.0 / sigma)
        assert result.z == pytest.approx(4.13, abs=0.01)
        assert result.reject_at_5pct

    def test_two_blocks(self):
        x = np.concatenate([np.ones(10), -np.ones(10)])
        result = runs_test(x, reference="zero")
        assert result.n_runs == 2
        assert result.z < -3.0
        assert result.reject_at_5pct

    def test_from_published_counts(self):
        result = runs_test_from_counts(n_runs=2477, n_above=2488, n_below=2665)
        assert abs(result.z) == pytest.approx(2.70, abs=0.05)
        assert 0.005 <= result.p_value <= 0.009

    def test_equal_values_excluded_but_reported(self):
        x = np.array([1.0, 0.0, -1.0, 0.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0])
        result = runs_test(x, reference="zero")
        assert result.n_equal == 2
        assert result.n_above + result.n_below + result.n_equal == result.n
        assert result.n_above == 4
        assert result.n_below == 4

    def test_degenerate_classification(self):
        with pytest.raises(InvalidInputError, match="one side"):
            runs_test(np.full(20, 3.0), reference="zero")

    def test_mean_reference_uses_sample_mean(self):
        x = np.array([10.0, 11.0, 10.0, 11.0, 10.0, 11.0])
        result = runs_test(x, reference="mean")
        assert result.n_runs == 6

    def test_monotone_transform_invariance_zero_reference(self, rng):
        x = rng.normal(0, 1, 200)
        base = runs_test(x, reference="zero")
        for transform in (lambda v: 2.0 * v, lambda v: v ** 3):
            other = runs_test(transform(x), reference="zero")
            assert other.n_runs == base.n_runs
            assert other.z == pytest.approx(base.z, abs=1e-12)


class TestAcf:
    def test_ramp_lag_one(self):
        # numerator 4, denominator 10
        result = acf(np.array([1.0, 2.0, 3.0, 4.0, 5.0]), max_lag=1)
        assert result.rho[0] == pytest.approx(0.4)

    def test_matches_double_loop_oracle(self, rng):
        for _ in range(20):
            n = int(rng.integers(60, 2000))
            y = rng.normal(0, 1, n)
            ours = acf(y, max_lag=20).rho
            assert np.allclose(ours, double_loop_acf(y, 20), atol=1e-12)

    def test_lag_zero_is_one_by_construction(self):
        y = np.array([0.3, -1.2, 0.7, 2.2, -0.5, 0.9])
        d = y - y.mean()
        assert float(np.dot(d, d) / np.dot(d, d)) == 1.0

    def test_time_reversal_symmetry(self, rng):
        y = rng.normal(0, 1, 300)
        fwd = acf(y, max_lag=15).rho
        rev = acf(y[::-1].copy(), max_lag=15).rho
        assert np.allclose(fwd, rev, atol=1e-12)

    def test_white_noise_stays_inside_band(self):
        # with n=10000 the 20 coefficients sit within +-0.05 essentially always
        trials, all_inside = 300, 0
        for i in range(trials):
            y = generate(GeneratorSpec(kind="iid_gaussian", n=10000, seed=9000 + i))
            if np.all(np.abs(acf(y, max_lag=20).rho) < 0.05):
                all_inside += 1
        assert all_inside / trials >= 0.99

    def test_paper_table_mode_reproduces_t_values(self):
        result = acf_from_rho(TABLE_RHO, n=5153, mode="paper_table")
        assert result.se_paper_table == pytest.approx(0.008933, abs=1e-6)
        assert result.t_values[0] == pytest.approx(3.57, abs=0.01)
        assert result.t_values[1] == pytest.approx(-5.65, abs=0.01)
        assert np.max(np.abs(result.t_values - np.array(TABLE_T))) <= 0.01

    def test_se_modes_both_present(self, rng):
        y = rng.normal(0, 1, 500)
        result = acf(y, max_lag=20, mode="appendix")
        assert result.se_appendix == pytest.approx(1.0 / np.sqrt(500))
        assert result.se_paper_table == pytest.approx(paper_table_se(result.rho))
        assert np.allclose(result.t_values, result.rho / result.se_appendix)

    def test_constant_series(self):
        with pytest.raises(ZeroVarianceError):
            acf(np.full(50, 1.0), max_lag=5)

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            acf(np.arange(10.0), max_lag=10)


class TestLjungBox:
    def test_null_statistic(self):
        result = acf_from_rho(np.zeros(20), n=500)
        lb = ljung_box(result, 500, 20)
        assert lb.statistic == 0.0
        assert lb.p_value == 1.0

    def test_single_rho_example(self):
        # Q = 400*402*0.01/399 = 4.0301, p = chi2_sf(Q, 1) = 0.0447
        result = acf_from_rho([0.1], n=400)
        lb = ljung_box(result, 400, 1)
        assert lb.statistic == pytest.approx(4.030, abs=1e-3)
        assert lb.p_value == pytest.approx(0.0447, abs=2e-4)

    def test_mean_q_matches_chi_square_mean(self):
        # under the null E[Q] ~ h; 2000 seeded trials at n=10000, h=20
        trials = 2000
        total = 0.0
        for i in range(trials):
            y = generate(GeneratorSpec(kind="iid_gaussian", n=10000, seed=31000 + i))
            result = acf(y, max_lag=20)
            total += ljung_box(result, 10000, 20).statistic
        assert 18.5 <= total / trials <= 21.5

    def test_horizon_validation(self):
        result = acf_from_rho([0.1, 0.05], n=100)
        with pytest.raises(InvalidInputError):
            ljung_box(result, 100, 3)
        with pytest.raises(InvalidInputError):
            ljung_box(result, 100, 0)
