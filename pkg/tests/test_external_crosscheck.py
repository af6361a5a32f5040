"""Cross-checks against independent library implementations.

These complement the hand-rolled oracles: scipy and statsmodels implement
the same estimators through entirely different code paths, so agreement
here is strong evidence the formulas are wired correctly.
"""

import numpy as np
import pytest
import scipy.stats
from statsmodels.stats.diagnostic import acorr_ljungbox
from statsmodels.tsa.stattools import acf as sm_acf
from statsmodels.tsa.stattools import adfuller

import effitest
from effitest import GeneratorSpec, adf_test, describe, generate, jarque_bera, ljung_box


@pytest.fixture
def sample():
    return generate(GeneratorSpec(kind="ar1", n=800, phi=0.2, seed=314159))


class TestAgainstScipy:
    def test_jarque_bera_statistic(self, sample):
        ours = jarque_bera(describe(sample))
        theirs = scipy.stats.jarque_bera(sample)
        assert ours.statistic == pytest.approx(theirs.statistic, rel=1e-10)
        assert ours.p_value == pytest.approx(theirs.pvalue, rel=1e-8, abs=1e-12)

    def test_skewness_kurtosis(self, sample):
        stats = describe(sample)
        assert stats.skewness == pytest.approx(scipy.stats.skew(sample), rel=1e-10)
        assert stats.kurtosis == pytest.approx(
            scipy.stats.kurtosis(sample, fisher=False), rel=1e-10)

    def test_pearson(self, sample):
        other = generate(GeneratorSpec(kind="iid_gaussian", n=800, seed=13))
        mixed = 0.4 * sample + other
        ours = effitest.pearson(sample, mixed)
        theirs = scipy.stats.pearsonr(sample, mixed).statistic
        assert ours == pytest.approx(theirs, abs=1e-12)


class TestAgainstStatsmodels:
    def test_acf(self, sample):
        ours = effitest.acf(sample, max_lag=20).rho
        theirs = sm_acf(sample, nlags=20, fft=False)[1:]
        assert np.allclose(ours, theirs, atol=1e-12)

    def test_ljung_box(self, sample):
        result = effitest.acf(sample, max_lag=10)
        ours = ljung_box(result, sample.size, 10)
        table = acorr_ljungbox(sample, lags=[10])
        assert ours.statistic == pytest.approx(float(table["lb_stat"].iloc[0]), rel=1e-9)
        assert ours.p_value == pytest.approx(float(table["lb_pvalue"].iloc[0]), abs=1e-9)

    def test_adf_tau_all_models(self, sample):
        levels = np.cumsum(sample)
        for model, regression in (("none", "n"), ("drift", "c"), ("drift_trend", "ct")):
            ours = adf_test(levels, lags=6, model=model)
            theirs = adfuller(levels, maxlag=6, regression=regression, autolag=None)
            assert ours.tau == pytest.approx(theirs[0], abs=1e-8), model
            assert ours.n_obs == theirs[3]
