import statistics

import mpmath
import numpy as np
import pytest

from effitest import DomainError, chi2_sf, normal_cdf, normal_icdf

mpmath.mp.dps = 40


def mp_normal_cdf(x: float) -> float:
    return float(mpmath.ncdf(x))


def mp_chi2_sf(x: float, df: int) -> float:
    # regularized upper incomplete gamma Q(df/2, x/2)
    return float(mpmath.gammainc(df / 2.0, mpmath.mpf(x) / 2, mpmath.inf, regularized=True))


def mp_normal_icdf(p: float) -> float:
    # evaluated at the exact binary64 value of p, so the comparison isolates
    # the algorithm's error from input quantization
    return float(mpmath.sqrt(2) * mpmath.erfinv(2 * mpmath.mpf(p) - 1))


class TestNormalCdf:
    def test_phi_zero(self):
        assert normal_cdf(0.0) == 0.5

    def test_phi_196(self):
        # frozen from the high-precision oracle: Phi(1.96) = 0.97500210485178...
        assert normal_cdf(1.96) == pytest.approx(0.9750021, abs=1e-6)
        assert normal_cdf(1.96) == pytest.approx(mp_normal_cdf(1.96), abs=1e-12)

    def test_symmetry(self):
        for x in np.linspace(-6, 6, 31):
            assert normal_cdf(-x) == pytest.approx(1.0 - normal_cdf(x), abs=1e-14)

    def test_accuracy_to_1e10_over_pm8(self):
        grid = np.linspace(-8, 8, 641)
        errs = [abs(normal_cdf(float(x)) - mp_normal_cdf(float(x))) for x in grid]
        assert max(errs) <= 1e-10

    def test_array_input(self):
        out = normal_cdf(np.array([0.0, 1.0]))
        assert out.shape == (2,)


class TestNormalIcdf:
    def test_matches_stdlib_as241(self):
        # stdlib statistics implements the same rational approximation
        nd = statistics.NormalDist()
        for p in np.concatenate([np.linspace(1e-6, 1 - 1e-6, 101), [1e-12, 1 - 1e-12]]):
            ours = normal_icdf(float(p))
            ref = nd.inv_cdf(float(p))
            assert ours == pytest.approx(ref, rel=1e-13, abs=1e-13)

    def test_accuracy_vs_oracle(self):
        # probabilities covering |x| <= 8 in both tails and the centre
        ps = np.concatenate([
            np.logspace(-15.2, -1, 40),
            np.linspace(0.01, 0.99, 41),
            1.0 - np.logspace(-15.2, -2, 30),
        ])
        for p in ps:
            assert abs(normal_icdf(float(p)) - mp_normal_icdf(float(p))) <= 1e-10

    def test_round_trip(self):
        # binary64 caps upper-tail round-trip accuracy near +5.6; the lower
        # tail keeps full relative precision all the way down
        for x in np.linspace(-8.0, 5.5, 136):
            assert normal_icdf(normal_cdf(float(x))) == pytest.approx(x, abs=1e-8)

    def test_domain_errors(self):
        for bad in (0.0, 1.0, -0.5, 1.5):
            with pytest.raises(DomainError):
                normal_icdf(bad)

    def test_vectorized(self):
        out = normal_icdf(np.array([0.025, 0.5, 0.975]))
        assert out[1] == 0.0
        assert out[2] == pytest.approx(1.959964, abs=1e-6)


class TestChi2Sf:
    def test_at_zero(self):
        for df in (1, 2, 5, 20):
            assert chi2_sf(0.0, df) == 1.0

    def test_df2_closed_form(self):
        for x in (0.1, 1.0, 3.7, 12.0):
            assert chi2_sf(x, 2) == pytest.approx(np.exp(-x / 2.0), rel=1e-12)

    def test_five_percent_point_df20(self):
        # quadrature oracle puts the value at 0.0500052...
        assert chi2_sf(31.410, 20) == pytest.approx(0.050, abs=1e-3)
        assert chi2_sf(31.410, 20) == pytest.approx(mp_chi2_sf(31.410, 20), abs=1e-12)

    def test_accuracy_to_1e9(self):
        for df in (1, 2, 3, 10, 50):
            for x in np.linspace(0.01, 5 * df, 40):
                assert chi2_sf(float(x), df) == pytest.approx(mp_chi2_sf(float(x), df), abs=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            chi2_sf(-1.0, 2)
        with pytest.raises(DomainError):
            chi2_sf(1.0, 0)
