import numpy as np
import pytest

from effitest import (
    ConfigurationError,
    GeneratorSpec,
    InvalidInputError,
    generate,
    size_power,
    splitmix64,
)
from effitest.simulate import AR1_BURN_IN, _standard_normals

from conftest import exact_binomial_halfwidth

MASK = (1 << 64) - 1


def splitmix64_reference(seed, n, start=0):
    """Independent pure-integer implementation of the documented stream."""
    out = []
    for i in range(start + 1, start + n + 1):
        z = (seed + i * 0x9E3779B97F4A7C15) & MASK
        z = ((z ^ (z >> 30)) * 0xBF58476D1F4E5757) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        out.append(z ^ (z >> 31))
    return out


class TestSplitMix64:
    def test_matches_pure_python_reference(self):
        for seed in (0, 1, 42, 2**63 + 17, MASK):
            ours = splitmix64(seed, 8).tolist()
            assert ours == splitmix64_reference(seed, 8)

    def test_frozen_golden_values_seed_42(self):
        # pinned so any change to the stream is caught immediately
        assert splitmix64(42, 3).tolist() == [
            5600398825569717118, 1052879886805029387, 13768935143385899724]

    def test_start_offset_is_contiguous(self):
        assert splitmix64(7, 10).tolist()[4:] == splitmix64(7, 6, start=4).tolist()


class TestGenerate:
    def test_deterministic(self):
        spec = GeneratorSpec(kind="random_walk", n=100, drift=0.1, seed=99)
        assert np.array_equal(generate(spec), generate(spec))

    def test_noiseless_drift_limit(self):
        spec = GeneratorSpec(kind="random_walk", n=50, drift=1.0, sigma=1e-12, seed=1)
        x = generate(spec)
        assert np.max(np.abs(x - np.arange(1.0, 51.0))) <= 1e-9

    def test_iid_gaussian_moments(self):
        x = generate(GeneratorSpec(kind="iid_gaussian", n=100_000, seed=12345))
        assert abs(float(np.mean(x))) <= 0.02
        assert 0.99 <= float(np.std(x)) <= 1.01

    def test_normals_match_as241_of_uniforms(self):
        # the documented transform: top 53 bits + 0.5, scaled, through the icdf
        from effitest import normal_icdf

        bits = splitmix64(5, 4) >> np.uint64(11)
        u = (bits.astype(float) + 0.5) * 2.0 ** -53
        assert np.allclose(_standard_normals(5, 4), normal_icdf(u), atol=0)

    def test_ar1_variance_near_theory(self):
        phi = 0.6
        x = generate(GeneratorSpec(kind="ar1", n=200_000, phi=phi, seed=8))
        assert float(np.var(x)) == pytest.approx(1.0 / (1.0 - phi * phi), rel=0.03)

    def test_ar1_consumes_burn_in(self):
        spec = GeneratorSpec(kind="ar1", n=50, phi=0.5, seed=3)
        x = generate(spec)
        assert x.shape == (50,)
        raw = _standard_normals(3, 50 + AR1_BURN_IN)
        prev = 0.0
        for e in raw[:AR1_BURN_IN + 1]:
            prev = 0.5 * prev + e
        assert x[0] == pytest.approx(prev)

    def test_drift_is_mean_for_iid(self):
        x = generate(GeneratorSpec(kind="iid_gaussian", n=50_000, drift=2.5, seed=4))
        assert float(np.mean(x)) == pytest.approx(2.5, abs=0.02)

    def test_validation(self):
        with pytest.raises(ConfigurationError):
            GeneratorSpec(kind="garch", n=100)
        with pytest.raises(InvalidInputError):
            GeneratorSpec(kind="ar1", n=100, phi=1.0)
        with pytest.raises(InvalidInputError):
            GeneratorSpec(kind="iid_gaussian", n=100, sigma=0.0)
        with pytest.raises(InvalidInputError):
            GeneratorSpec(kind="iid_gaussian", n=5)


class TestSizePower:
    def test_unknown_test_identifier(self):
        spec = GeneratorSpec(kind="iid_gaussian", n=500, seed=1)
        with pytest.raises(ConfigurationError, match="unknown test"):
            size_power("variance_ratio", spec, 200)

    def test_minimum_trials(self):
        spec = GeneratorSpec(kind="iid_gaussian", n=500, seed=1)
        with pytest.raises(InvalidInputError):
            size_power("runs_test", spec, 50)

    def test_ci_halfwidth_formula_and_exact_interval(self):
        spec = GeneratorSpec(kind="iid_gaussian", n=500, seed=21)
        result = size_power("runs_test", spec, 2000)
        r = result.rejection_rate
        assert result.ci_halfwidth == pytest.approx(1.96 * np.sqrt(r * (1 - r) / 2000))
        exact = exact_binomial_halfwidth(int(round(r * 2000)), 2000)
        assert abs(result.ci_halfwidth - exact) <= 0.01

    def test_reproducible_and_order_independent(self):
        from dataclasses import replace

        from effitest.randomness import runs_test

        spec = GeneratorSpec(kind="iid_gaussian", n=200, seed=77)
        result = size_power("runs_test", spec, 150, alpha=0.05)
        seeds = splitmix64(77, 150).tolist()
        rejected = 0
        for s in reversed(seeds):
            p = runs_test(generate(replace(spec, seed=s))).p_value
            rejected += p < 0.05
        assert result.rejection_rate == rejected / 150
