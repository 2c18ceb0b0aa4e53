"""Parameter validation, limit speeds, and the closed-form constants."""

from __future__ import annotations

import math

import numpy as np
import pytest

from swellfrac.model import (
    DEFAULT_PARAMS,
    DerivedConstants,
    PhysicalParams,
    diffusive_gain,
    diffusive_weight,
    limit_speeds,
    mode_frequency,
    require_valid,
    validate_params,
)


def params_with(**kw) -> PhysicalParams:
    base = dict(rho_z=1.0, rho_u=1.0, a1=2.0, a2=1.0, a3=2.0,
                gamma=1.0, alpha=0.5, kappa=1.0, length=math.pi)
    base.update(kw)
    return PhysicalParams(**base)


def random_valid_params(rng) -> PhysicalParams:
    a1 = rng.uniform(0.5, 5.0)
    a3 = rng.uniform(0.5, 5.0)
    # keep the tension matrix safely positive definite
    a2 = rng.uniform(0.05, 0.9) * math.sqrt(a1 * a3) * rng.choice([-1.0, 1.0])
    return PhysicalParams(
        rho_z=rng.uniform(0.2, 3.0), rho_u=rng.uniform(0.2, 3.0),
        a1=a1, a2=a2, a3=a3,
        gamma=rng.uniform(0.0, 2.0), alpha=rng.uniform(0.05, 0.95),
        kappa=rng.uniform(0.0, 3.0), length=rng.uniform(0.5, 6.0),
    )


class TestValidation:
    def test_running_example_is_valid(self):
        assert validate_params(DEFAULT_PARAMS).ok

    def test_zero_coupling_rejected(self):
        report = validate_params(params_with(a2=0.0))
        assert not report.ok
        assert any("a2 != 0" in msg for msg in report.failures)

    def test_indefinite_tension_rejected(self):
        report = validate_params(params_with(a1=1.0, a3=1.0, a2=1.5))
        assert not report.ok
        assert any("a1*a3 > a2^2" in msg for msg in report.failures)

    @pytest.mark.parametrize("field,value", [
        ("alpha", 0.0), ("alpha", 1.0), ("alpha", 1.5),
        ("rho_z", -1.0), ("rho_u", 0.0), ("a1", -0.1), ("a3", 0.0),
        ("kappa", -0.5), ("gamma", -0.1), ("length", 0.0),
    ])
    def test_each_invariant_enforced(self, field, value):
        assert not validate_params(params_with(**{field: value})).ok

    def test_gamma_zero_accepted(self):
        # conservative limit: allowed, it is the calibration case
        assert validate_params(params_with(gamma=0.0)).ok

    def test_require_valid_lists_failures(self):
        with pytest.raises(ValueError, match="a2 != 0"):
            require_valid(params_with(a2=0.0))


class TestDiffusiveWeight:
    def test_alpha_half_is_one(self):
        for y in [1e-6, 0.3, 4.0, 1e8]:
            assert diffusive_weight(y, 0.5) == 1.0

    def test_direct_power(self):
        assert diffusive_weight(4.0, 0.75) == pytest.approx(math.sqrt(2.0), rel=1e-15)

    def test_zero_argument_above_half(self):
        assert diffusive_weight(0.0, 0.75) == 0.0

    @pytest.mark.parametrize("alpha", [0.25, 0.5])
    def test_zero_argument_at_or_below_half_is_domain_error(self, alpha):
        with pytest.raises(ValueError, match="singular at y = 0"):
            diffusive_weight(0.0, alpha)

    def test_even_symmetry(self):
        y = np.array([-3.0, -0.5, 0.5, 3.0])
        for alpha in [0.2, 0.5, 0.8]:
            vals = diffusive_weight(y, alpha)
            assert np.array_equal(vals, vals[::-1])


class TestLimitSpeeds:
    def test_hand_solved_example(self):
        # sum of squared speeds 4, product of squares 3 -> squares {1, 3}
        slow, fast = limit_speeds(params_with())
        assert slow == pytest.approx(1.0, abs=1e-15)
        assert fast == pytest.approx(math.sqrt(3.0), rel=1e-15)

    def test_weak_coupling_decouples(self):
        slow, fast = limit_speeds(params_with(a1=1.0, a3=4.0, a2=1e-8))
        assert slow == pytest.approx(1.0, rel=1e-8)
        assert fast == pytest.approx(2.0, rel=1e-8)

    def test_vieta_relations(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            p = random_valid_params(rng)
            dc = DerivedConstants.from_params(p)
            slow, fast = dc.slow_speed, dc.fast_speed
            assert fast > slow > 0
            assert slow * fast == pytest.approx(math.sqrt(dc.speed_sq_prod), rel=1e-12)
            assert slow**2 + fast**2 == pytest.approx(dc.speed_sq_sum, rel=1e-12)

    def test_limit_roots_satisfy_limit_quartic(self):
        # lambda**4 + m*mu**2*lambda**2 + p*mu**4 vanishes at i*speed*mu
        rng = np.random.default_rng(7)
        for _ in range(30):
            p = random_valid_params(rng)
            dc = DerivedConstants.from_params(p)
            for speed in (dc.slow_speed, dc.fast_speed):
                for s in [0.1, 1.0, 37.0]:
                    lam = 1j * speed * s
                    g = lam**4 + dc.speed_sq_sum * s**2 * lam**2 + dc.speed_sq_prod * s**4
                    assert abs(g) / s**4 < 1e-12 * max(1.0, dc.speed_sq_prod)


class TestDerivedConstants:
    def test_gain_round_trip(self):
        for gamma in [0.0, 0.3, 1.0, 7.5]:
            for alpha in [0.1, 0.5, 0.9]:
                z = diffusive_gain(gamma, alpha)
                assert z * math.pi / math.sin(alpha * math.pi) == pytest.approx(gamma, abs=1e-15)

    def test_gain_positive_with_damping(self):
        assert diffusive_gain(0.5, 0.25) > 0

    def test_mode_frequencies_increasing(self):
        freqs = mode_frequency(np.arange(1, 50), 2.7)
        assert np.all(np.diff(freqs) > 0)
        assert freqs[0] == pytest.approx(math.pi / 2.7, rel=1e-15)

    def test_mode_index_must_be_positive(self):
        with pytest.raises(ValueError):
            mode_frequency(0, 1.0)
