"""Quadrature and root-finder behavior on known integrals and roots."""

import math

import pytest

from mirrorphase import (DomainError, QuadratureError, QuadratureSpec,
                         adaptive_simpson, find_root_bracketed, gauss_legendre)


class TestAdaptiveSimpson:
    def test_polynomial(self):
        value, err = adaptive_simpson(lambda x: x * x * x - 2.0 * x, 0.0, 2.0)
        assert value == pytest.approx(0.0, abs=1e-12)
        assert err <= 1e-10

    def test_sine(self):
        value, err = adaptive_simpson(math.sin, 0.0, math.pi)
        assert value == pytest.approx(2.0, abs=1e-10)
        assert err <= 1e-10

    def test_sharp_exponential(self):
        value, _ = adaptive_simpson(lambda x: math.exp(-50.0 * x), 0.0, 1.0)
        assert value == pytest.approx((1.0 - math.exp(-50.0)) / 50.0, rel=1e-9)

    def test_empty_interval(self):
        assert adaptive_simpson(math.sin, 1.0, 1.0) == (0.0, 0.0)

    def test_reversed_interval_rejected(self):
        with pytest.raises(DomainError):
            adaptive_simpson(math.sin, 1.0, 0.0)

    def test_error_estimate_is_honest(self):
        value, err = adaptive_simpson(lambda x: math.exp(-50.0 * x), 0.0, 1.0,
                                      tolerance=1e-8)
        exact = (1.0 - math.exp(-50.0)) / 50.0
        assert abs(value - exact) <= max(err, 1e-12)

    def test_depth_exhaustion_carries_best_estimate(self):
        with pytest.raises(QuadratureError) as info:
            adaptive_simpson(lambda x: math.exp(-2000.0 * x), 0.0, 1.0,
                             tolerance=1e-14, max_depth=3)
        assert info.value.best_estimate is not None
        assert info.value.error_estimate is not None


class TestGaussLegendre:
    def test_polynomial_exactness(self):
        value, _ = gauss_legendre(lambda x: 7.0 * x ** 6 + x, -1.0, 3.0, nodes=8)
        # antiderivative x^7 + x^2/2 evaluated at the bounds
        assert value == pytest.approx(2192.0, rel=1e-13)

    def test_sine(self):
        value, err = gauss_legendre(math.sin, 0.0, math.pi)
        assert value == pytest.approx(2.0, abs=1e-12)
        assert err < 1e-12

    def test_agrees_with_simpson(self):
        f = lambda x: 1.0 / (1.0 + x * x)
        simpson, _ = adaptive_simpson(f, 0.0, 4.0)
        gauss, _ = gauss_legendre(f, 0.0, 4.0)
        assert gauss == pytest.approx(simpson, abs=1e-10)


class TestRootFinder:
    def test_linear(self):
        assert find_root_bracketed(lambda x: 0.05 * x - 1.0) == pytest.approx(20.0, abs=1e-10)

    def test_cubic(self):
        assert find_root_bracketed(lambda x: x ** 3 - 8.0) == pytest.approx(2.0, abs=1e-10)

    def test_bracket_growth_reaches_large_roots(self):
        assert find_root_bracketed(lambda x: x - 1e6) == pytest.approx(1e6, abs=1e-6)

    def test_root_at_lower_edge(self):
        assert find_root_bracketed(lambda x: x) == 0.0

    def test_no_sign_change(self):
        with pytest.raises(DomainError):
            find_root_bracketed(lambda x: -1.0, max_growth=20)


class TestQuadratureSpec:
    def test_defaults(self):
        spec = QuadratureSpec()
        assert spec.method == "adaptive-simpson"
        assert spec.tolerance == 1e-10

    @pytest.mark.parametrize("kwargs", [
        dict(method="trapezoid"), dict(tolerance=0.0), dict(tolerance=-1e-10),
        dict(max_depth=0), dict(nodes=1),
    ])
    def test_rejected(self, kwargs):
        with pytest.raises(DomainError):
            QuadratureSpec(**kwargs)
