import numpy as np
import pytest

from loghankel.errors import NormalizationError, OrderMismatchError, SingularSeriesError
from loghankel.series import (
    TruncatedSeries,
    evaluate,
    reflect,
    rotate,
    series_derivative,
    series_integrate,
    series_linear,
    series_log,
    series_mul,
    series_reciprocal,
    series_transform,
)


def S(*c, order=None):
    return TruncatedSeries.from_coeffs(c, order)


def close(a, expected, tol=1e-14):
    np.testing.assert_allclose(a.coeffs, np.asarray(expected, dtype=complex), atol=tol, rtol=0)


def random_series(rng, order=8, a0=None):
    c = rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)
    if a0 is not None:
        c[0] = a0
    return TruncatedSeries(c)


class TestLinear:
    def test_cancellation(self):
        close(series_linear(S(1, 1), S(1, -1), 1, 1), [2, 0])

    def test_identity(self):
        close(series_linear(S(0, 1), S(0, 1), 1, -1), [0, 0])

    def test_subtraction(self):
        close(series_linear(S(1, 2, 3), S(0, 0, 3), 1, -1), [1, 2, 0])

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            series_linear(S(1, 1), S(1, 1, 1), 1, 1)


class TestMul:
    def test_difference_of_squares(self):
        close(series_mul(S(1, 1, order=3), S(1, -1, order=3)), [1, 0, -1, 0])

    def test_truncation_drops_degree_four(self):
        close(series_mul(S(1, 1, 1, 1), S(1, -1, order=3)), [1, 0, 0, 0])

    def test_expansion(self):
        close(series_mul(S(1, 2, order=2), S(1, 3, order=2)), [1, 5, 6])

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            series_mul(S(1, 1), S(1, 1, 1))

    def test_commutative_and_associative(self, rng):
        worst = 0.0
        for _ in range(100):
            a, b, c = (random_series(rng) for _ in range(3))
            worst = max(
                worst,
                np.max(np.abs((a * b).coeffs - (b * a).coeffs)),
                np.max(np.abs(((a * b) * c).coeffs - (a * (b * c)).coeffs)),
            )
        assert worst <= 1e-14 * 100  # coefficients here are O(10); 1e-14 relative


class TestReciprocal:
    def test_geometric(self):
        close(series_reciprocal(S(1, -1, order=4)), [1, 1, 1, 1, 1])

    def test_constant(self):
        close(series_reciprocal(S(2, order=2)), [0.5, 0, 0])

    def test_period_six(self):
        b = series_reciprocal(S(1, -1, 1, order=5))
        close(b, [1, 1, 0, -1, -1, 0])
        # oracle: multiply back
        close(series_mul(b, S(1, -1, 1, order=5)), [1, 0, 0, 0, 0, 0])

    def test_singular(self):
        with pytest.raises(SingularSeriesError):
            series_reciprocal(S(0, 1))

    def test_inverse_property(self, rng):
        for _ in range(100):
            a = random_series(rng)
            a = TruncatedSeries(np.concatenate(([a[0] / abs(a[0]) * rng.uniform(0.5, 2)], a.coeffs[1:])))
            prod = series_mul(a, series_reciprocal(a))
            close(prod, [1] + [0] * 8, tol=1e-12 * max(1, np.max(np.abs(series_reciprocal(a).coeffs))))


class TestLog:
    def test_log_one(self):
        close(series_log(S(1, order=4)), [0] * 5)

    def test_koebe(self):
        # -2 log(1 - z) = sum 2 z^n / n
        one_minus_z_sq = series_mul(S(1, -1, order=4), S(1, -1, order=4))
        close(series_log(series_reciprocal(one_minus_z_sq)), [0, 2, 1, 2 / 3, 1 / 2])

    def test_mercator(self):
        close(series_log(S(1, 1, order=3)), [0, 1, -0.5, 1 / 3])

    def test_requires_unit_constant(self):
        with pytest.raises(NormalizationError):
            series_log(S(2, 1))

    def test_against_mpmath(self, rng):
        mpmath = pytest.importorskip("mpmath")
        c = [1] + list(rng.normal(size=6) * 0.3)
        ours = series_log(S(*c))
        ref = mpmath.taylor(lambda z: mpmath.log(sum(ck * z**k for k, ck in enumerate(c))), 0, 6)
        close(ours, [complex(r) for r in ref], tol=1e-10)

    def test_log_of_product_is_sum(self, rng):
        for _ in range(100):
            a, b = random_series(rng, a0=1), random_series(rng, a0=1)
            lhs = series_log(series_mul(a, b))
            rhs = series_log(a) + series_log(b)
            scale = max(1.0, np.max(np.abs(lhs.coeffs)))
            assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) <= 1e-10 * scale


class TestIntegrate:
    def test_constant(self):
        close(series_integrate(S(1, order=0)), [0, 1])

    def test_odd_antiderivative(self):
        # (1 + t^2) / (1 - t^2)^2 through t^4, computed by series arithmetic
        w = series_mul(S(1, 0, -1, order=4), S(1, 0, -1, order=4))
        integrand = series_mul(S(1, 0, 1, order=4), series_reciprocal(w))
        close(integrand, [1, 0, 3, 0, 5])
        close(series_integrate(integrand), [0, 1, 0, 1, 0, 1])

    def test_monomials(self):
        close(series_integrate(S(1, 1)), [0, 1, 0.5])

    def test_derivative_inverts(self, rng):
        for _ in range(20):
            a = random_series(rng)
            # (c / n) * n can differ from c in the last ulp
            np.testing.assert_allclose(series_derivative(series_integrate(a)).coeffs, a.coeffs, rtol=2.3e-16, atol=0)


class TestTransform:
    def test_reflect(self):
        # a(-z) flips the odd coefficients
        close(reflect(S(0, 1, 1, 1)), [0, -1, 1, -1])
        assert evaluate(reflect(S(0, 1, 1, 1)), 0.5) == pytest.approx(evaluate(S(0, 1, 1, 1), -0.5))

    def test_rotate(self):
        close(series_transform(S(0, 1, 2), "rotate", theta=np.pi), [0, 1, -2])

    def test_evaluate(self):
        assert evaluate(S(1, 1, 1), 0.5) == pytest.approx(1.75, abs=1e-15)

    def test_rotate_requires_normalized(self):
        with pytest.raises(NormalizationError):
            rotate(S(1, 1), 0.3)

    def test_rotate_preserves_moduli(self, rng):
        a = TruncatedSeries(np.concatenate(([0], random_series(rng).coeffs[1:])))
        for theta in rng.uniform(0, 2 * np.pi, 16):
            np.testing.assert_allclose(np.abs(rotate(a, theta).coeffs), np.abs(a.coeffs), rtol=1e-15, atol=0)

    def test_immutable(self):
        a = S(1, 2)
        with pytest.raises(ValueError):
            a.coeffs[0] = 5
