import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loghankel.errors import InputError
from loghankel.ykm import r_closed, y_closed, y_oracle

coef = st.floats(-3, 3, allow_nan=False)


class TestClosed:
    def test_zero(self):
        assert y_closed(0, 0, 0).value == 1

    def test_sum_branch(self):
        y = y_closed(1, 2, 0)
        assert y.value == 3
        assert y.branch == "AC>=0:|A|+|B|+|C|"

    def test_middle_branch(self):
        y = y_closed(-0.1, 0.1, 0.5)
        assert y.value == pytest.approx(1 + 0.1 + 0.01 / 6, abs=1e-15)
        assert y.branch == "AC<0:1+|A|"

    def test_non_finite(self):
        with pytest.raises(InputError):
            y_closed(np.nan, 0, 0)


class TestR:
    def test_first_case(self):
        assert r_closed(1, 1, -0.01) == pytest.approx(1.99)

    def test_second_case(self):
        assert r_closed(0.01, 1, -1) == pytest.approx(1.99)

    def test_sqrt_case(self):
        # B^2 / (4AC) = 0.25 / -4, so the root is sqrt(1.0625)
        assert r_closed(1, 0.5, -1) == pytest.approx(2 * np.sqrt(1.0625), abs=1e-15)
        assert y_oracle(1, 0.5, -1).value == pytest.approx(2 * np.sqrt(1.0625), abs=1e-6)


class TestOracle:
    def test_zero(self):
        o = y_oracle(0, 0, 0)
        assert o.value == 1 and o.witness == 0

    def test_boundary(self):
        o = y_oracle(1, 2, 0)
        assert o.value == pytest.approx(3, abs=1e-9)
        assert o.witness == pytest.approx(1, abs=1e-6)

    def test_interior(self):
        assert y_oracle(-0.1, 0.1, 0.5).value == pytest.approx(1 + 0.1 + 0.01 / 6, abs=1e-6)

    def test_grid_floor(self):
        with pytest.raises(InputError):
            y_oracle(0, 0, 0, radial=10)


class TestProperties:
    def test_agrees_with_oracle(self, rng):
        worst = 0.0
        for A, B, C in rng.uniform(-3, 3, (200, 3)):
            worst = max(worst, abs(y_closed(A, B, C).value - y_oracle(A, B, C, 360, 360).value))
        assert worst <= 1e-4

    def test_small_coefficients_hit_every_branch(self, rng):
        branches = set()
        for A, B, C in rng.uniform(-1, 1, (1500, 3)) * [0.3, 0.6, 1.0]:
            y = y_closed(A, B, C)
            branches.add(y.branch)
            assert abs(y.value - y_oracle(A, B, C, 128, 128).value) <= 1e-4
        assert {"AC>=0:interior", "AC<0:1-|A|", "AC<0:1+|A|"} <= branches

    def test_upper_bound(self, rng):
        for A, B, C in rng.uniform(-3, 3, (10, 3)):
            y = y_closed(A, B, C).value
            r = np.sqrt(rng.uniform(0, 1, 1000))
            z = r * np.exp(2j * np.pi * rng.uniform(0, 1, 1000))
            assert np.all(np.abs(A + B * z + C * z * z) + 1 - np.abs(z) ** 2 <= y + 1e-9)

    @settings(max_examples=300, deadline=None)
    @given(coef, coef, coef)
    def test_sign_symmetry(self, A, B, C):
        base = y_closed(A, B, C).value
        assert y_closed(A, -B, C).value == base
        assert y_closed(-A, B, -C).value == base
        assert base >= 1
