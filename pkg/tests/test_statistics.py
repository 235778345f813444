import math

import numpy as np
import pytest

from logit_gof.logistic import WEIGHTED_VARIANCE, quantile_array
from logit_gof.statistics import (
    DegenerateSampleError,
    Sample,
    cell_coefficients,
    statistic_v,
    statistic_w,
)

from _oracles import cell_tables, oracle_raw_v, oracle_raw_w


class TestCoefficients:
    def test_b_first_cell_n4(self):
        # antiderivative 3t^2 - 2t^3 at t = 1/4
        table = cell_coefficients(4)
        assert table.b[0] == pytest.approx(0.15625, abs=1e-15)

    def test_a_first_cell_n2(self):
        table = cell_coefficients(2)
        assert table.a[0] == pytest.approx(0.25 - math.log(2.0), abs=1e-14)

    @pytest.mark.parametrize("n", [1, 2, 3, 7, 10, 100])
    def test_sums_and_symmetry(self, n):
        table = cell_coefficients(n)
        assert abs(table.a.sum()) <= 1e-12
        assert abs(table.b.sum() - 1.0) <= 1e-12
        assert np.all(table.b > 0.0)
        assert np.max(np.abs(table.a + table.a[::-1])) <= 1e-12
        assert np.max(np.abs(table.b - table.b[::-1])) <= 1e-12

    @pytest.mark.parametrize("n", [1, 2, 3, 7, 20, 50])
    def test_against_cell_quadrature(self, n):
        aw, bw, _ = cell_tables(n)
        table = cell_coefficients(n)
        assert np.max(np.abs(table.a - aw)) <= 1e-10
        assert np.max(np.abs(table.b - bw)) <= 1e-10

    @pytest.mark.parametrize("n", [5, 12, 30])
    def test_interior_cells_match_expanded_closed_form(self, n):
        # the expanded form k^2(3n-2k)/n^3 ln(k/(n-k)) - ... is only finite
        # for interior cells; boundary cells need the primitive's limits
        table = cell_coefficients(n)
        for k in range(2, n):
            expanded = (
                k**2 * (3 * n - 2 * k) / n**3 * math.log(k / (n - k))
                - (k - 1) ** 2 * (3 * n - 2 * k + 2) / n**3
                * math.log((k - 1) / (n - k + 1))
                + math.log((n - k) / (n - k + 1))
                + (1 - 2 * k) / n**2
                + 1.0 / n
            )
            b_expanded = 3 * (2 * k - 1) / n**2 + 2 * (-3 * k**2 + 3 * k - 1) / n**3
            assert table.a[k - 1] == pytest.approx(expanded, abs=1e-12)
            assert table.b[k - 1] == pytest.approx(b_expanded, abs=1e-14)

    def test_cache_returns_same_object(self):
        assert cell_coefficients(10) is cell_coefficients(10)

    def test_arrays_read_only(self):
        table = cell_coefficients(6)
        with pytest.raises(ValueError):
            table.a[0] = 0.0

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            cell_coefficients(0)


class TestSample:
    def test_from_values_sorts(self):
        s = Sample.from_values([3.0, 1.0, 2.0])
        assert s.n == 3
        assert list(s.sorted_values) == [1.0, 2.0, 3.0]
        assert sorted(s.values) == list(s.sorted_values)

    def test_needs_two_observations(self):
        with pytest.raises(ValueError):
            Sample.from_values([1.0])

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Sample.from_values([1.0, float("nan")])

    def test_ties_are_permitted(self):
        s = Sample.from_values([1.0, 1.0, 2.0, 3.0])
        assert statistic_w(s).statistic > 0.0


class TestStatisticW:
    def test_two_point_sample_hand_expansion(self):
        # n=2: b1 = b2 = 1/2, a2 = -a1 = ln 2 - 1/4
        res = statistic_w([-1.0, 1.0])
        expected = WEIGHTED_VARIANCE + 2.0 - 4.0 * math.log(2.0)
        assert res.raw == pytest.approx(expected, rel=1e-14)
        assert res.statistic == pytest.approx(2.0 * expected, rel=1e-14)
        assert res.kind == "w" and res.n == 2

    def test_location_invariance(self):
        rng = np.random.default_rng(71)
        x = rng.standard_normal(37)
        base = statistic_w(x).raw
        shifted = statistic_w(x + 17.3).raw
        assert shifted == pytest.approx(base, rel=1e-9)

    def test_near_null_plugin_sample(self):
        n = 200
        x = quantile_array((np.arange(n) + 0.5) / n)
        res = statistic_w(x)
        assert 0.0 <= res.raw < 0.01
        # direct numeric evaluation of the defining integrals; quadrature
        # round-off accumulates over 200 cells against a ~1e-4 statistic
        assert res.raw == pytest.approx(oracle_raw_w(x), rel=1e-4)

    def test_accepts_sample_object(self):
        x = [0.4, -1.0, 2.2, 0.0]
        assert statistic_w(Sample.from_values(x)) == statistic_w(x)

    def test_nonnegative_up_to_rounding(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            n = int(rng.integers(2, 40))
            x = rng.standard_normal(n) * rng.uniform(0.1, 10.0)
            assert statistic_w(x).raw >= -1e-10


class TestStatisticV:
    def test_affine_invariance(self):
        rng = np.random.default_rng(72)
        x = rng.standard_normal(25)
        base = statistic_v(x).raw
        transformed = statistic_v(3.7 * x - 12.0).raw
        assert transformed == pytest.approx(base, rel=1e-9)

    def test_near_null_plugin_sample(self):
        n = 200
        x = quantile_array((np.arange(n) + 0.5) / n)
        res = statistic_v(x)
        assert 0.0 <= res.raw < 0.01
        assert res.raw == pytest.approx(oracle_raw_v(x), rel=1e-4)

    def test_constant_sample_degenerate(self):
        with pytest.raises(DegenerateSampleError):
            statistic_v([5.0, 5.0, 5.0])

    def test_raw_in_unit_interval(self):
        rng = np.random.default_rng(73)
        for _ in range(200):
            n = int(rng.integers(2, 60))
            x = np.tan(np.pi * (rng.random(n) - 0.5))  # heavy tails
            raw = statistic_v(x).raw
            assert 0.0 <= raw <= 1.0


@pytest.mark.parametrize("seed", [101, 202])
def test_oracle_equivalence_small_samples(seed):
    """Closed-form statistics match quadrature of the integral definitions."""
    rng = np.random.default_rng(seed)
    for _ in range(10):
        n = int(rng.integers(2, 21))
        x = rng.standard_normal(n)
        if rng.random() < 0.5:
            x = np.tan(np.pi * (rng.random(n) - 0.5))
        assert statistic_w(x).raw == pytest.approx(oracle_raw_w(x), rel=1e-8)
        assert statistic_v(x).raw == pytest.approx(oracle_raw_v(x), rel=1e-8)
