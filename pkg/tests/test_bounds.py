import math
from fractions import Fraction

import pytest
from numpy.testing import assert_allclose

import pastedlogic as pl
from pastedlogic import InvalidCycleLengthError


class TestCycleBounds:
    @pytest.mark.parametrize("n", [5, 7, 9, 11, 13, 15])
    def test_odd_cycle_values(self, n):
        b = pl.cycle_bounds(n)
        assert b.classical_bound == Fraction(n - 1, 2)
        closed_form = n * math.cos(math.pi / n) / (1 + math.cos(math.pi / n))
        assert abs(b.theta - closed_form) <= 1e-12
        assert float(b.classical_bound) < b.theta - 1e-9
        assert b.theta < n / 2 - 1e-9
        assert b.half_weight_value == Fraction(n, 2)
        assert b.odd

    def test_pentagon_theta_is_sqrt5(self):
        assert abs(pl.cycle_bounds(5).theta - math.sqrt(5.0)) <= 1e-12

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_even_cycles_have_no_gap(self, n):
        b = pl.cycle_bounds(n)
        assert b.classical_bound == Fraction(n, 2)
        assert not b.odd
        assert not b.theta_applicable

    def test_triangle_theta_not_applicable(self):
        b = pl.cycle_bounds(3)
        assert b.classical_bound == 1
        assert not b.theta_applicable

    def test_bad_length(self):
        with pytest.raises(InvalidCycleLengthError):
            pl.cycle_bounds(2)


class TestPathThresholds:
    def test_pentagon(self):
        r_classical, r_theta = pl.path_thresholds(5)
        assert r_classical == Fraction(1, 2)
        assert_allclose(r_theta, math.sqrt(5.0) - 2.0, atol=1e-12)

    def test_heptagon(self):
        r_classical, r_theta = pl.path_thresholds(7)
        assert r_classical == Fraction(1, 3)
        theta7 = 7 * math.cos(math.pi / 7) / (1 + math.cos(math.pi / 7))
        assert_allclose(r_theta, 7 / theta7 - 2, atol=1e-12)

    def test_even_cycle_never_crosses(self):
        r_classical, r_theta = pl.path_thresholds(4)
        assert r_classical == 0
        assert r_theta is None


class TestClassify:
    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_half_weight_beyond_theta_on_odd_cycles(self, n):
        structure = pl.cycle_logic(n)
        report = pl.classify_weight(structure, pl.half_weight(structure))
        assert report.label == "beyond-theta"
        assert report.beyond_theta
        assert not report.membership.classical
        assert report.cyclic_sum == Fraction(n, 2)

    def test_triangle_half_weight_nonclassical_without_theta(self, triangle):
        report = pl.classify_weight(triangle, pl.half_weight(triangle))
        assert report.label == "admissible-nonclassical"
        assert report.beyond_theta is None

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_half_weight_classical_on_even_cycles(self, n):
        structure = pl.cycle_logic(n)
        report = pl.classify_weight(structure, pl.half_weight(structure))
        assert report.label == "classical"
        assert report.beyond_theta is None

    def test_between_the_bounds(self, pentagon):
        report = pl.classify_weight(pentagon, pl.path_weight(pentagon, Fraction(3, 10)))
        assert report.label == "admissible-nonclassical"
        assert report.beyond_theta is False
        assert report.cyclic_sum == Fraction(50, 23)

    def test_just_past_theta(self, pentagon):
        report = pl.classify_weight(pentagon, pl.path_weight(pentagon, Fraction(1, 5)))
        assert report.label == "beyond-theta"
        assert report.cyclic_sum == Fraction(25, 11)

    def test_classical_uniform(self, pentagon):
        report = pl.classify_weight(pentagon, pl.path_weight(pentagon, 1))
        assert report.label == "classical"
        assert report.beyond_theta is False
        assert report.membership.coefficients is not None

    def test_not_admissible(self, pentagon):
        bad = pl.make_weight(pentagon, {a: Fraction(1, 2) for a in pentagon.atoms})
        report = pl.classify_weight(pentagon, bad)
        assert report.label == "not-admissible"
        assert report.membership is None
        assert report.cyclic_sum is None

    def test_non_cycle_structure_skips_bounds(self):
        chain = pl.build_event_structure(["a", "b", "c"], [["a", "b"], ["b", "c"]])
        w = pl.make_weight(
            chain, {"a": Fraction(1, 2), "b": Fraction(1, 2), "c": Fraction(1, 2)}
        )
        report = pl.classify_weight(chain, w)
        assert report.label == "classical"
        assert report.bounds is None
        assert report.cyclic_sum is None

    def test_json_round_trip_fields(self, pentagon):
        doc = pl.classify_weight(pentagon, pl.half_weight(pentagon)).to_json_dict()
        assert doc["label"] == "beyond-theta"
        assert doc["cyclic_sum"] == "5/2"
        assert doc["bounds"]["n"] == 5
        assert doc["membership"]["classical"] is False
