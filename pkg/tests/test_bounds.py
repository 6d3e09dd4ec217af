"""Tests for the exact class-size bounds."""

from fractions import Fraction

import pytest

from kneserlab.coloring import (
    c1_coloring,
    ck1_coloring,
    eq1_holds,
    greedy_random_coloring,
    is_proper,
    min_star_lower_bound,
    n_beta,
    n_upper,
    non_star_bound,
    parse_beta,
    star_class_bound,
    star_report,
)
from kneserlab.core import InstanceParams
from kneserlab.exceptions import InvalidParametersError


@pytest.mark.unit
class TestClassBounds:
    """Test suite for class-size bounds."""

    def test_class_bounds(self):
        """Test k^2 C(n-2, k-2) and C(n-1, k-1)."""
        assert non_star_bound(10, 2) == 4
        assert non_star_bound(10, 3) == 72
        assert star_class_bound(10, 3) == 36

    def test_counting_inequality(self):
        """Test where n - 2k + 1 non-star classes could cover every vertex."""
        assert eq1_holds(6, 3)
        assert eq1_holds(49, 3)
        assert not eq1_holds(50, 3)
        assert not eq1_holds(8, 2)

    def test_thresholds(self):
        """Test k^4 and k^3 (k - beta) / (1 - beta) as exact rationals."""
        assert n_upper(3) == 81
        assert n_beta(2, Fraction(1, 2)) == 24
        assert n_beta(3, "1/3") == Fraction(27 * 8, 2)

    def test_min_star_lower_bound(self):
        """Test the least number of star-shaped classes of a proper coloring."""
        assert min_star_lower_bound(10, 2, 7) == 4
        assert min_star_lower_bound(40, 2, 2) == 2

    @pytest.mark.parametrize(
        "build",
        [
            lambda: c1_coloring(7, 2),
            lambda: c1_coloring(12, 2),
            lambda: c1_coloring(21, 3),
            lambda: ck1_coloring(10, 2),
            lambda: ck1_coloring(21, 3),
            lambda: greedy_random_coloring(InstanceParams.optimal(8, 2), seed=0),
            lambda: greedy_random_coloring(InstanceParams.optimal(10, 2), seed=7),
        ],
        ids=["c1-7-2", "c1-12-2", "c1-21-3", "ck1-10-2", "ck1-21-3", "greedy-8-2", "greedy-10-2"],
    )
    def test_proper_colorings_meet_the_star_bound(self, build):
        """Test that proper colorings have at least the guaranteed number of star-shaped classes."""
        coloring = build()
        assert is_proper(coloring)
        report = star_report(coloring)
        assert report.alpha >= min_star_lower_bound(coloring.n, coloring.k, coloring.m)

    def test_uninformative_bound(self):
        """Test that a non-positive gap is reported."""
        with pytest.raises(InvalidParametersError):
            min_star_lower_bound(5, 2, 2)

    @pytest.mark.parametrize("beta", ["0", "1", "3/2", "abc", "1/0"])
    def test_bad_beta(self, beta):
        """Test that beta must be a rational in (0, 1)."""
        with pytest.raises(InvalidParametersError):
            parse_beta(beta)

    def test_k_one_is_rejected(self):
        """Test that the bounds need k >= 2."""
        with pytest.raises(InvalidParametersError):
            n_upper(1)
