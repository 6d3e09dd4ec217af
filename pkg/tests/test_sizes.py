"""Tests for formula size measurements."""

import pytest

from kneserlab.translate import (
    GadgetVariant,
    fitted_exponent,
    kneser_formula_size,
    multi_round_sizes,
    size_report,
    threshold_sizes,
)


@pytest.mark.unit
class TestFittedExponent:
    """Test suite for log-log slopes."""

    def test_exact_power_law(self):
        """Test that n^3 has slope 3."""
        ns = [4, 8, 16, 32]
        assert fitted_exponent(ns, [n**3 for n in ns]) == pytest.approx(3.0)

    def test_single_point(self):
        """Test that one point has no slope."""
        assert fitted_exponent([4], [64]) is None


@pytest.mark.integration
class TestSizeReport:
    """Test suite for size reports."""

    def test_ef_report(self):
        """Test rows, CSV output and fitted exponents for k = 2."""
        report = size_report(2, [8, 6], GadgetVariant.EF, encoding="unary")
        assert [row.n for row in report.rows] == [6, 8]
        assert report.rows[0].kneser == kneser_formula_size(6, 2)
        assert report.rows[0].m == 3
        assert report.gadget_exponent is not None and report.gadget_exponent > 0
        csv_text = report.to_csv()
        assert csv_text.splitlines()[0].startswith("n,k,m,kneser,star_node")
        assert len(csv_text.splitlines()) == 3

    def test_frege_report(self):
        """Test that the batch variant reports positive sizes."""
        report = size_report(2, [8], "frege", encoding="carry_save")
        row = report.rows[0]
        assert row.gadgets == sum(
            getattr(row, key)
            for key in ("star_node", "star", "discard_color", "discard_node", "renum_node", "renum_color", "pprime")
        )
        assert report.kneser_exponent is None

    def test_threshold_sizes(self):
        """Test that the DAG never exceeds the tree."""
        tree, dag = threshold_sizes(12, 6, "unary")
        assert 0 < dag <= tree


@pytest.mark.integration
class TestMultiRound:
    """Test suite for chained rounds."""

    def test_extension_rounds(self):
        """Test that each round shrinks the instance by one node and color."""
        rounds = multi_round_sizes(8, 2, 3)
        assert [(r.n, r.m) for r in rounds] == [(8, 5), (7, 4), (6, 3)]

    def test_unwinding_grows_the_formula(self):
        """Test that substituting p' for extension variables makes later rounds larger."""
        extended = multi_round_sizes(7, 2, 2)
        unwound = multi_round_sizes(7, 2, 2, unwind=True)
        assert extended[0].pprime == unwound[0].pprime
        assert unwound[1].pprime > extended[1].pprime

    def test_stops_when_nothing_is_left(self):
        """Test that rounds stop once a round would leave no colors."""
        rounds = multi_round_sizes(5, 2, 10)
        assert [(r.n, r.m) for r in rounds] == [(5, 2)]
