"""Tests for lifting truncated maps to the full octahedral ball."""

import pytest

from kneserlab.exceptions import InvalidParametersError
from kneserlab.tucker import (
    AntipodalMap,
    LiftCase,
    ViolationKind,
    check_lift_soundness,
    lift_case,
    lift_lambda,
    orbit_index,
    project,
    random_antipodal_map,
)
from kneserlab.tucker.ball import Flavor


@pytest.mark.unit
class TestCases:
    """Test suite for the case split and projection."""

    def test_lift_case(self):
        """Test the three cases for k = 2."""
        assert lift_case((1,), (2,), 2) is LiftCase.SMALL
        assert lift_case((1, 2, 4), (3,), 2) is LiftCase.ONE_SIDED
        assert lift_case((1, 2), (3, 4), 2) is LiftCase.TWO_SIDED

    def test_project(self):
        """Test that large sides keep their k least nodes and small sides vanish."""
        assert project((1, 3, 4), (2,), 2) == ((1, 3), ())
        assert project((1, 5), (2, 3, 4), 2) == ((1, 5), (2, 3))
        with pytest.raises(InvalidParametersError):
            project((1,), (2,), 2)


@pytest.mark.unit
class TestLift:
    """Test suite for the lifted map."""

    def test_lifted_labels(self):
        """Test each case of the lift on (4, 2)."""
        lam = random_antipodal_map(4, 2, 9)
        lifted = lift_lambda(lam)
        assert lifted.flavor is Flavor.FULL
        assert lifted.label((), ()) == 1
        assert lifted.label((1,), ()) == 2
        assert lifted.label((), (1,)) == -2
        assert abs(lifted.label((1,), (2,))) == 3
        assert lifted.label((1, 2, 4), (3,)) == lam.label((1, 2), ())
        assert lifted.label((1, 2), (3, 4)) == lam.label((1, 2), (3, 4))

    def test_full_map_cannot_be_lifted(self):
        """Test that only truncated maps are lifted."""
        lifted = lift_lambda(random_antipodal_map(4, 2, 0))
        with pytest.raises(InvalidParametersError):
            lift_lambda(lifted)

    @pytest.mark.parametrize("seed", range(4))
    def test_soundness(self, seed):
        """Test that every complementary pair of the lift projects to a k-complementary pair."""
        lam = random_antipodal_map(4, 2, seed)
        report = check_lift_soundness(lam, lift_lambda(lam))
        assert report.ok, report.violations
        assert report.complementary_pairs >= 1
        assert report.projected_pairs == report.complementary_pairs

    def test_tampered_lift_is_flagged(self):
        """Test that a large element with a small label is reported."""
        lam = random_antipodal_map(4, 2, 1)
        lifted = lift_lambda(lam)
        orbit, _ = orbit_index(4, 2, Flavor.FULL).lookup[((1, 2), ())]
        labels = list(lifted.labels)
        labels[orbit] = 3
        tampered = AntipodalMap(
            n=4, k=2, flavor=Flavor.FULL, labels=tuple(labels), min_magnitude=2
        )
        report = check_lift_soundness(lam, tampered)
        assert not report.ok
        assert ViolationKind.MAGNITUDE in {v.kind for v in report.violations}
