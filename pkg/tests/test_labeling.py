"""Tests for antipodal maps and the map induced by a coloring."""

import pytest

from kneserlab.coloring import c1_coloring, ck1_coloring
from kneserlab.exceptions import CapExceededError, ColoringFormatError, InvalidParametersError
from kneserlab.tucker import (
    AntipodalMap,
    Flavor,
    antipodal_map_count,
    ball_elements,
    iter_antipodal_maps,
    lambda_from_coloring,
    orbit_index,
    random_antipodal_map,
    signed_labels,
)


@pytest.mark.unit
class TestOrbits:
    """Test suite for orbit bookkeeping."""

    def test_orbit_counts(self):
        """Test that truncated orbits pair up and the full origin is alone."""
        assert len(orbit_index(4, 2)) == 9
        assert len(orbit_index(3, 1, Flavor.FULL)) == 14

    def test_representative_is_the_smaller_member(self):
        """Test that (A, B) maps to sign +1 exactly for the representative."""
        index = orbit_index(4, 2)
        for orbit, (a, b) in enumerate(index.reps):
            assert (a, b) <= (b, a)
            assert index.lookup[(a, b)] == (orbit, 1)
            assert index.lookup[(b, a)] == (orbit, -1)


@pytest.mark.unit
class TestAntipodalMap:
    """Test suite for antipodal maps."""

    @pytest.mark.parametrize("seed", [0, 7, 2**63])
    def test_random_map_is_antipodal(self, seed):
        """Test lambda(B, A) = -lambda(A, B) with magnitudes in [2k, n]."""
        lam = random_antipodal_map(5, 2, seed)
        for pair, label in lam.items():
            assert lam(pair.swapped()) == -label
            assert 4 <= abs(label) <= 5
        assert not lam.widened

    def test_random_map_is_reproducible(self):
        """Test that the seed alone determines the map."""
        assert random_antipodal_map(5, 2, 11) == random_antipodal_map(5, 2, 11)

    def test_label_range_is_enforced(self):
        """Test that labels outside +-[min_magnitude, n] are rejected."""
        with pytest.raises(ValueError):
            AntipodalMap(n=4, k=2, labels=(3,) * 9, min_magnitude=4)
        with pytest.raises(ValueError):
            AntipodalMap(n=4, k=2, labels=(4,) * 8, min_magnitude=4)

    def test_full_origin_label(self):
        """Test that a full-ball map must label the origin 1."""
        labels = [2] * len(orbit_index(2, 1, Flavor.FULL))
        with pytest.raises(ValueError):
            AntipodalMap(n=2, k=1, flavor=Flavor.FULL, labels=tuple(labels), min_magnitude=2)

    def test_json_round_trip(self):
        """Test the map document format."""
        lam = random_antipodal_map(4, 2, 3)
        assert AntipodalMap.from_json(lam.to_json()) == lam

    def test_malformed_json(self):
        """Test that broken documents raise ColoringFormatError."""
        with pytest.raises(ColoringFormatError):
            AntipodalMap.from_json('{"n": 4}')

    def test_enumeration(self):
        """Test exhaustive enumeration and its cap."""
        assert signed_labels(4, 2) == [4, -4]
        assert antipodal_map_count(4, 2) == 512
        assert sum(1 for _ in iter_antipodal_maps(4, 2)) == 512
        with pytest.raises(CapExceededError):
            next(iter_antipodal_maps(5, 2))


@pytest.mark.unit
class TestLambdaFromColoring:
    """Test suite for the map induced by a coloring."""

    def test_labels_follow_the_order(self, c1_6_2):
        """Test lambda(A, empty) = c(A) + n - m and antipodality."""
        lam = lambda_from_coloring(c1_6_2)
        assert lam.label((3, 4), ()) == 4
        assert lam.label((), (3, 4)) == -4
        assert lam.min_magnitude == 3
        assert lam.widened

    def test_covers_every_element(self, ck1_9_2):
        """Test that every ball element gets a label of the right magnitude."""
        lam = lambda_from_coloring(ck1_9_2)
        assert len(list(lam.items())) == len(ball_elements(9, 2))
        assert all(lam.min_magnitude <= abs(label) <= 9 for _, label in lam.items())

    def test_unwidened_for_n_minus_2k_plus_1_colors(self, monochromatic_4_2):
        """Test that n - 2k + 1 colors give labels in [2k, n]."""
        lam = lambda_from_coloring(monochromatic_4_2)
        assert lam.min_magnitude == 4
        assert not lam.widened

    def test_too_many_colors(self):
        """Test that m >= n leaves no positive labels."""
        c = c1_coloring(4, 2).with_colors(4)
        with pytest.raises(InvalidParametersError):
            lambda_from_coloring(c)

    def test_larger_instance(self):
        """Test that ck1 for k = 3 induces a map on the truncated ball."""
        lam = lambda_from_coloring(ck1_coloring(12, 3))
        assert lam.n == 12 and lam.k == 3
        assert isinstance(lam, AntipodalMap)
