"""Tests for single and batch descent steps and full reductions."""

import pytest

from kneserlab.coloring import Coloring, c1_coloring, ck1_coloring, greedy_random_coloring, validate
from kneserlab.core import InstanceParams
from kneserlab.descent import (
    DescentMode,
    base_threshold,
    descend_batch,
    descend_once,
    discard_count,
    reduce_fully,
    restrict,
)
from kneserlab.exceptions import (
    InsufficientStarClassesError,
    InvalidParametersError,
    KneserLabError,
    NoStarShapedClassError,
)


@pytest.mark.unit
class TestSingleStep:
    """Test suite for the single descent step."""

    def test_c1_descends_to_c1(self, c1_6_2):
        """Test that one step maps c1(n, k) onto c1(n - 1, k)."""
        reduced, step = descend_once(c1_6_2)
        assert step.discarded_colors == [2]
        assert step.discarded_nodes == [4]
        assert step.renumber_node == {1: 1, 2: 2, 3: 3, 5: 4, 6: 5}
        assert step.renumber_color == {1: 1, 3: 2, 4: 3}
        assert (step.n_after, step.m_after) == (5, 3)
        assert reduced == c1_coloring(5, 2)

    @pytest.mark.parametrize("seed", range(5))
    def test_step_keeps_properness(self, seed):
        """Test that steps on proper random colorings stay proper."""
        c = greedy_random_coloring(InstanceParams(n=8, k=2, m=6), seed)
        reduced, step = descend_once(c)
        assert validate(reduced).ok
        assert reduced.n == 7 and reduced.m == 5
        assert step.central_nodes == step.discarded_nodes

    def test_no_star_class(self, fano_7_2):
        """Test that a proper coloring without star-shaped classes is refused."""
        assert validate(fano_7_2).ok
        with pytest.raises(NoStarShapedClassError) as info:
            descend_once(fano_7_2)
        assert info.value.report.alpha == 0

    def test_improper_input_is_refused(self, monochromatic_4_2):
        """Test that a step checks properness before anything else."""
        with pytest.raises(InvalidParametersError, match="improper"):
            descend_once(monochromatic_4_2)

    def test_restrict_rejects_leftover_colors(self, c1_6_2):
        """Test that restriction fails when a discarded color survives."""
        with pytest.raises(KneserLabError):
            restrict(c1_6_2, [1], [4])


@pytest.mark.unit
class TestBatchStep:
    """Test suite for the batch descent step."""

    def test_discard_count(self):
        """Test ceil(n / 2k)."""
        assert discard_count(8, 2) == 2
        assert discard_count(9, 2) == 3
        assert discard_count(12, 3) == 2

    def test_c1_batch(self):
        """Test that a batch step maps c1(8, 2) onto c1(6, 2)."""
        reduced, step = descend_batch(c1_coloring(8, 2))
        assert step.discarded_colors == [2, 3]
        assert step.discarded_nodes == [4, 5]
        assert step.filler_nodes == []
        assert reduced == c1_coloring(6, 2)

    def test_ck1_batch(self, ck1_9_2):
        """Test that the singleton classes of ck1 are discarded first."""
        reduced, step = descend_batch(ck1_9_2)
        assert step.discarded_colors == [1, 2, 3]
        assert step.discarded_nodes == [7, 8, 9]
        assert validate(reduced).ok
        assert (reduced.n, reduced.m) == (6, 4)

    def test_insufficient_star_classes(self, fano_7_2):
        """Test that fewer than d star-shaped classes are refused."""
        with pytest.raises(InsufficientStarClassesError) as info:
            descend_batch(fano_7_2)
        assert info.value.required == 2

    def test_improper_input_is_refused(self, monochromatic_4_2):
        """Test that a batch step checks properness before anything else."""
        with pytest.raises(InvalidParametersError, match="improper"):
            descend_batch(monochromatic_4_2)

    def test_colliding_centrals_use_fillers(self):
        """Test that the largest remaining nodes fill up colliding centrals."""
        c1 = c1_coloring(8, 2)
        # colors 1 and 2 are empty, so both have least central 1
        shifted = Coloring(n=8, k=2, m=8, colors=tuple(color + 2 for color in c1.colors))
        reduced, step = descend_batch(shifted)
        assert step.discarded_colors == [1, 2]
        assert step.discarded_nodes == [1, 8]
        assert step.filler_nodes == [8]
        assert step.central_nodes == [1]
        assert validate(reduced).ok
        assert (reduced.n, reduced.m) == (6, 6)


@pytest.mark.integration
class TestReduceFully:
    """Test suite for full reductions."""

    def test_single_mode_trace(self):
        """Test one node and color per round down to 2k nodes."""
        trace = reduce_fully(c1_coloring(8, 2), DescentMode.SINGLE)
        assert trace.stopped == "threshold"
        assert trace.rounds == 4
        assert trace.sizes == [(8, 6), (7, 5), (6, 4), (5, 3), (4, 2)]
        assert trace.final == c1_coloring(4, 2)

    def test_batch_mode_trace(self):
        """Test ceil(n / 2k) nodes and colors per round."""
        trace = reduce_fully(c1_coloring(8, 2), "batch")
        assert trace.node_counts == [8, 6, 4]
        assert trace.final == c1_coloring(4, 2)

    def test_base_case_limit(self):
        """Test that a larger limit stops earlier."""
        trace = reduce_fully(c1_coloring(8, 2), DescentMode.SINGLE, base_case_limit=6)
        assert trace.threshold == 6
        assert trace.node_counts == [8, 7, 6]
        assert base_threshold(2, 3) == 4

    def test_improper_input(self, monochromatic_4_2):
        """Test that improper colorings cannot be reduced."""
        with pytest.raises(InvalidParametersError):
            reduce_fully(monochromatic_4_2)

    @pytest.mark.parametrize(
        "mode,reason", [("single", "no_star_class"), ("batch", "insufficient_star_classes")]
    )
    def test_stops_without_star_classes(self, fano_7_2, mode, reason):
        """Test that a failed precondition ends the reduction without error."""
        trace = reduce_fully(fano_7_2, mode)
        assert trace.stopped == reason
        assert trace.rounds == 0
        assert trace.final == fano_7_2

    def test_ck1_batch_stops_on_missing_star_classes(self):
        """Test that batch reduction of ck1 stops once only triples remain."""
        trace = reduce_fully(ck1_coloring(12, 3), DescentMode.BATCH)
        assert trace.stopped in {"threshold", "insufficient_star_classes", "too_small"}
        assert all(validate(c).ok for c in trace.intermediates)

    def test_trace_serialization_excludes_intermediates(self):
        """Test that the JSON trace carries steps but not every coloring."""
        trace = reduce_fully(c1_coloring(7, 2))
        data = trace.model_dump()
        assert "intermediates" not in data
        assert len(data["steps"]) == trace.rounds == 3
