"""Tests for the Kneser tautology, its CNF and DIMACS interchange."""

from itertools import product

import pytest

from kneserlab.coloring import c1_coloring, ck1_coloring, validate
from kneserlab.translate import (
    Cnf,
    coloring_assignment,
    decode_kneser_model,
    evaluate,
    kneser_cnf,
    kneser_formula,
    kneser_formula_size,
    kneser_var,
    solve_cnf,
    walk_size,
)
from kneserlab.exceptions import InvalidParametersError


@pytest.mark.unit
class TestKneserFormula:
    """Test suite for the Kneser formula."""

    @pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (7, 3)])
    def test_closed_form_size(self, n, k):
        """Test 3 + C(n,k)(1 + m) + 3 E m against the built formula."""
        formula = kneser_formula(n, k)
        assert formula.size == kneser_formula_size(n, k)
        assert walk_size(formula) == formula.size

    def test_known_size(self):
        """Test the symbol count for (4, 2) with one color."""
        assert kneser_formula_size(4, 2) == 24

    def test_tautology_for_4_2(self):
        """Test that every assignment satisfies the (4, 2) formula."""
        formula = kneser_formula(4, 2)
        names = [kneser_var(r, 1) for r in range(6)]
        for bits in product((False, True), repeat=6):
            assert evaluate(formula, dict(zip(names, bits)))

    def test_proper_coloring_falsifies_extra_colors(self):
        """Test that a proper coloring with n - 2k + 2 colors refutes the formula."""
        c = c1_coloring(5, 2)
        formula = kneser_formula(5, 2, m=c.m)
        assert not evaluate(formula, coloring_assignment(c))

    def test_parameters_are_checked(self):
        """Test that n >= 2k is required."""
        with pytest.raises(InvalidParametersError):
            kneser_formula(3, 2)


@pytest.mark.integration
class TestKneserCnf:
    """Test suite for the Kneser CNF and solving."""

    def test_layout(self):
        """Test variable numbering and clause count."""
        cnf = kneser_cnf(5, 2, 2)
        assert cnf.num_vars == 20
        assert cnf.num_clauses == 10 + 15 * 2
        assert cnf.clauses[0] == [1, 2]
        assert cnf.var(kneser_var(3, 2)) == 3 * 2 + 2

    def test_unsatisfiable_with_n_minus_2k_plus_1_colors(self):
        """Test that the solver refutes 2-colorings of the Petersen graph."""
        assert not solve_cnf(kneser_cnf(5, 2)).satisfiable

    def test_model_decodes_to_proper_coloring(self):
        """Test that a model with one more color is a proper coloring."""
        result = solve_cnf(kneser_cnf(6, 2, 4))
        assert result.satisfiable
        coloring = decode_kneser_model(6, 2, 4, result.model)
        assert validate(coloring).ok

    @pytest.mark.parametrize(
        "coloring",
        [c1_coloring(6, 2), c1_coloring(7, 3), ck1_coloring(9, 2)],
        ids=["c1-6-2", "c1-7-3", "ck1-9-2"],
    )
    def test_proper_coloring_satisfies_every_clause(self, coloring):
        """Test that the assignment induced by a proper coloring is a model."""
        cnf = kneser_cnf(coloring.n, coloring.k, coloring.m)
        true_ids = {cnf.var(name) for name, value in coloring_assignment(coloring).items() if value}
        for clause in cnf.clauses:
            assert any((lit > 0) == (abs(lit) in true_ids) for lit in clause), clause

    def test_dimacs_round_trip(self, temp_dir):
        """Test writing and reading DIMACS with the name table."""
        cnf = kneser_cnf(4, 2)
        text = cnf.to_dimacs()
        assert "p cnf 6 9" in text
        assert "c var 1 p[0,1]" in text
        back = Cnf.read(cnf.write(temp_dir / "k42.cnf"))
        assert back.clauses == cnf.clauses
        assert back.names == cnf.names
        assert back.num_vars == 6

    def test_decode_rejects_uncolored_vertex(self):
        """Test that a model must give every vertex a color."""
        with pytest.raises(InvalidParametersError):
            decode_kneser_model(4, 2, 1, [-1, -2, -3, -4, -5, -6])
