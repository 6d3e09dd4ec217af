"""
Propositional translations

- Formula DAGs with exact size accounting and evaluation
- Threshold (counting) formulas
- Kneser and truncated Tucker formulas and CNFs
- Descent-round gadget formulas
- Size measurements
"""

from kneserlab.translate.cnf import Cnf, SolveResult, decode_kneser_model, kneser_cnf, solve_cnf
from kneserlab.translate.counting import Counter, ThresholdMode, threshold_formula
from kneserlab.translate.formula import (
    FALSE,
    TRUE,
    And,
    Assignment,
    Const,
    Evaluator,
    Formula,
    Implies,
    Not,
    Or,
    Var,
    conj,
    dag_size,
    disj,
    evaluate,
    formula_to_sexpr,
    formula_variables,
    walk_size,
)
from kneserlab.translate.gadgets import DescentGadgets, GadgetVariant, default_source
from kneserlab.translate.kneser import (
    coloring_assignment,
    kneser_formula,
    kneser_formula_size,
    kneser_var,
)
from kneserlab.translate.sizes import (
    RoundSize,
    SizeReport,
    SizeRow,
    fitted_exponent,
    multi_round_sizes,
    size_report,
    threshold_sizes,
)
from kneserlab.translate.tucker import (
    map_assignment,
    tucker_cnf,
    tucker_formula,
    tucker_labels,
    tucker_var,
)

__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "Assignment",
    "Cnf",
    "Const",
    "Counter",
    "DescentGadgets",
    "Evaluator",
    "Formula",
    "GadgetVariant",
    "Implies",
    "Not",
    "Or",
    "RoundSize",
    "SizeReport",
    "SizeRow",
    "SolveResult",
    "ThresholdMode",
    "Var",
    "coloring_assignment",
    "conj",
    "dag_size",
    "decode_kneser_model",
    "default_source",
    "disj",
    "evaluate",
    "fitted_exponent",
    "formula_to_sexpr",
    "formula_variables",
    "kneser_cnf",
    "kneser_formula",
    "kneser_formula_size",
    "kneser_var",
    "map_assignment",
    "multi_round_sizes",
    "size_report",
    "solve_cnf",
    "threshold_formula",
    "threshold_sizes",
    "tucker_cnf",
    "tucker_formula",
    "tucker_labels",
    "tucker_var",
    "walk_size",
]
