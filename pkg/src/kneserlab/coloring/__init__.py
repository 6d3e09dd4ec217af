"""
Kneser-graph colorings

- Coloring model with JSON round trip
- Properness validation and star-shaped analysis
- c1 / ck1 constructions and seeded random colorings
- Exact class-size bounds
"""

from kneserlab.coloring.analysis import is_proper, star_report, validate
from kneserlab.coloring.bounds import (
    eq1_holds,
    min_star_lower_bound,
    n_beta,
    n_upper,
    non_star_bound,
    parse_beta,
    star_class_bound,
)
from kneserlab.coloring.constructions import (
    c1_coloring,
    ck1_blocks,
    ck1_coloring,
    greedy_random_coloring,
)
from kneserlab.coloring.model import (
    ClassInfo,
    Coloring,
    StarReport,
    ValidationResult,
    Violation,
    load_coloring,
    save_coloring,
)

__all__ = [
    "ClassInfo",
    "Coloring",
    "StarReport",
    "ValidationResult",
    "Violation",
    "c1_coloring",
    "ck1_blocks",
    "ck1_coloring",
    "eq1_holds",
    "greedy_random_coloring",
    "is_proper",
    "load_coloring",
    "min_star_lower_bound",
    "n_beta",
    "n_upper",
    "non_star_bound",
    "parse_beta",
    "save_coloring",
    "star_class_bound",
    "star_report",
    "validate",
]
