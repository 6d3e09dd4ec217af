"""
Base-case verification

- Backtracking coloring search with budgets
- Brute-force oracle for cross-checks
"""

from kneserlab.basecase.oracle import ORACLE_CAP, naive_find_coloring
from kneserlab.basecase.search import (
    BaseCaseReport,
    SearchBudget,
    SearchOutcome,
    SearchResult,
    find_coloring,
    verify_base_cases,
)

__all__ = [
    "ORACLE_CAP",
    "BaseCaseReport",
    "SearchBudget",
    "SearchOutcome",
    "SearchResult",
    "find_coloring",
    "naive_find_coloring",
    "verify_base_cases",
]
