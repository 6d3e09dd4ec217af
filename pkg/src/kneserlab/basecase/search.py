"""Exhaustive backtracking search for proper m-colorings of small Kneser graphs."""

from __future__ import annotations

import sys
import time
from enum import Enum

from loguru import logger
from pydantic import BaseModel, Field

from kneserlab.coloring import Coloring
from kneserlab.config import get_settings
from kneserlab.core import InstanceParams, adjacency
from kneserlab.exceptions import InvalidParametersError


class SearchOutcome(str, Enum):
    UNSATISFIABLE = "unsatisfiable"
    FOUND = "found"
    BUDGET_EXCEEDED = "budget_exceeded"


class SearchBudget(BaseModel):
    max_nodes: int = Field(ge=1)
    max_seconds: float = Field(gt=0)

    @classmethod
    def from_settings(cls) -> SearchBudget:
        search = get_settings().search
        return cls(max_nodes=search.max_nodes, max_seconds=search.max_seconds)


class SearchResult(BaseModel):
    n: int
    k: int
    m: int
    outcome: SearchOutcome
    coloring: Coloring | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0

    @property
    def satisfiable(self) -> bool | None:
        if self.outcome is SearchOutcome.BUDGET_EXCEEDED:
            return None
        return self.outcome is SearchOutcome.FOUND


class _BudgetExceeded(Exception):
    pass


class _Backtracker:
    """Forward-checking search.

    The next vertex is the one with the most uncolored neighbours, ties
    going to the lower colex rank.

    Domains are bitmasks over colors (bit c - 1 for color c). With symmetry
    breaking on, vertex 0 ({1..k}) is colored first and a fresh color is only
    ever the next unused one.
    """

    def __init__(self, n: int, k: int, m: int, budget: SearchBudget, symmetry_breaking: bool):
        self.m = m
        self.budget = budget
        self.symmetry_breaking = symmetry_breaking
        self.neighbours = adjacency(n, k)
        size = len(self.neighbours)
        self.colors = [0] * size
        self.domain = [(1 << m) - 1] * size
        self.unassigned = set(range(size))
        self.nodes = 0
        self.deadline = time.perf_counter() + budget.max_seconds

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetExceeded
        if self.nodes & 0x3FF == 0 and time.perf_counter() > self.deadline:
            raise _BudgetExceeded

    def select(self) -> int:
        """Next vertex to color among the unassigned ones."""
        best, best_key = -1, None
        for v in self.unassigned:
            degree = sum(1 for u in self.neighbours[v] if self.colors[u] == 0)
            key = (-degree, v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def _assign(self, v: int, color: int) -> list[tuple[int, int]] | None:
        bit = 1 << (color - 1)
        trail: list[tuple[int, int]] = []
        self.colors[v] = color
        self.unassigned.discard(v)
        for u in self.neighbours[v]:
            if self.colors[u] == 0 and self.domain[u] & bit:
                trail.append((u, self.domain[u]))
                self.domain[u] &= ~bit
                if self.domain[u] == 0:
                    self._undo(v, trail)
                    return None
        return trail

    def _undo(self, v: int, trail: list[tuple[int, int]]) -> None:
        for u, before in reversed(trail):
            self.domain[u] = before
        self.colors[v] = 0
        self.unassigned.add(v)

    def solve(self, max_used: int = 0) -> bool:
        if not self.unassigned:
            return True
        if self.symmetry_breaking:
            allowed = (1 << min(max_used + 1, self.m)) - 1
            v = 0 if max_used == 0 else self.select()
        else:
            allowed = (1 << self.m) - 1
            v = self.select()
        candidates = self.domain[v] & allowed
        for color in range(1, self.m + 1):
            if not candidates >> (color - 1) & 1:
                continue
            self._tick()
            trail = self._assign(v, color)
            if trail is None:
                continue
            if self.solve(max(max_used, color)):
                return True
            self._undo(v, trail)
        return False


def find_coloring(
    n: int,
    k: int,
    m: int,
    budget: SearchBudget | None = None,
    symmetry_breaking: bool | None = None,
) -> SearchResult:
    """Decide whether the (n, k)-Kneser graph has a proper m-coloring.

    The search is complete: ``UNSATISFIABLE`` means no coloring exists.
    Running out of nodes or time yields ``BUDGET_EXCEEDED`` instead.
    """
    InstanceParams(n=n, k=k, m=m).require_kneser()
    if m < 1:
        raise InvalidParametersError(f"need m >= 1, got m={m}")
    budget = budget or SearchBudget.from_settings()
    if symmetry_breaking is None:
        symmetry_breaking = get_settings().search.symmetry_breaking
    search = _Backtracker(n, k, m, budget, symmetry_breaking)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), len(search.colors) + 200))
    started = time.perf_counter()
    try:
        found = search.solve()
        outcome = SearchOutcome.FOUND if found else SearchOutcome.UNSATISFIABLE
    except _BudgetExceeded:
        found, outcome = False, SearchOutcome.BUDGET_EXCEEDED
    elapsed = time.perf_counter() - started
    coloring = Coloring(n=n, k=k, m=m, colors=tuple(search.colors)) if found else None
    logger.info(
        "search ({},{},{}): {} after {} nodes in {:.3f}s",
        n, k, m, outcome.value, search.nodes, elapsed,
    )
    return SearchResult(
        n=n, k=k, m=m, outcome=outcome, coloring=coloring,
        nodes_explored=search.nodes, elapsed=elapsed,
    )


class BaseCaseReport(BaseModel):
    k: int
    n_max: int
    results: list[SearchResult]

    @property
    def all_unsatisfiable(self) -> bool:
        return all(r.outcome is SearchOutcome.UNSATISFIABLE for r in self.results)

    @property
    def budget_exceeded(self) -> list[int]:
        return [r.n for r in self.results if r.outcome is SearchOutcome.BUDGET_EXCEEDED]

    @property
    def colorable(self) -> list[int]:
        return [r.n for r in self.results if r.outcome is SearchOutcome.FOUND]


def verify_base_cases(
    k: int,
    n_max: int,
    budget: SearchBudget | None = None,
    symmetry_breaking: bool | None = None,
) -> BaseCaseReport:
    """Search for (n - 2k + 1)-colorings for every 2k <= n <= n_max."""
    if k < 1 or n_max < 2 * k:
        raise InvalidParametersError(f"need k >= 1 and n_max >= 2k, got k={k}, n_max={n_max}")
    results = [
        find_coloring(n, k, n - 2 * k + 1, budget=budget, symmetry_breaking=symmetry_breaking)
        for n in range(2 * k, n_max + 1)
    ]
    return BaseCaseReport(k=k, n_max=n_max, results=results)
