"""The Kneser tautology: every m-coloring has a monochromatic disjoint pair."""

from __future__ import annotations

from kneserlab.coloring import Coloring
from kneserlab.core import InstanceParams, binom, kneser_edge_count, kneser_edges, vertex_index
from kneserlab.translate.formula import And, Formula, Implies, Or, Var


def kneser_var(r: int, color: int) -> str:
    """Name of the variable "vertex of rank r has color ``color``"."""
    return f"p[{r},{color}]"


def kneser_instance(n: int, k: int, m: int | None) -> tuple[InstanceParams, int]:
    params = InstanceParams.kneser(n, k)
    return params, params.m if m is None else m


def kneser_formula(n: int, k: int, m: int | None = None) -> Formula:
    """(every vertex has a color) -> (some disjoint pair shares a color).

    m defaults to n - 2k + 1, the count for which this is a tautology.
    """
    params, m = kneser_instance(n, k, m)
    index = vertex_index(n, k)
    p = {
        (r, i): Var(kneser_var(r, i)) for r in range(len(index)) for i in range(1, m + 1)
    }
    antecedent = And(Or(p[r, i] for i in range(1, m + 1)) for r in range(len(index)))
    clashes = []
    for s, t in kneser_edges(params):
        rs, rt = index.ranks[s], index.ranks[t]
        clashes.extend(And((p[rs, i], p[rt, i])) for i in range(1, m + 1))
    return Implies(antecedent, Or(clashes))


def kneser_formula_size(n: int, k: int, m: int | None = None) -> int:
    """Symbol count of :func:`kneser_formula` without building it."""
    _, m = kneser_instance(n, k, m)
    return 3 + binom(n, k) * (1 + m) + 3 * kneser_edge_count(n, k) * m


def coloring_assignment(c: Coloring) -> dict[str, bool]:
    """Truth values of p[r, i] induced by a coloring."""
    return {
        kneser_var(r, i): color == i
        for r, color in enumerate(c.colors)
        for i in range(1, c.m + 1)
    }
