"""Brute-force enumeration oracle for tiny instances."""

from __future__ import annotations

from itertools import product

from kneserlab.coloring import Coloring
from kneserlab.core import InstanceParams, binom, kneser_edges, vertex_index
from kneserlab.exceptions import CapExceededError

ORACLE_CAP = 10**7


def naive_find_coloring(n: int, k: int, m: int, cap: int = ORACLE_CAP) -> Coloring | None:
    """First proper m-coloring in lexicographic order of color tuples, or None."""
    params = InstanceParams(n=n, k=k, m=m)
    params.require_kneser()
    states = m ** binom(n, k)
    if states > cap:
        raise CapExceededError("naive coloring oracle refused", requested=states, cap=cap)
    ranks = vertex_index(n, k).ranks
    edges = [(ranks[s], ranks[t]) for s, t in kneser_edges(params)]
    for colors in product(range(1, m + 1), repeat=binom(n, k)):
        if all(colors[r] != colors[t] for r, t in edges):
            return Coloring(n=n, k=k, m=m, colors=colors)
    return None
