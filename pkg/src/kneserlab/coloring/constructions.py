"""Explicit (n - 2k + 2)-colorings and a seeded randomized generator."""

from __future__ import annotations

import numpy as np
from loguru import logger

from kneserlab.coloring.model import Coloring
from kneserlab.config import get_settings
from kneserlab.core import InstanceParams, NodeSet, Vertex, neighbour_arrays
from kneserlab.exceptions import InvalidParametersError
from kneserlab.rng import make_rng


def c1_coloring(n: int, k: int) -> Coloring:
    """Color S by max(S) - (2k - 2), or 1 when S lies inside [2k - 1].

    Proper with n - 2k + 2 colors; only color 1 is not star-shaped.
    """
    InstanceParams.optimal(n, k)
    low = 2 * k - 1

    def rule(v: Vertex) -> int:
        return 1 if v[-1] <= low else v[-1] - (2 * k - 2)

    return Coloring.from_rule(n, k, n - 2 * k + 2, rule)


def ck1_blocks(n: int, k: int) -> list[NodeSet]:
    """The partition of [n] used by :func:`ck1_coloring`.

    n - 3k + 3 singletons {n}, {n - 1}, ... come first, followed by the
    k - 1 triples {1, 2, 3}, {4, 5, 6}, ...
    """
    if k < 2 or n < 3 * k + 3:
        raise InvalidParametersError(f"ck1 coloring needs k >= 2 and n >= 3k+3, got ({n},{k})")
    singles = n - 3 * k + 3
    blocks: list[NodeSet] = [(n - i + 1,) for i in range(1, singles + 1)]
    blocks.extend((3 * j - 2, 3 * j - 1, 3 * j) for j in range(1, k))
    return blocks


def ck1_coloring(n: int, k: int) -> Coloring:
    """Color S by the least block holding a strict majority of its nodes.

    Proper with n - 2k + 2 colors, exactly k - 1 of them not star-shaped.
    """
    blocks = [set(block) for block in ck1_blocks(n, k)]

    def rule(v: Vertex) -> int:
        for color, block in enumerate(blocks, start=1):
            if 2 * len(block.intersection(v)) > len(block):
                return color
        raise AssertionError(f"vertex {v} meets no block in a majority")

    return Coloring.from_rule(n, k, len(blocks), rule)


def greedy_random_coloring(params: InstanceParams, seed: int, sweeps: int | None = None) -> Coloring:
    """Seeded random proper coloring obtained by recoloring sweeps over c1.

    Every sweep visits the vertices in a fresh random order and moves each
    one to a uniformly chosen color unused by its disjoint neighbours. The
    current color is always available, so properness holds after each move.
    """
    params.require_kneser()
    if params.m < params.n - 2 * params.k + 2:
        raise InvalidParametersError(
            f"greedy coloring needs m >= n-2k+2, got {params.label}"
        )
    sweeps = get_settings().greedy.sweeps if sweeps is None else sweeps
    rng = make_rng(seed)
    colors = np.array(c1_coloring(params.n, params.k).colors, dtype=np.int64)
    neighbours = neighbour_arrays(params.n, params.k)
    free = np.empty(params.m + 1, dtype=bool)
    for _ in range(sweeps):
        for r in rng.permutation(len(colors)):
            free[:] = True
            free[0] = False
            free[colors[neighbours[r]]] = False
            choices = np.flatnonzero(free)
            colors[r] = choices[rng.integers(len(choices))]
    logger.debug("greedy coloring {} seed={} sweeps={}", params.label, seed, sweeps)
    return Coloring(n=params.n, k=params.k, m=params.m, colors=tuple(int(c) for c in colors))
