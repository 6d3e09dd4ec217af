"""Exact combinatorics on k-subsets of [n].

Nodes are 1-based, ranks are 0-based. The colex rank of {s1 < ... < sk} is
sum_i C(s_i - 1, i). Binomials are exact Python integers throughout.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from kneserlab.core.types import InstanceParams, NodeSet, Vertex
from kneserlab.exceptions import (
    InvalidParametersError,
    MalformedVertexError,
    RankOutOfRangeError,
)


def binom(n: int, k: int) -> int:
    """C(n, k) exactly; 0 when k > n."""
    if n < 0 or k < 0:
        raise InvalidParametersError(f"binom needs non-negative arguments, got ({n},{k})")
    return comb(n, k)


def make_vertex(nodes: Iterable[int], n: int, k: int) -> Vertex:
    """Validate ``nodes`` as a vertex of the (n, k)-Kneser graph."""
    vertex = tuple(nodes)
    if len(vertex) != k:
        raise MalformedVertexError(f"vertex {vertex} has {len(vertex)} nodes, expected {k}")
    if any(b <= a for a, b in zip(vertex, vertex[1:])):
        raise MalformedVertexError(f"vertex {vertex} is not strictly increasing")
    if vertex and not (1 <= vertex[0] and vertex[-1] <= n):
        raise MalformedVertexError(f"vertex {vertex} has nodes outside [1,{n}]")
    return vertex


def colex_rank(nodes: Iterable[int]) -> int:
    """Colex rank of any finite set of positive nodes (size need not be k)."""
    return sum(comb(s - 1, i) for i, s in enumerate(sorted(nodes), start=1))


def rank(v: Vertex, n: int, k: int) -> int:
    """Colex rank of vertex ``v`` of the (n, k) instance."""
    return colex_rank(make_vertex(v, n, k))


def unrank(r: int, n: int, k: int) -> Vertex:
    """Inverse of :func:`rank`."""
    total = comb(n, k)
    if not 0 <= r < total:
        raise RankOutOfRangeError(f"rank {r} outside [0, {total}) for ({n},{k})")
    nodes: list[int] = []
    top = n
    for i in range(k, 0, -1):
        s = top
        while comb(s - 1, i) > r:
            s -= 1
        nodes.append(s)
        r -= comb(s - 1, i)
        top = s - 1
    return tuple(reversed(nodes))


def vertex_mask(v: Iterable[int]) -> int:
    """Bitmask with bit (i - 1) set for every node i."""
    mask = 0
    for node in v:
        mask |= 1 << (node - 1)
    return mask


def disjoint(s: Iterable[int], t: Iterable[int]) -> bool:
    return vertex_mask(s) & vertex_mask(t) == 0


def least_k(a: Iterable[int], k: int) -> NodeSet:
    """The k least elements of ``a``; the empty set maps to itself."""
    elems = sorted(set(a))
    if not elems:
        return ()
    if len(elems) < k:
        raise InvalidParametersError(f"cannot take the {k} least elements of {tuple(elems)}")
    return tuple(elems[:k])


@dataclass(frozen=True)
class VertexIndex:
    """All vertices of the (n, k) instance in colex order, with bitmasks."""

    n: int
    k: int
    vertices: tuple[Vertex, ...] = field(repr=False)
    masks: tuple[int, ...] = field(repr=False)
    ranks: dict[Vertex, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def rank(self, v: Vertex) -> int:
        try:
            return self.ranks[tuple(v)]
        except KeyError:
            make_vertex(v, self.n, self.k)
            raise

    def neighbours(self, r: int) -> list[int]:
        """Ranks of all vertices disjoint from vertex ``r``."""
        mask = self.masks[r]
        return [t for t, other in enumerate(self.masks) if mask & other == 0]


@lru_cache(maxsize=64)
def vertex_index(n: int, k: int) -> VertexIndex:
    if not 1 <= k <= n:
        raise InvalidParametersError(f"need 1 <= k <= n, got n={n}, k={k}")
    vertices = tuple(sorted(combinations(range(1, n + 1), k), key=lambda v: v[::-1]))
    masks = tuple(vertex_mask(v) for v in vertices)
    return VertexIndex(
        n=n,
        k=k,
        vertices=vertices,
        masks=masks,
        ranks={v: r for r, v in enumerate(vertices)},
    )


def iter_vertices(n: int, k: int) -> Iterator[Vertex]:
    yield from vertex_index(n, k).vertices


@lru_cache(maxsize=32)
def adjacency(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Neighbour ranks of every vertex, indexed by rank."""
    index = vertex_index(n, k)
    return tuple(tuple(index.neighbours(r)) for r in range(len(index)))


def kneser_edges(params: InstanceParams) -> Iterator[tuple[Vertex, Vertex]]:
    """Disjoint vertex pairs, each once, ordered lexicographically by rank."""
    if params.n < 2 * params.k:
        raise InvalidParametersError(f"kneser_edges needs n >= 2k, got {params.label}")
    index = vertex_index(params.n, params.k)
    masks = index.masks
    for r, mask in enumerate(masks):
        for t in range(r + 1, len(masks)):
            if mask & masks[t] == 0:
                yield index.vertices[r], index.vertices[t]


def kneser_edge_count(n: int, k: int) -> int:
    """C(n,k) * C(n-k,k) / 2."""
    return comb(n, k) * comb(n - k, k) // 2


@lru_cache(maxsize=32)
def mask_array(n: int, k: int) -> np.ndarray:
    """Vertex bitmasks as a numpy array indexed by rank.

    Uses int64 while every node fits in a signed 64-bit word and falls back
    to an object array of Python ints beyond that.
    """
    masks = vertex_index(n, k).masks
    dtype = np.int64 if n <= 62 else object
    return np.array(masks, dtype=dtype)


@lru_cache(maxsize=32)
def neighbour_arrays(n: int, k: int) -> tuple[np.ndarray, ...]:
    """Neighbour ranks of every vertex as numpy arrays, indexed by rank."""
    masks = mask_array(n, k)
    return tuple(np.flatnonzero((masks & mask) == 0) for mask in masks)
