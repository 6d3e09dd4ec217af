"""
Core combinatorics

- Binomials and colex ranking
- Vertex enumeration with bitmasks
- Kneser-graph adjacency
"""

from kneserlab.core.combinatorics import (
    VertexIndex,
    adjacency,
    binom,
    colex_rank,
    disjoint,
    iter_vertices,
    kneser_edge_count,
    kneser_edges,
    least_k,
    make_vertex,
    mask_array,
    neighbour_arrays,
    rank,
    unrank,
    vertex_index,
    vertex_mask,
)
from kneserlab.core.types import InstanceParams, NodeSet, Vertex

__all__ = [
    "InstanceParams",
    "NodeSet",
    "Vertex",
    "VertexIndex",
    "adjacency",
    "binom",
    "colex_rank",
    "disjoint",
    "iter_vertices",
    "kneser_edge_count",
    "kneser_edges",
    "least_k",
    "make_vertex",
    "mask_array",
    "neighbour_arrays",
    "rank",
    "unrank",
    "vertex_index",
    "vertex_mask",
]
