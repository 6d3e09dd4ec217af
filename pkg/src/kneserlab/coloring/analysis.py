"""Properness checks and star-shaped analysis of colorings."""

from __future__ import annotations

import numpy as np
from loguru import logger

from kneserlab.coloring.model import ClassInfo, Coloring, StarReport, ValidationResult, Violation
from kneserlab.core import mask_array, vertex_index


def _nodes_of(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(1, n + 1) if mask >> (i - 1) & 1)


def star_report(c: Coloring) -> StarReport:
    """Intersect every color class and record its central elements."""
    full = (1 << c.n) - 1
    meets = [full] * (c.m + 1)
    sizes = [0] * (c.m + 1)
    for mask, color in zip(vertex_index(c.n, c.k).masks, c.colors):
        meets[color] &= mask
        sizes[color] += 1
    classes = tuple(
        ClassInfo(color=color, size=sizes[color], centrals=_nodes_of(meets[color], c.n))
        for color in range(1, c.m + 1)
    )
    return StarReport(n=c.n, k=c.k, m=c.m, classes=classes)


def _first_disjoint_pair(ranks: list[int], masks: np.ndarray) -> tuple[int, int] | None:
    members = np.asarray(ranks)
    class_masks = masks[members]
    for pos in range(len(members) - 1):
        hits = np.flatnonzero((class_masks[pos + 1 :] & class_masks[pos]) == 0)
        if hits.size:
            return int(members[pos]), int(members[pos + 1 + hits[0]])
    return None


def validate(c: Coloring) -> ValidationResult:
    """Check that no two disjoint vertices share a color.

    Star-shaped classes are independent sets, so only the remaining classes
    are scanned. The reported witness is the least offending pair by rank,
    which is the first one met in edge order.
    """
    report = star_report(c)
    masks = mask_array(c.n, c.k)
    ranks_by_color = c.class_ranks()
    best: tuple[int, int] | None = None
    for color in report.non_star_colors:
        pair = _first_disjoint_pair(ranks_by_color[color], masks)
        if pair is not None and (best is None or pair < best):
            best = pair
    if best is None:
        return ValidationResult()
    vertices = vertex_index(c.n, c.k).vertices
    violation = Violation(s=vertices[best[0]], t=vertices[best[1]], color=c.colors[best[0]])
    logger.debug("coloring of ({},{}) is improper: {}", c.n, c.k, violation)
    return ValidationResult(violation=violation)


def is_proper(c: Coloring) -> bool:
    return validate(c).ok
