"""Star-shaped class descent: single and batch reduction steps."""

from __future__ import annotations

from enum import Enum

from loguru import logger
from pydantic import BaseModel, Field

from kneserlab.coloring import Coloring, StarReport, star_report, validate
from kneserlab.config import get_settings
from kneserlab.core import vertex_index
from kneserlab.exceptions import (
    InsufficientStarClassesError,
    InvalidParametersError,
    KneserLabError,
    NoStarShapedClassError,
    ReductionError,
)


class DescentMode(str, Enum):
    SINGLE = "single"
    BATCH = "batch"


class DescentStep(BaseModel):
    """What one reduction step discarded and how it renumbered the rest."""

    mode: DescentMode
    n_before: int
    m_before: int
    discarded_colors: list[int]
    discarded_nodes: list[int]
    filler_nodes: list[int] = Field(default_factory=list)
    renumber_node: dict[int, int]
    renumber_color: dict[int, int]

    @property
    def n_after(self) -> int:
        return self.n_before - len(self.discarded_nodes)

    @property
    def m_after(self) -> int:
        return self.m_before - len(self.discarded_colors)

    @property
    def central_nodes(self) -> list[int]:
        """Discarded nodes that are least centrals of discarded colors."""
        return [i for i in self.discarded_nodes if i not in self.filler_nodes]


class ReductionTrace(BaseModel):
    """Steps of a full reduction and the (n, m) sizes it passed through.

    ``sizes[0]`` is the input size; ``sizes[t]`` is the size after step t.
    """

    k: int
    mode: DescentMode
    threshold: int
    sizes: list[tuple[int, int]]
    steps: list[DescentStep] = Field(default_factory=list)
    stopped: str = ""
    final: Coloring | None = None
    intermediates: list[Coloring] = Field(default_factory=list, exclude=True)

    @property
    def rounds(self) -> int:
        return len(self.steps)

    @property
    def node_counts(self) -> list[int]:
        return [n for n, _ in self.sizes]


def discard_count(n: int, k: int) -> int:
    """ceil(n / 2k), the number of colors a batch step discards."""
    return -(-n // (2 * k))


def base_threshold(k: int, limit: int | None = None) -> int:
    """Node count at which a full reduction stops."""
    if limit is None:
        limit = get_settings().descent.base_case_limit
    return max(2 * k, limit)


def _order_preserving(kept: list[int]) -> dict[int, int]:
    return {old: new for new, old in enumerate(kept, start=1)}


def restrict(
    c: Coloring, nodes: list[int], colors: list[int]
) -> tuple[Coloring, dict[int, int], dict[int, int]]:
    """Restrict ``c`` to vertices avoiding ``nodes`` and drop ``colors``.

    Surviving nodes and colors are renumbered order-preservingly. Every
    vertex avoiding ``nodes`` must carry a surviving color.
    """
    dropped_nodes, dropped_colors = set(nodes), set(colors)
    node_map = _order_preserving([i for i in range(1, c.n + 1) if i not in dropped_nodes])
    color_map = _order_preserving([j for j in range(1, c.m + 1) if j not in dropped_colors])
    n_new, m_new = len(node_map), len(color_map)
    if n_new < c.k:
        raise InvalidParametersError(f"restriction leaves {n_new} nodes, fewer than k={c.k}")
    if m_new < 1:
        raise InvalidParametersError("restriction discards every color")
    old_node = {new: old for old, new in node_map.items()}
    source = vertex_index(c.n, c.k)
    new_colors: list[int] = []
    for vertex in vertex_index(n_new, c.k).vertices:
        old_color = c.colors[source.ranks[tuple(old_node[i] for i in vertex)]]
        try:
            new_colors.append(color_map[old_color])
        except KeyError:
            raise KneserLabError(
                f"vertex {vertex} keeps discarded color {old_color} after restriction"
            ) from None
    restricted = Coloring(n=n_new, k=c.k, m=m_new, colors=tuple(new_colors))
    return restricted, node_map, color_map


def _require_proper(c: Coloring) -> None:
    verdict = validate(c)
    if not verdict.ok:
        raise InvalidParametersError(f"cannot descend from an improper coloring: {verdict.violation}")


def descend_once(c: Coloring, report: StarReport | None = None) -> tuple[Coloring, DescentStep]:
    """Discard the least star-shaped color and its least central element.

    Raises:
        InvalidParametersError: if ``c`` is not proper.
        NoStarShapedClassError: if no class is star-shaped.
    """
    _require_proper(c)
    report = report or star_report(c)
    star = report.star_colors
    if not star:
        raise NoStarShapedClassError(report)
    color = star[0]
    node = report.info(color).least_central
    assert node is not None
    restricted, node_map, color_map = restrict(c, [node], [color])
    step = DescentStep(
        mode=DescentMode.SINGLE,
        n_before=c.n,
        m_before=c.m,
        discarded_colors=[color],
        discarded_nodes=[node],
        renumber_node=node_map,
        renumber_color=color_map,
    )
    logger.debug("single step ({},{}): color {} node {}", c.n, c.m, color, node)
    return restricted, step


def descend_batch(c: Coloring, report: StarReport | None = None) -> tuple[Coloring, DescentStep]:
    """Discard ceil(n/2k) star-shaped colors together with as many nodes.

    The least centrals of the discarded colors go first; when they collide,
    the largest remaining nodes fill up the count.

    Raises:
        InvalidParametersError: if ``c`` is not proper.
        InsufficientStarClassesError: if fewer than ceil(n/2k) classes are star-shaped.
    """
    _require_proper(c)
    report = report or star_report(c)
    d = discard_count(c.n, c.k)
    star = report.star_colors
    if len(star) < d:
        raise InsufficientStarClassesError(report, d)
    colors = star[:d]
    centrals = sorted({report.info(color).centrals[0] for color in colors})
    fillers: list[int] = []
    for node in range(c.n, 0, -1):
        if len(centrals) + len(fillers) == d:
            break
        if node not in centrals:
            fillers.append(node)
    nodes = sorted(centrals + fillers)
    restricted, node_map, color_map = restrict(c, nodes, colors)
    step = DescentStep(
        mode=DescentMode.BATCH,
        n_before=c.n,
        m_before=c.m,
        discarded_colors=colors,
        discarded_nodes=nodes,
        filler_nodes=sorted(fillers),
        renumber_node=node_map,
        renumber_color=color_map,
    )
    logger.debug(
        "batch step ({},{}): d={} colors {} nodes {} fillers {}",
        c.n, c.m, d, colors, nodes, fillers,
    )
    return restricted, step


def reduce_fully(
    c: Coloring,
    mode: DescentMode | str = DescentMode.SINGLE,
    base_case_limit: int | None = None,
) -> ReductionTrace:
    """Apply descent steps until the base-case threshold or a failed precondition.

    Raises:
        InvalidParametersError: if the input coloring is not proper.
        ReductionError: if a step fails or produces an improper coloring.
    """
    mode = DescentMode(mode)
    verdict = validate(c)
    if not verdict.ok:
        raise InvalidParametersError(f"cannot reduce an improper coloring: {verdict.violation}")
    threshold = base_threshold(c.k, base_case_limit)
    trace = ReductionTrace(k=c.k, mode=mode, threshold=threshold, sizes=[(c.n, c.m)])
    current = c
    while True:
        if current.n <= threshold:
            trace.stopped = "threshold"
            break
        report = star_report(current)
        if mode is DescentMode.SINGLE:
            if report.alpha < 1:
                trace.stopped = "no_star_class"
                break
            if current.n - 1 < c.k or current.m < 2:
                trace.stopped = "too_small"
                break
            step_fn = descend_once
        else:
            d = discard_count(current.n, c.k)
            if current.n - d < c.k or current.m - d < 1:
                trace.stopped = "too_small"
                break
            if report.alpha < d:
                trace.stopped = "insufficient_star_classes"
                break
            step_fn = descend_batch
        try:
            current, step = step_fn(current, report)
        except KneserLabError as exc:
            trace.final = current
            raise ReductionError(f"descent step failed at n={current.n}", trace, exc) from exc
        trace.steps.append(step)
        trace.sizes.append((current.n, current.m))
        trace.intermediates.append(current)
        verdict = validate(current)
        if not verdict.ok:
            trace.final = current
            raise ReductionError(
                f"step produced an improper coloring of ({current.n},{current.k})", trace
            )
    trace.final = current
    logger.info(
        "reduced ({},{},{}) in {} {} steps to n={} ({})",
        c.n, c.k, c.m, trace.rounds, mode.value, current.n, trace.stopped,
    )
    return trace
