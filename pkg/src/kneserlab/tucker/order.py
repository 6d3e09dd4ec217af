"""Total orders refining the precedence order."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations

from pydantic import BaseModel, ConfigDict

from kneserlab.core import NodeSet, colex_rank, vertex_index
from kneserlab.tucker.ball import Flavor, require_full, require_truncated


class TotalOrder(BaseModel):
    """An explicit list of node sets, least first."""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    flavor: Flavor
    sets: tuple[NodeSet, ...]

    @cached_property
    def positions(self) -> dict[NodeSet, int]:
        return {s: i for i, s in enumerate(self.sets)}

    def position(self, a: NodeSet) -> int:
        return self.positions[tuple(sorted(a))]

    def greater(self, a: NodeSet, b: NodeSet) -> bool:
        return self.position(a) > self.position(b)

    def __len__(self) -> int:
        return len(self.sets)


def canonical_total_order(n: int, k: int, flavor: Flavor = Flavor.TRUNCATED) -> TotalOrder:
    """Empty set first, then k-subsets in decreasing colex rank.

    A1 preceding A2 makes A2 pointwise no larger than A1, so reverse colex
    refines precedence. The full flavor sorts all subsets by size; the k band
    uses reverse colex and the other bands colex.
    """
    if flavor is Flavor.TRUNCATED:
        require_truncated(n, k)
        sets = ((), *reversed(vertex_index(n, k).vertices))
        return TotalOrder(n=n, k=k, flavor=flavor, sets=sets)
    require_full(n)
    bands: list[NodeSet] = []
    for size in range(n + 1):
        band = sorted(combinations(range(1, n + 1), size), key=colex_rank)
        bands.extend(reversed(band) if size == k else band)
    return TotalOrder(n=n, k=k, flavor=flavor, sets=tuple(bands))
