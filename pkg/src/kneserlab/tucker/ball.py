"""The octahedral ball, its k-truncation and the order on its components."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import NamedTuple

from kneserlab.config import get_settings
from kneserlab.core import NodeSet, binom, least_k, vertex_index, vertex_mask
from kneserlab.exceptions import CapExceededError, InvalidParametersError, MalformedVertexError


class Flavor(str, Enum):
    FULL = "full"
    TRUNCATED = "truncated"


class SignedPair(NamedTuple):
    """A ball element (A, B): two disjoint node sets."""

    a: NodeSet
    b: NodeSet
    flavor: Flavor = Flavor.TRUNCATED

    def swapped(self) -> SignedPair:
        return SignedPair(self.b, self.a, self.flavor)

    def __str__(self) -> str:
        def fmt(part: NodeSet) -> str:
            return "{" + ",".join(map(str, part)) + "}"

        return f"({fmt(self.a)},{fmt(self.b)})"


def require_truncated(n: int, k: int) -> None:
    if not n >= 2 * k > 1:
        raise InvalidParametersError(f"truncated ball needs n >= 2k > 1, got n={n}, k={k}")


def require_full(n: int, cap: int | None = None) -> None:
    cap = get_settings().tucker.full_ball_cap if cap is None else cap
    if n < 1:
        raise InvalidParametersError(f"full ball needs n >= 1, got n={n}")
    if n > cap:
        raise CapExceededError("full octahedral ball too large", requested=n, cap=cap)


def ball_size(n: int, k: int, flavor: Flavor = Flavor.TRUNCATED) -> int:
    if flavor is Flavor.FULL:
        return 3**n
    return 2 * binom(n, k) + binom(n, k) * binom(n - k, k)


def enumerate_ball(
    n: int, k: int, flavor: Flavor = Flavor.TRUNCATED, cap: int | None = None
) -> Iterator[SignedPair]:
    """Every ball element once, in a fixed order.

    Truncated: A then B range over [empty] + vertices in colex order.
    Full: each node in turn is absent, in A or in B, node 1 varying slowest.
    """
    if flavor is Flavor.FULL:
        require_full(n, cap)
        for signs in product((0, 1, 2), repeat=n):
            a = tuple(i for i, s in enumerate(signs, start=1) if s == 1)
            b = tuple(i for i, s in enumerate(signs, start=1) if s == 2)
            yield SignedPair(a, b, Flavor.FULL)
        return
    require_truncated(n, k)
    index = vertex_index(n, k)
    parts: list[NodeSet] = [(), *index.vertices]
    masks = [0, *index.masks]
    for a, mask_a in zip(parts, masks):
        for b, mask_b in zip(parts, masks):
            if (a or b) and mask_a & mask_b == 0:
                yield SignedPair(a, b, Flavor.TRUNCATED)


@lru_cache(maxsize=16)
def ball_elements(n: int, k: int, flavor: Flavor = Flavor.TRUNCATED) -> tuple[SignedPair, ...]:
    return tuple(enumerate_ball(n, k, flavor))


def _component(a: Iterable[int], k: int) -> NodeSet:
    part = tuple(sorted(set(a)))
    if part and len(part) != k:
        raise MalformedVertexError(f"{part} is neither empty nor a {k}-subset")
    return part


def prec(a1: Iterable[int], a2: Iterable[int], k: int) -> bool:
    """A1 precedes A2 iff the k least elements of A1 and A2 together are A2."""
    first, second = _component(a1, k), _component(a2, k)
    return least_k(first + second, k) == second


def pair_prec(p1: SignedPair, p2: SignedPair, k: int) -> bool:
    """Componentwise precedence plus disjointness of every A_i from every B_j."""
    if p1.flavor is not Flavor.TRUNCATED or p2.flavor is not Flavor.TRUNCATED:
        raise InvalidParametersError("pair_prec is defined on the truncated ball only")
    if not (prec(p1.a, p2.a, k) and prec(p1.b, p2.b, k)):
        return False
    a_mask = vertex_mask(p1.a) | vertex_mask(p2.a)
    b_mask = vertex_mask(p1.b) | vertex_mask(p2.b)
    return a_mask & b_mask == 0


def contained(p1: SignedPair, p2: SignedPair) -> bool:
    """A1 within A2 and B1 within B2, the relation of the full ball."""
    return set(p1.a) <= set(p2.a) and set(p1.b) <= set(p2.b)
