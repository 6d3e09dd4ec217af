"""Complementary-pair detection and brute-force Tucker sweeps."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice

import numpy as np
from loguru import logger
from pydantic import BaseModel

from kneserlab.core import NodeSet
from kneserlab.exceptions import InvalidParametersError
from kneserlab.rng import make_rng
from kneserlab.tucker.ball import Flavor, SignedPair, ball_elements, contained, pair_prec
from kneserlab.tucker.labeling import (
    AntipodalMap,
    default_min_magnitude,
    iter_label_vectors,
    orbit_index,
    signed_labels,
)

CHUNK_ROWS = 4096


@dataclass(frozen=True)
class RelatedPairs:
    """Ordered pairs (p1, p2), p1 != p2, related by precedence (truncated)
    or containment (full), with the orbit id and sign of each side."""

    first: tuple[SignedPair, ...]
    second: tuple[SignedPair, ...]
    orbit1: np.ndarray
    sign1: np.ndarray
    orbit2: np.ndarray
    sign2: np.ndarray

    def __len__(self) -> int:
        return len(self.first)

    def hits(self, labels: np.ndarray) -> np.ndarray:
        """Positions of related pairs carrying opposite labels.

        ``labels`` is one label vector or a matrix with one map per row; the
        result is the index array, or a per-row boolean for matrices.
        """
        left = labels[..., self.orbit1] * self.sign1
        right = labels[..., self.orbit2] * self.sign2
        opposite = left == -right
        if labels.ndim == 1:
            return np.flatnonzero(opposite)
        return opposite.any(axis=1)


@lru_cache(maxsize=16)
def related_pairs(n: int, k: int, flavor: Flavor = Flavor.TRUNCATED) -> RelatedPairs:
    elements = ball_elements(n, k, flavor)
    lookup = orbit_index(n, k, flavor).lookup
    first: list[SignedPair] = []
    second: list[SignedPair] = []
    for p1 in elements:
        for p2 in elements:
            if p1 == p2:
                continue
            related = pair_prec(p1, p2, k) if flavor is Flavor.TRUNCATED else contained(p1, p2)
            if related:
                first.append(p1)
                second.append(p2)
    side1 = [lookup[(p.a, p.b)] for p in first]
    side2 = [lookup[(p.a, p.b)] for p in second]
    return RelatedPairs(
        first=tuple(first),
        second=tuple(second),
        orbit1=np.array([o for o, _ in side1], dtype=np.int64),
        sign1=np.array([s for _, s in side1], dtype=np.int64),
        orbit2=np.array([o for o, _ in side2], dtype=np.int64),
        sign2=np.array([s for _, s in side2], dtype=np.int64),
    )


class ComplementaryPair(BaseModel):
    """Two related ball elements with opposite labels."""

    first: tuple[NodeSet, NodeSet]
    second: tuple[NodeSet, NodeSet]
    first_label: int
    second_label: int

    def describe(self) -> str:
        p1 = SignedPair(*self.first)
        p2 = SignedPair(*self.second)
        return f"{p1} -> {self.first_label}, {p2} -> {self.second_label}"


def iter_complementary(lam: AntipodalMap) -> Iterator[ComplementaryPair]:
    """Every complementary pair of ``lam``, in ball order of (p1, p2)."""
    pairs = related_pairs(lam.n, lam.k, lam.flavor)
    labels = np.array(lam.labels, dtype=np.int64)
    for pos in pairs.hits(labels):
        p1, p2 = pairs.first[pos], pairs.second[pos]
        yield ComplementaryPair(
            first=(p1.a, p1.b),
            second=(p2.a, p2.b),
            first_label=lam(p1),
            second_label=lam(p2),
        )


def find_complementary(lam: AntipodalMap) -> ComplementaryPair | None:
    return next(iter_complementary(lam), None)


def iter_k_complementary(lam: AntipodalMap) -> Iterator[ComplementaryPair]:
    """k-complementary pairs of a map on the truncated ball."""
    if lam.flavor is not Flavor.TRUNCATED:
        raise InvalidParametersError("k-complementary pairs live on the truncated ball")
    return iter_complementary(lam)


def find_k_complementary(lam: AntipodalMap) -> ComplementaryPair | None:
    """The first k-complementary pair of ``lam``, or None."""
    return next(iter_k_complementary(lam), None)


class TuckerSweepReport(BaseModel):
    n: int
    k: int
    flavor: Flavor
    maps_checked: int
    maps_without_witness: int
    first_counterexample: AntipodalMap | None = None

    @property
    def ok(self) -> bool:
        return self.maps_without_witness == 0


def _sweep(
    n: int, k: int, flavor: Flavor, chunks: Iterator[np.ndarray]
) -> TuckerSweepReport:
    pairs = related_pairs(n, k, flavor)
    checked = failures = 0
    first: AntipodalMap | None = None
    for chunk in chunks:
        has = pairs.hits(chunk)
        checked += len(chunk)
        missing = np.flatnonzero(~has)
        failures += len(missing)
        if first is None and len(missing):
            first = AntipodalMap(
                n=n, k=k, flavor=flavor,
                labels=tuple(int(x) for x in chunk[missing[0]]),
                min_magnitude=default_min_magnitude(k, flavor),
            )
    report = TuckerSweepReport(
        n=n, k=k, flavor=flavor, maps_checked=checked,
        maps_without_witness=failures, first_counterexample=first,
    )
    logger.info(
        "{} Tucker sweep n={} k={}: {} maps, {} without witness",
        flavor.value, n, k, checked, failures,
    )
    return report


def _exhaust(n: int, k: int, flavor: Flavor, cap: int | None) -> TuckerSweepReport:
    vectors = iter_label_vectors(n, k, flavor, cap)

    def chunks() -> Iterator[np.ndarray]:
        while block := list(islice(vectors, CHUNK_ROWS)):
            yield np.array(block, dtype=np.int64)

    return _sweep(n, k, flavor, chunks())


def exhaust_truncated_tucker(n: int, k: int, cap: int | None = None) -> TuckerSweepReport:
    """Check every antipodal map of the truncated ball for a k-complementary pair."""
    return _exhaust(n, k, Flavor.TRUNCATED, cap)


def exhaust_full_tucker(n: int, cap: int | None = None) -> TuckerSweepReport:
    """Check every antipodal map of the full ball for a complementary pair."""
    return _exhaust(n, 1, Flavor.FULL, cap)


def sample_truncated_tucker(n: int, k: int, samples: int, seed: int) -> TuckerSweepReport:
    """Check ``samples`` seeded random antipodal maps of the truncated ball."""
    choices = np.array(signed_labels(n, k), dtype=np.int64)
    orbits = len(orbit_index(n, k))
    rng = make_rng(seed)

    def chunks() -> Iterator[np.ndarray]:
        remaining = samples
        while remaining > 0:
            rows = min(remaining, CHUNK_ROWS)
            yield choices[rng.integers(len(choices), size=(rows, orbits))]
            remaining -= rows

    return _sweep(n, k, Flavor.TRUNCATED, chunks())
