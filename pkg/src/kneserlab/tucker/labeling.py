"""Antipodal labelings of the (truncated) octahedral ball."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from kneserlab.coloring import Coloring
from kneserlab.config import get_settings
from kneserlab.core import NodeSet
from kneserlab.exceptions import CapExceededError, ColoringFormatError, InvalidParametersError
from kneserlab.rng import make_rng
from kneserlab.tucker.ball import Flavor, SignedPair, ball_elements
from kneserlab.tucker.order import TotalOrder, canonical_total_order

Orbit = tuple[NodeSet, NodeSet]


@dataclass(frozen=True)
class OrbitIndex:
    """Orbits {(A,B), (B,A)} of a ball, each represented by its smaller member.

    ``lookup[(A, B)]`` is (orbit id, sign) with sign -1 for the non-representative.
    """

    reps: tuple[Orbit, ...]
    lookup: dict[Orbit, tuple[int, int]]

    def __len__(self) -> int:
        return len(self.reps)


@lru_cache(maxsize=16)
def orbit_index(n: int, k: int, flavor: Flavor = Flavor.TRUNCATED) -> OrbitIndex:
    reps: list[Orbit] = []
    lookup: dict[Orbit, tuple[int, int]] = {}
    for pair in ball_elements(n, k, flavor):
        key = (pair.a, pair.b)
        if key in lookup:
            continue
        rep = min(key, (pair.b, pair.a))
        lookup[rep] = (len(reps), 1)
        lookup[(rep[1], rep[0])] = (len(reps), -1) if rep[0] != rep[1] else (len(reps), 1)
        reps.append(rep)
    return OrbitIndex(reps=tuple(reps), lookup=lookup)


def default_min_magnitude(k: int, flavor: Flavor) -> int:
    return 2 * k if flavor is Flavor.TRUNCATED else 2


class AntipodalMap(BaseModel):
    """One signed label per orbit, so lambda(B, A) = -lambda(A, B) always holds.

    Truncated labels have magnitude in [min_magnitude, n] (2k unless widened).
    Full labels have magnitude in [2, n], except the origin which carries 1.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    flavor: Flavor = Flavor.TRUNCATED
    labels: tuple[int, ...]
    min_magnitude: int

    @model_validator(mode="after")
    def _check_labels(self) -> AntipodalMap:
        index = orbit_index(self.n, self.k, self.flavor)
        if len(self.labels) != len(index):
            raise ValueError(f"expected {len(index)} orbit labels, got {len(self.labels)}")
        for rep, label in zip(index.reps, self.labels):
            if self.flavor is Flavor.FULL and rep == ((), ()):
                if label != 1:
                    raise ValueError(f"origin must carry label 1, got {label}")
            elif not self.min_magnitude <= abs(label) <= self.n:
                raise ValueError(
                    f"label {label} at {rep} outside +-[{self.min_magnitude},{self.n}]"
                )
        return self

    @property
    def widened(self) -> bool:
        return self.min_magnitude < default_min_magnitude(self.k, self.flavor)

    @property
    def magnitudes(self) -> range:
        return range(self.min_magnitude, self.n + 1)

    def label(self, a: NodeSet, b: NodeSet) -> int:
        orbit, sign = orbit_index(self.n, self.k, self.flavor).lookup[(tuple(a), tuple(b))]
        return sign * self.labels[orbit]

    def __call__(self, pair: SignedPair) -> int:
        return self.label(pair.a, pair.b)

    def items(self) -> Iterator[tuple[SignedPair, int]]:
        for pair in ball_elements(self.n, self.k, self.flavor):
            yield pair, self(pair)

    def to_json(self, indent: int | None = None) -> str:
        doc = {
            "n": self.n,
            "k": self.k,
            "flavor": self.flavor.value,
            "min_magnitude": self.min_magnitude,
            "entries": [
                {"a": list(a), "b": list(b), "label": label}
                for (a, b), label in zip(orbit_index(self.n, self.k, self.flavor).reps, self.labels)
            ],
        }
        return _MapDocument.model_validate(doc).model_dump_json(indent=indent)

    @classmethod
    def from_json(cls, data: str | bytes) -> AntipodalMap:
        try:
            doc = _MapDocument.model_validate_json(data)
            return doc.to_map()
        except (ValidationError, KeyError) as exc:
            raise ColoringFormatError(f"invalid antipodal map document: {exc}") from exc


class _Entry(BaseModel):
    a: tuple[int, ...]
    b: tuple[int, ...]
    label: int


class _MapDocument(BaseModel):
    n: int
    k: int
    flavor: Flavor
    min_magnitude: int
    entries: list[_Entry]

    def to_map(self) -> AntipodalMap:
        index = orbit_index(self.n, self.k, self.flavor)
        labels = [0] * len(index)
        for entry in self.entries:
            orbit, sign = index.lookup[(entry.a, entry.b)]
            labels[orbit] = sign * entry.label
        return AntipodalMap(
            n=self.n, k=self.k, flavor=self.flavor,
            labels=tuple(labels), min_magnitude=self.min_magnitude,
        )


def signed_labels(n: int, k: int, flavor: Flavor = Flavor.TRUNCATED) -> list[int]:
    low = default_min_magnitude(k, flavor)
    return [s * v for v in range(low, n + 1) for s in (1, -1)]


def random_antipodal_map(n: int, k: int, seed: int, flavor: Flavor = Flavor.TRUNCATED) -> AntipodalMap:
    """A uniformly random antipodal map for the given seed."""
    index = orbit_index(n, k, flavor)
    choices = signed_labels(n, k, flavor)
    if not choices:
        raise InvalidParametersError(f"no labels available for n={n}, k={k}")
    picks = make_rng(seed).integers(len(choices), size=len(index))
    labels = [
        1 if flavor is Flavor.FULL and rep == ((), ()) else choices[int(p)]
        for rep, p in zip(index.reps, picks)
    ]
    return AntipodalMap(
        n=n, k=k, flavor=flavor, labels=tuple(labels),
        min_magnitude=default_min_magnitude(k, flavor),
    )


def antipodal_map_count(n: int, k: int, flavor: Flavor = Flavor.TRUNCATED) -> int:
    free = len(orbit_index(n, k, flavor)) - (1 if flavor is Flavor.FULL else 0)
    return len(signed_labels(n, k, flavor)) ** free


def iter_label_vectors(
    n: int, k: int, flavor: Flavor = Flavor.TRUNCATED, cap: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Label tuples of every antipodal map, in lexicographic order of choices."""
    cap = get_settings().tucker.exhaust_cap if cap is None else cap
    total = antipodal_map_count(n, k, flavor)
    if total > cap:
        raise CapExceededError("too many antipodal maps to enumerate", requested=total, cap=cap)
    index = orbit_index(n, k, flavor)
    choices = signed_labels(n, k, flavor)
    slots = [
        (1,) if flavor is Flavor.FULL and rep == ((), ()) else tuple(choices)
        for rep in index.reps
    ]
    yield from product(*slots)


def iter_antipodal_maps(
    n: int, k: int, flavor: Flavor = Flavor.TRUNCATED, cap: int | None = None
) -> Iterator[AntipodalMap]:
    low = default_min_magnitude(k, flavor)
    for labels in iter_label_vectors(n, k, flavor, cap):
        yield AntipodalMap(n=n, k=k, flavor=flavor, labels=labels, min_magnitude=low)


def lambda_from_coloring(c: Coloring, order: TotalOrder | None = None) -> AntipodalMap:
    """Label (A, B) by c(A) if A comes after B in ``order``, else by -c(B).

    Color j becomes label j + n - m, which lands in [2k, n] for
    (n - 2k + 1)-colorings. Larger color counts widen the range downward.
    """
    order = order or canonical_total_order(c.n, c.k, Flavor.TRUNCATED)
    offset = c.n - c.m
    if offset < 1:
        raise InvalidParametersError(f"{c.m} colors leave no positive labels for n={c.n}")
    index = orbit_index(c.n, c.k, Flavor.TRUNCATED)
    labels = []
    for a, b in index.reps:
        if order.greater(a, b):
            labels.append(c.color_of(a) + offset)
        else:
            labels.append(-(c.color_of(b) + offset))
    return AntipodalMap(
        n=c.n, k=c.k, flavor=Flavor.TRUNCATED, labels=tuple(labels), min_magnitude=offset + 1
    )
