"""Lifting a truncated antipodal map to the full octahedral ball."""

from __future__ import annotations

from enum import Enum

from loguru import logger
from pydantic import BaseModel, Field

from kneserlab.core import NodeSet, least_k
from kneserlab.exceptions import InvalidParametersError
from kneserlab.tucker.ball import Flavor, SignedPair, pair_prec, require_full
from kneserlab.tucker.complementary import iter_complementary
from kneserlab.tucker.labeling import AntipodalMap, orbit_index
from kneserlab.tucker.order import TotalOrder, canonical_total_order


class LiftCase(int, Enum):
    SMALL = 1  # both sides below k
    ONE_SIDED = 2  # exactly one side has at least k nodes
    TWO_SIDED = 3  # both sides have at least k nodes


def lift_case(a: NodeSet, b: NodeSet, k: int) -> LiftCase:
    big_a, big_b = len(a) >= k, len(b) >= k
    if big_a and big_b:
        return LiftCase.TWO_SIDED
    if big_a or big_b:
        return LiftCase.ONE_SIDED
    return LiftCase.SMALL


def project(a: NodeSet, b: NodeSet, k: int) -> tuple[NodeSet, NodeSet]:
    """The truncated element whose label a large full-ball element inherits."""
    case = lift_case(a, b, k)
    if case is LiftCase.SMALL:
        raise InvalidParametersError(f"({a},{b}) has no truncated projection for k={k}")
    short_a = least_k(a, k) if len(a) >= k else ()
    short_b = least_k(b, k) if len(b) >= k else ()
    return short_a, short_b


def lift_lambda(lam: AntipodalMap, order_full: TotalOrder | None = None) -> AntipodalMap:
    """Extend ``lam`` to every disjoint pair (A, B) of subsets of [n].

    Small pairs get +-(1 + |A| + |B|), positive when A is not below B in
    ``order_full``; the origin therefore gets 1. Larger pairs copy the label
    of their projection onto the truncated ball.
    """
    if lam.flavor is not Flavor.TRUNCATED:
        raise InvalidParametersError("only truncated maps can be lifted")
    n, k = lam.n, lam.k
    require_full(n)
    order = order_full or canonical_total_order(n, k, Flavor.FULL)
    labels = []
    for a, b in orbit_index(n, k, Flavor.FULL).reps:
        if lift_case(a, b, k) is LiftCase.SMALL:
            magnitude = 1 + len(a) + len(b)
            labels.append(magnitude if order.position(a) >= order.position(b) else -magnitude)
        else:
            labels.append(lam.label(*project(a, b, k)))
    lifted = AntipodalMap(n=n, k=k, flavor=Flavor.FULL, labels=tuple(labels), min_magnitude=2)
    logger.debug("lifted map on B^{}_{} to {} orbits", n, k, len(labels))
    return lifted


class ViolationKind(str, Enum):
    ANTIPODALITY = "antipodality"
    ORIGIN_LABEL = "origin_label"
    MAGNITUDE = "magnitude"
    SMALL_PAIR = "case_i_pair"
    MIXED_CASE = "mixed_case"
    PROJECTION = "projection"


class LiftViolation(BaseModel):
    kind: ViolationKind
    detail: str


class LiftReport(BaseModel):
    n: int
    k: int
    complementary_pairs: int = 0
    projected_pairs: int = 0
    violations: list[LiftViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_lift_soundness(lam: AntipodalMap, lifted: AntipodalMap) -> LiftReport:
    """Re-check the case analysis behind the lift on every element and pair.

    Complementary pairs of ``lifted`` must both be large, and their
    projections must form a k-complementary pair of ``lam``.
    """
    n, k = lam.n, lam.k
    report = LiftReport(n=n, k=k)

    def flag(kind: ViolationKind, detail: str) -> None:
        report.violations.append(LiftViolation(kind=kind, detail=detail))

    for pair, label in lifted.items():
        if lifted(pair.swapped()) != (label if pair.a == pair.b else -label):
            flag(ViolationKind.ANTIPODALITY, f"{pair} -> {label}")
        if (pair.a, pair.b) == ((), ()):
            if label != 1:
                flag(ViolationKind.ORIGIN_LABEL, f"origin -> {label}")
            continue
        if abs(label) == 1:
            flag(ViolationKind.ORIGIN_LABEL, f"{pair} -> {label}")
        small = lift_case(pair.a, pair.b, k) is LiftCase.SMALL
        if small != (abs(label) <= 2 * k - 1):
            flag(ViolationKind.MAGNITUDE, f"{pair} -> {label}")

    for witness in iter_complementary(lifted):
        report.complementary_pairs += 1
        small1 = lift_case(*witness.first, k) is LiftCase.SMALL
        small2 = lift_case(*witness.second, k) is LiftCase.SMALL
        if small1 and small2:
            flag(ViolationKind.SMALL_PAIR, witness.describe())
            continue
        if small1 or small2:
            flag(ViolationKind.MIXED_CASE, witness.describe())
            continue
        p1 = SignedPair(*project(*witness.first, k))
        p2 = SignedPair(*project(*witness.second, k))
        if pair_prec(p1, p2, k) and lam(p1) == -lam(p2):
            report.projected_pairs += 1
        else:
            flag(ViolationKind.PROJECTION, f"{witness.describe()} projects to {p1}, {p2}")
    return report
