"""Truncated Tucker translations: Ant -> Comp as a formula and Ant & not Comp as CNF."""

from __future__ import annotations

from kneserlab.core import NodeSet
from kneserlab.tucker import AntipodalMap, Flavor, ball_elements, orbit_index, related_pairs
from kneserlab.tucker.ball import require_truncated
from kneserlab.translate.cnf import Cnf
from kneserlab.translate.formula import And, Formula, Implies, Or, Var


def _part(nodes: NodeSet) -> str:
    return ".".join(map(str, nodes)) or "-"


def tucker_var(a: NodeSet, b: NodeSet, label: int) -> str:
    """Name of "element (A, B) carries ``label``", e.g. ``p[1.2|-,+4]``."""
    return f"p[{_part(a)}|{_part(b)},{label:+d}]"


def tucker_aux_var(a: NodeSet, b: NodeSet, label: int) -> str:
    return f"y[{_part(a)}|{_part(b)},{label:+d}]"


def tucker_labels(n: int, k: int) -> list[int]:
    """Signed labels in ascending order: -n..-2k, 2k..n."""
    return [*range(-n, -2 * k + 1), *range(2 * k, n + 1)]


def tucker_formula(n: int, k: int) -> Formula:
    """Ant -> Comp over the variables p[A, B, i]."""
    require_truncated(n, k)
    labels = tucker_labels(n, k)
    elements = ball_elements(n, k)
    p = {(e.a, e.b, i): Var(tucker_var(e.a, e.b, i)) for e in elements for i in labels}
    ant = And(
        Or(And((p[e.a, e.b, i], p[e.b, e.a, -i])) for i in labels) for e in elements
    )
    pairs = related_pairs(n, k, Flavor.TRUNCATED)
    comp = Or(
        And((p[p1.a, p1.b, i], p[p2.a, p2.b, -i]))
        for p1, p2 in zip(pairs.first, pairs.second)
        for i in labels
    )
    return Implies(ant, comp)


def map_assignment(lam: AntipodalMap) -> dict[str, bool]:
    """Truth values of p[A, B, i] induced by an antipodal map."""
    labels = tucker_labels(lam.n, lam.k)
    return {
        tucker_var(pair.a, pair.b, i): value == i
        for pair, value in lam.items()
        for i in labels
    }


def tucker_cnf(n: int, k: int, merge_antipodal: bool = False) -> Cnf:
    """Ant & not Comp, satisfiable iff some antipodal map has no k-complementary pair.

    Unmerged, p[A, B, i] is variable e * L + j + 1 for element e (ball order)
    and label position j, and one auxiliary variable per (element, label)
    encodes p[A, B, i] & p[B, A, -i]. Merged, p[A, B, i] and p[B, A, -i]
    share one variable per orbit and label, and no auxiliaries are needed.
    """
    require_truncated(n, k)
    labels = tucker_labels(n, k)
    width = len(labels)
    position = {label: j for j, label in enumerate(labels)}
    elements = ball_elements(n, k)
    pairs = related_pairs(n, k, Flavor.TRUNCATED)
    names: dict[str, int] = {}
    clauses: list[list[int]] = []

    if merge_antipodal:
        index = orbit_index(n, k, Flavor.TRUNCATED)
        for o, (a, b) in enumerate(index.reps):
            for j, label in enumerate(labels):
                names[tucker_var(a, b, label)] = o * width + j + 1

        def literal(a: NodeSet, b: NodeSet, label: int) -> int:
            orbit, sign = index.lookup[(a, b)]
            return orbit * width + position[sign * label] + 1

        clauses.extend([o * width + j + 1 for j in range(width)] for o in range(len(index)))
        num_vars = len(index) * width
    else:
        element_id = {(e.a, e.b): pos for pos, e in enumerate(elements)}
        for pos, e in enumerate(elements):
            for j, label in enumerate(labels):
                names[tucker_var(e.a, e.b, label)] = pos * width + j + 1

        def literal(a: NodeSet, b: NodeSet, label: int) -> int:
            return element_id[(a, b)] * width + position[label] + 1

        aux_base = len(elements) * width
        for pos, e in enumerate(elements):
            row = []
            for j, label in enumerate(labels):
                y = aux_base + pos * width + j + 1
                names[tucker_aux_var(e.a, e.b, label)] = y
                clauses.append([-y, literal(e.a, e.b, label)])
                clauses.append([-y, literal(e.b, e.a, -label)])
                row.append(y)
            clauses.append(row)
        num_vars = 2 * aux_base

    for p1, p2 in zip(pairs.first, pairs.second):
        for label in labels:
            clauses.append([-literal(p1.a, p1.b, label), -literal(p2.a, p2.b, -label)])
    return Cnf(num_vars=num_vars, clauses=clauses, names=names)
