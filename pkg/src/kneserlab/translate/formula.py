"""Propositional formula DAGs with exact symbol counts.

Nodes are immutable and compared by identity, so a subformula built once
and reused is shared. ``size`` is the symbol count of the fully unwound
tree (every connective and every variable occurrence counts one) and is
fixed at construction. ``dag_size`` counts distinct nodes instead.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping

Assignment = Mapping[str, bool]


class Formula:
    __slots__ = ("size",)

    size: int

    @property
    def children(self) -> tuple[Formula, ...]:
        return ()


class Const(Formula):
    __slots__ = ("value",)

    def __init__(self, value: bool) -> None:
        self.value = value
        self.size = 1

    def __repr__(self) -> str:
        return "TRUE" if self.value else "FALSE"


class Var(Formula):
    __slots__ = ("name",)

    def __init__(self, name: str) -> None:
        self.name = name
        self.size = 1

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


class Not(Formula):
    __slots__ = ("arg",)

    def __init__(self, arg: Formula) -> None:
        self.arg = arg
        self.size = 1 + arg.size

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.arg,)


class _Nary(Formula):
    __slots__ = ("args",)

    def __init__(self, args: Iterable[Formula]) -> None:
        self.args = tuple(args)
        self.size = 1 + sum(a.size for a in self.args)

    @property
    def children(self) -> tuple[Formula, ...]:
        return self.args


class And(_Nary):
    __slots__ = ()


class Or(_Nary):
    __slots__ = ()


class Implies(Formula):
    __slots__ = ("left", "right")

    def __init__(self, left: Formula, right: Formula) -> None:
        self.left = left
        self.right = right
        self.size = 1 + left.size + right.size

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


TRUE = Const(True)
FALSE = Const(False)


def conj(args: Iterable[Formula]) -> Formula:
    """Conjunction that collapses the empty and one-element cases."""
    items = tuple(args)
    if not items:
        return TRUE
    if len(items) == 1:
        return items[0]
    return And(items)


def disj(args: Iterable[Formula]) -> Formula:
    """Disjunction that collapses the empty and one-element cases."""
    items = tuple(args)
    if not items:
        return FALSE
    if len(items) == 1:
        return items[0]
    return Or(items)


def _iter_dag(root: Formula) -> Iterator[Formula]:
    seen: set[int] = set()
    stack = [root]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield node
        stack.extend(node.children)


def dag_size(root: Formula) -> int:
    """Number of distinct nodes reachable from ``root``."""
    return sum(1 for _ in _iter_dag(root))


def walk_size(root: Formula) -> int:
    """Symbol count by an explicit walk of the unwound tree.

    Independent of the cached ``size``; cost grows with the tree, not the DAG.
    """
    total = 0
    stack = [root]
    while stack:
        node = stack.pop()
        total += 1
        stack.extend(node.children)
    return total


def formula_variables(root: Formula) -> set[str]:
    return {node.name for node in _iter_dag(root) if isinstance(node, Var)}


class Evaluator:
    """Evaluates formulas under one assignment, memoising shared nodes.

    The memo holds each evaluated node alongside its value, so an id is never
    reused while its entry exists.
    """

    def __init__(self, assignment: Assignment) -> None:
        self.assignment = assignment
        self._memo: dict[int, tuple[Formula, bool]] = {}

    def _known(self, node: Formula) -> bool:
        entry = self._memo.get(id(node))
        return entry is not None and entry[0] is node

    def _memo_value(self, node: Formula) -> bool:
        return self._memo[id(node)][1]

    def __call__(self, root: Formula) -> bool:
        stack: list[tuple[Formula, bool]] = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if self._known(node):
                continue
            if not expanded and node.children:
                stack.append((node, True))
                stack.extend((child, False) for child in node.children if not self._known(child))
                continue
            self._memo[id(node)] = (node, self._value(node))
        return self._memo_value(root)

    def _value(self, node: Formula) -> bool:
        value = self._memo_value
        match node:
            case Var(name=name):
                return self.assignment[name]
            case Const(value=constant):
                return constant
            case Not(arg=arg):
                return not value(arg)
            case And(args=args):
                return all(value(a) for a in args)
            case Or(args=args):
                return any(value(a) for a in args)
            case Implies(left=left, right=right):
                return (not value(left)) or value(right)
        raise TypeError(f"unknown formula node {node!r}")


def evaluate(root: Formula, assignment: Assignment) -> bool:
    return Evaluator(assignment)(root)


def formula_to_sexpr(root: Formula) -> str:
    """S-expression text of the unwound tree, for debugging small formulas."""
    match root:
        case Var(name=name):
            return name
        case Const(value=value):
            return "true" if value else "false"
        case Not(arg=arg):
            return f"(not {formula_to_sexpr(arg)})"
        case And(args=args):
            return "(and " + " ".join(formula_to_sexpr(a) for a in args) + ")"
        case Or(args=args):
            return "(or " + " ".join(formula_to_sexpr(a) for a in args) + ")"
        case Implies(left=left, right=right):
            return f"(implies {formula_to_sexpr(left)} {formula_to_sexpr(right)})"
    raise TypeError(f"unknown formula node {root!r}")
