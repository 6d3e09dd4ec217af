"""Threshold formulas: "fewer than t of these formulas are true".

Two encodings are available. ``unary`` merges sorted unary counters by
divide and conquer; its DAG is quadratic in the number of inputs while the
unwound tree is quasi-polynomial. ``carry_save`` sums the inputs with a
Wallace tree of full adders, adds the last two rows with a ripple adder and
compares the binary total with the constant; both sizes stay polynomial.
"""

from __future__ import annotations

from collections.abc import Sequence
from enum import Enum
from functools import cached_property
from typing import Literal

from kneserlab.config import get_settings
from kneserlab.exceptions import InvalidParametersError
from kneserlab.translate.formula import FALSE, TRUE, And, Formula, Not, Or, conj, disj

Encoding = Literal["unary", "carry_save"]


class ThresholdMode(str, Enum):
    LESS = "less"
    AT_MOST = "at_most"
    EQUAL = "equal"


def _and2(a: Formula, b: Formula) -> Formula:
    return And((a, b))


def xor2(a: Formula, b: Formula) -> Formula:
    return Or((_and2(a, Not(b)), _and2(Not(a), b)))


def majority3(a: Formula, b: Formula, c: Formula) -> Formula:
    return Or((_and2(a, b), _and2(a, c), _and2(b, c)))


class Counter:
    """Counts how many of ``xs`` are true; thresholds share the count."""

    def __init__(self, xs: Sequence[Formula], encoding: Encoding | None = None) -> None:
        self.xs = tuple(xs)
        self.encoding: Encoding = encoding or get_settings().translate.counting
        if self.encoding not in ("unary", "carry_save"):
            raise InvalidParametersError(f"unknown counting encoding {self.encoding!r}")

    def __len__(self) -> int:
        return len(self.xs)

    @cached_property
    def unary(self) -> tuple[Formula, ...]:
        """``unary[j - 1]`` holds iff at least j inputs are true."""
        return _unary(self.xs)

    @cached_property
    def binary(self) -> tuple[Formula, ...]:
        """Bits of the count, least significant first."""
        return _binary_sum(self.xs)

    def less(self, t: int) -> Formula:
        """True iff fewer than t inputs are true."""
        if t <= 0:
            return FALSE
        if t > len(self.xs):
            return TRUE
        if self.encoding == "unary":
            return Not(self.unary[t - 1])
        return _less_than_constant(self.binary, t)

    def at_most(self, t: int) -> Formula:
        return self.less(t + 1)

    def equal(self, t: int) -> Formula:
        return conj((self.less(t + 1), Not(self.less(t))))

    def threshold(self, t: int, mode: ThresholdMode) -> Formula:
        if mode is ThresholdMode.LESS:
            return self.less(t)
        if mode is ThresholdMode.AT_MOST:
            return self.at_most(t)
        return self.equal(t)


def _unary(xs: tuple[Formula, ...]) -> tuple[Formula, ...]:
    if not xs:
        return ()
    if len(xs) == 1:
        return xs
    half = len(xs) // 2
    left, right = _unary(xs[:half]), _unary(xs[half:])
    a, b = len(left), len(right)
    out: list[Formula] = []
    for j in range(1, a + b + 1):
        terms: list[Formula] = []
        for i in range(max(0, j - b), min(a, j) + 1):
            if i == 0:
                terms.append(right[j - 1])
            elif i == j:
                terms.append(left[i - 1])
            else:
                terms.append(_and2(left[i - 1], right[j - i - 1]))
        out.append(disj(terms))
    return tuple(out)


def _binary_sum(xs: tuple[Formula, ...]) -> tuple[Formula, ...]:
    columns: list[list[Formula]] = [list(xs)]
    w = 0
    while w < len(columns):
        column = columns[w]
        while len(column) >= 3:
            a, b, c = column.pop(0), column.pop(0), column.pop(0)
            column.append(xor2(xor2(a, b), c))
            if w + 1 == len(columns):
                columns.append([])
            columns[w + 1].append(majority3(a, b, c))
        w += 1
    bits: list[Formula] = []
    carry: Formula | None = None
    for column in columns:
        operands = column + ([carry] if carry is not None else [])
        if not operands:
            bits.append(FALSE)
            carry = None
        elif len(operands) == 1:
            bits.append(operands[0])
            carry = None
        elif len(operands) == 2:
            bits.append(xor2(*operands))
            carry = _and2(*operands)
        else:
            bits.append(xor2(xor2(operands[0], operands[1]), operands[2]))
            carry = majority3(*operands)
    if carry is not None:
        bits.append(carry)
    return tuple(bits)


def _less_than_constant(bits: tuple[Formula, ...], t: int) -> Formula:
    """The binary number ``bits`` is below the constant t."""
    if t >= 1 << len(bits):
        return TRUE
    terms: list[Formula] = []
    for i in range(len(bits) - 1, -1, -1):
        if not t >> i & 1:
            continue
        higher = [bits[j] if t >> j & 1 else Not(bits[j]) for j in range(len(bits) - 1, i, -1)]
        terms.append(conj([*higher, Not(bits[i])]))
    return disj(terms)


def threshold_formula(
    xs: Sequence[Formula],
    t: int,
    mode: ThresholdMode | str = ThresholdMode.LESS,
    encoding: Encoding | None = None,
) -> Formula:
    """Formula comparing the number of true members of ``xs`` with t."""
    if not 0 <= t <= len(xs) + 1:
        raise InvalidParametersError(f"threshold {t} outside [0, {len(xs) + 1}]")
    return Counter(xs, encoding).threshold(t, ThresholdMode(mode))
