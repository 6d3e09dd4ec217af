"""Exception hierarchy shared by every kneserlab module.

Expected mathematical outcomes (a coloring violation, an unsatisfiable
search, a complementary pair) are returned as values. Exceptions are
reserved for broken preconditions and malformed input.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from kneserlab.coloring.model import StarReport
    from kneserlab.descent.steps import ReductionTrace


class KneserLabError(Exception):
    """Base class for all kneserlab errors."""


class InvalidParametersError(KneserLabError, ValueError):
    """Raised when instance parameters violate an operation's precondition."""


class MalformedVertexError(InvalidParametersError):
    """Raised when a node list is not a sorted, duplicate-free k-subset of [n]."""


class RankOutOfRangeError(InvalidParametersError):
    """Raised when a colex rank lies outside [0, C(n, k))."""


class CapExceededError(KneserLabError):
    """Raised when an exhaustive operation would exceed its configured cap."""

    def __init__(self, message: str, *, requested: int, cap: int) -> None:
        super().__init__(f"{message} (requested {requested}, cap {cap})")
        self.requested = requested
        self.cap = cap


class ColoringFormatError(KneserLabError):
    """Raised when a serialized artifact cannot be parsed."""


class NoStarShapedClassError(KneserLabError):
    """Raised by a single descent step on a coloring without star-shaped classes."""

    def __init__(self, report: StarReport) -> None:
        super().__init__(
            f"coloring of ({report.n},{report.k}) has no star-shaped color class"
        )
        self.report = report


class InsufficientStarClassesError(KneserLabError):
    """Raised by a batch descent step when fewer than d classes are star-shaped."""

    def __init__(self, report: StarReport, required: int) -> None:
        super().__init__(
            f"batch step on ({report.n},{report.k}) needs {required} star-shaped "
            f"classes, found {report.alpha}"
        )
        self.report = report
        self.required = required


class ReductionError(KneserLabError):
    """Raised when a descent step fails mid-reduction; carries the partial trace."""

    def __init__(self, message: str, trace: ReductionTrace, cause: Any = None) -> None:
        super().__init__(message)
        self.trace = trace
        self.cause = cause
