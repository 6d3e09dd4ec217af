"""
Descent reductions

- Single-step and batch star-shaped class discards
- Full reductions with traces
- Batch round schedule
"""

from kneserlab.descent.schedule import round_bound, round_bounds, schedule, schedule_lengths
from kneserlab.descent.steps import (
    DescentMode,
    DescentStep,
    ReductionTrace,
    base_threshold,
    descend_batch,
    descend_once,
    discard_count,
    reduce_fully,
    restrict,
)

__all__ = [
    "DescentMode",
    "DescentStep",
    "ReductionTrace",
    "base_threshold",
    "descend_batch",
    "descend_once",
    "discard_count",
    "reduce_fully",
    "restrict",
    "round_bound",
    "round_bounds",
    "schedule",
    "schedule_lengths",
]
