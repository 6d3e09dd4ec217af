"""Round schedule of the batch descent and its logarithmic bound."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from kneserlab.coloring.bounds import n_beta
from kneserlab.descent.steps import discard_count
from kneserlab.exceptions import InvalidParametersError


def schedule(n: int, k: int, beta: Fraction | str | int = Fraction(1, 2)) -> list[int]:
    """Node counts n_0 = n, n_{t+1} = n_t - ceil(n_t / 2k), stopping at the
    first value not above N_beta(k, beta)."""
    if n < 1:
        raise InvalidParametersError(f"schedule needs n >= 1, got {n}")
    limit = n_beta(k, beta)
    sizes = [n]
    while sizes[-1] > limit:
        sizes.append(sizes[-1] - discard_count(sizes[-1], k))
    return sizes


def schedule_lengths(n_max: int, k: int, beta: Fraction | str | int = Fraction(1, 2)) -> np.ndarray:
    """``len(schedule(n, k, beta))`` for every 1 <= n <= n_max, index n."""
    limit = n_beta(k, beta)
    lengths = np.zeros(n_max + 1, dtype=np.int64)
    for n in range(1, n_max + 1):
        lengths[n] = 1 if n <= limit else 1 + lengths[n - discard_count(n, k)]
    return lengths


def round_bound(n: int, k: int) -> int:
    """ceil(log_{2k/(2k-1)} n) + 1, computed with integers only."""
    if n < 1:
        raise InvalidParametersError(f"round bound needs n >= 1, got {n}")
    e = 0
    while (2 * k) ** e < n * (2 * k - 1) ** e:
        e += 1
    return e + 1


def round_bounds(n_max: int, k: int) -> np.ndarray:
    """:func:`round_bound` for every 1 <= n <= n_max, index n."""
    caps: list[int] = []
    e = 0
    while not caps or caps[-1] < n_max:
        caps.append((2 * k) ** e // (2 * k - 1) ** e)
        e += 1
    # bound(n) - 1 is the least e whose cap reaches n
    exponents = np.searchsorted(np.array(caps, dtype=np.int64), np.arange(n_max + 1), side="left")
    return exponents + 1
