"""Exact counting bounds on color classes.

All comparisons use Python integers and ``fractions.Fraction``; nothing here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from kneserlab.core import binom
from kneserlab.exceptions import InvalidParametersError


def parse_beta(beta: Fraction | str | int) -> Fraction:
    """Read beta as an exact rational strictly between 0 and 1."""
    try:
        value = Fraction(beta)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParametersError(f"beta {beta!r} is not a rational number") from exc
    if not 0 < value < 1:
        raise InvalidParametersError(f"beta must lie in (0,1), got {value}")
    return value


def _require_k(k: int) -> None:
    if k < 2:
        raise InvalidParametersError(f"bound needs k >= 2, got k={k}")


def non_star_bound(n: int, k: int) -> int:
    """Largest possible size of a non-star-shaped class: k^2 C(n-2, k-2)."""
    _require_k(k)
    return k * k * binom(n - 2, k - 2)


def star_class_bound(n: int, k: int) -> int:
    """Largest possible size of a star-shaped class: C(n-1, k-1)."""
    return binom(n - 1, k - 1)


def eq1_holds(n: int, k: int) -> bool:
    """Whether n - 2k + 1 classes of non-star size can cover every vertex."""
    if not n >= 2 * k >= 4:
        raise InvalidParametersError(f"need n >= 2k >= 4, got n={n}, k={k}")
    return (n - 2 * k + 1) * non_star_bound(n, k) >= binom(n, k)


def n_upper(k: int) -> int:
    """k^4; beyond it every (n - 2k + 1)-coloring has a star-shaped class."""
    _require_k(k)
    return k**4


def n_beta(k: int, beta: Fraction | str | int) -> Fraction:
    """k^3 (k - beta) / (1 - beta)."""
    _require_k(k)
    b = parse_beta(beta)
    return Fraction(k**3) * (k - b) / (1 - b)


def min_star_lower_bound(n: int, k: int, m: int) -> int:
    """Least number of star-shaped classes any proper m-coloring can have.

    Solves alpha C(n-1,k-1) + (m - alpha) k^2 C(n-2,k-2) >= C(n,k) for the
    least integer alpha, clamped to [0, m].
    """
    _require_k(k)
    star = star_class_bound(n, k)
    other = non_star_bound(n, k)
    gap = star - other
    if gap <= 0:
        raise InvalidParametersError(
            f"bound is uninformative for ({n},{k}): C(n-1,k-1)={star} <= k^2 C(n-2,k-2)={other}"
        )
    need = binom(n, k) - m * other
    alpha = -(-need // gap)
    return min(max(alpha, 0), m)
