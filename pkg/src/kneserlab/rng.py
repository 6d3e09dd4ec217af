"""Seeded randomness.

Every random choice in kneserlab is drawn from numpy's PCG64 bit generator
seeded through a ``SeedSequence`` built from one 64-bit integer seed, so a
run is reproducible from its seed alone.
"""

from __future__ import annotations

import numpy as np

from kneserlab.exceptions import InvalidParametersError

SEED_BITS = 64


def make_rng(seed: int) -> np.random.Generator:
    """Return the generator for ``seed``."""
    if not 0 <= seed < 2**SEED_BITS:
        raise InvalidParametersError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
