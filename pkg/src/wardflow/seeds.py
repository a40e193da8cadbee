"""Deterministic seed derivation for independent random streams.

Every stochastic component gets its own stream derived from a master seed
plus a component path (strings/ints).  Adding a new component never shifts
the randomness of existing ones, which is what makes common-random-number
comparisons across scenarios possible.
"""

from __future__ import annotations

import hashlib

import numpy as np

_SEP = "\x1f"  # unit separator, not expected inside ids or path labels


def _digest(*parts) -> bytes:
    key = _SEP.join(str(p) for p in parts)
    return hashlib.sha256(key.encode("utf-8")).digest()


def derive_seed(*parts) -> int:
    """64-bit seed derived from the given path components."""
    return int.from_bytes(_digest(*parts)[:8], "big")


def derive_rng(*parts) -> np.random.Generator:
    """Fresh numpy generator for the given component path."""
    return np.random.default_rng(derive_seed(*parts))


def hash_uniform(*parts) -> float:
    """Uniform [0, 1) draw that depends only on the path, not on call order."""
    return int.from_bytes(_digest(*parts)[:8], "big") / 2.0**64
