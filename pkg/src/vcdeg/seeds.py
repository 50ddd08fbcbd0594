"""Seed derivation and the pinned random generator.

Every random draw in this package flows through a Philox4x64-10 counter
generator (a published, cross-platform algorithm with reference outputs;
numpy's implementation is stream-stable across releases). Independent
streams are derived by hashing a label path with BLAKE2b, so the order
in which parallel work is scheduled can never change any outcome.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_key(*parts: int | str) -> int:
    """Collapse a label path into a 64-bit Philox key.

    Parts are length-prefixed before hashing so ("ab", "c") and
    ("a", "bc") derive different keys.
    """
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        raw = str(part).encode("utf-8")
        h.update(len(raw).to_bytes(4, "little"))
        h.update(raw)
    return int.from_bytes(h.digest(), "little")


def make_rng(*parts: int | str) -> np.random.Generator:
    """Independent Philox generator for the given label path."""
    return np.random.Generator(np.random.Philox(key=derive_key(*parts)))


def uniform_int(rng: np.random.Generator, lo: int, hi: int) -> int:
    """Uniform integer on the closed range [lo, hi].

    Built on the raw double stream (the part of the generator contract
    that is pinned bit-for-bit) rather than Generator.integers, so
    recipe streams stay replayable.
    """
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    draw = int(rng.random() * (hi - lo + 1))
    return lo + min(draw, hi - lo)


def choice_weighted(rng: np.random.Generator, items: list, weights: list[float]):
    """Draw one item with the given probability weights."""
    if len(items) != len(weights) or not items:
        raise ValueError("items and weights must be equal-length and nonempty")
    total = float(sum(weights))
    u = rng.random() * total
    acc = 0.0
    for item, w in zip(items, weights):
        acc += w
        if u < acc:
            return item
    return items[-1]
