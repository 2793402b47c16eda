"""Seed derivation and the portable shuffle used for resampling.

All randomness in the package flows from integer seeds. Ensemble members and
experiment tuples get their own sub-seed from a SplitMix64 mix of the master
seed, so results never depend on how work is scheduled across threads.
"""

from __future__ import annotations

import hashlib

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finaliser (Steele, Lea & Flood 2014)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Minimal SplitMix64 stream. Bit-identical on every platform."""

    def __init__(self, seed: int):
        self.state = int(seed) & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound


def fisher_yates(n: int, seed: int) -> np.ndarray:
    """Return a seeded permutation of ``range(n)``.

    Classic descending Fisher-Yates driven by :class:`SplitMix64`.
    """
    perm = list(range(n))
    rng = SplitMix64(seed)
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return np.asarray(perm, dtype=np.int64)


def member_seed(master: int, index: int) -> int:
    """Sub-seed for ensemble member ``index``: ``mix64(master + (index + 1) * gamma)``."""
    return mix64((int(master) & MASK64) + (int(index) + 1) * GOLDEN_GAMMA)


def key_seed(master: int, *parts: object) -> int:
    """Sub-seed for a tuple of labels (dataset, regressor, resample...).

    The labels are hashed with BLAKE2b so the seed is stable across Python
    processes (``hash()`` is salted per process).
    """
    h = hashlib.blake2b(digest_size=8)
    for p in parts:
        h.update(str(p).encode("utf-8"))
        h.update(b"\x1f")
    return mix64((int(master) & MASK64) ^ int.from_bytes(h.digest(), "little"))


def generator(seed: int) -> np.random.Generator:
    """numpy PCG64 generator for a 64-bit seed."""
    return np.random.Generator(np.random.PCG64(int(seed) & MASK64))
