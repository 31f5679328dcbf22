"""SplitMix64, the seeded generator behind ``neutro check``.

It is small enough to reimplement anywhere, so a seed means the same sample
in every language:

    state_k = seed + k * 0x9E3779B97F4A7C15        (mod 2**64, k = 1, 2, ...)
    z = state_k
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9       (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB       (mod 2**64)
    out_k = z ^ (z >> 31)
    uniform_k = (out_k >> 11) * 2**-53              in [0, 1)

Triples are drawn as consecutive outputs in (mu, omega, nu) order.
"""
from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Counter-based SplitMix64.

    ``next_u64`` is the plain reference; ``random`` produces the same stream
    vectorized with numpy's wrapping uint64 arithmetic.
    """

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.counter = 0

    def next_u64(self) -> int:
        self.counter += 1
        return mix64((self.seed + self.counter * GOLDEN) & MASK64)

    def u64(self, n: int) -> np.ndarray:
        k = np.arange(self.counter + 1, self.counter + n + 1, dtype=np.uint64)
        self.counter += n
        z = np.uint64(self.seed) + k * np.uint64(GOLDEN)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
        return z ^ (z >> np.uint64(31))

    def random(self, n: int) -> np.ndarray:
        """``n`` doubles uniform on [0, 1)."""
        return (self.u64(n) >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def uniform(self, low: float, high: float, n: int) -> np.ndarray:
        return low + (high - low) * self.random(n)

    def triples(self, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``n`` points uniform in the unit cube, as (mu, omega, nu) arrays."""
        x = self.random(3 * n).reshape(n, 3)
        return x[:, 0].copy(), x[:, 1].copy(), x[:, 2].copy()
