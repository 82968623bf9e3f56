"""Deterministic seeding built on the splitmix64 generator.

Every randomized routine in this package draws from a splitmix64
stream.  Experiments give trial i the seed ``splitmix64(base_seed ^ i)``
and aggregate results by trial index, so estimates depend only on
(base_seed, trial index), never on execution order or thread count.

The j-th output of a stream seeded with s is ``mix64(s + (j+1)*GAMMA)``,
so any position of any stream can be reproduced directly.
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtri

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """The splitmix64 finalizer: xor-shift-multiply scramble of a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def splitmix64(x: int) -> int:
    """One splitmix64 step from state x: add the Weyl increment, then mix."""
    return mix64((x + GAMMA) & MASK64)


def trial_seed(base_seed: int, trial_index: int) -> int:
    if trial_index < 0:
        raise ValueError("trial index must be nonnegative")
    return splitmix64((int(base_seed) ^ int(trial_index)) & MASK64)


class SplitMix64:
    """Sequential splitmix64 stream with uniform / gaussian / bernoulli draws."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + GAMMA) & MASK64
        return mix64(self._state)

    def uniform(self) -> float:
        # (k + 0.5) * 2^-53 stays strictly inside (0, 1) so inverse-CDF
        # transforms never receive an endpoint.
        return ((self.next_uint64() >> 11) + 0.5) * 2.0**-53

    def uniforms(self, count: int) -> np.ndarray:
        return np.array([self.uniform() for _ in range(count)], dtype=float)

    def gaussians(self, count: int, mu: float = 0.0, sigma: float = 1.0) -> np.ndarray:
        return mu + sigma * ndtri(self.uniforms(count))

    def bernoullis(self, count: int, p: float) -> np.ndarray:
        return (self.uniforms(count) < p).astype(float)
