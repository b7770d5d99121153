"""Seedable xoshiro256** generator shared by instance generation and tie-breaking.

The state is four 64-bit words seeded from a single integer with splitmix64,
following the reference seeding recipe by Blackman and Vigna. The same stream
is reproduced inside the jitted solver (see ``next_u64_nb``), so a seed fully
determines every random choice in the package on every platform.
"""
from __future__ import annotations

import numba as nb
import numpy as np

_MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


def splitmix64_state(seed: int) -> list[int]:
    """Expand ``seed`` into four xoshiro256 state words."""
    x = seed & _MASK
    out = []
    for _ in range(4):
        x = (x + 0x9E3779B97F4A7C15) & _MASK
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        out.append(z ^ (z >> 31))
    return out


class Xoshiro256:
    """xoshiro256** with unbiased bounded draws."""

    def __init__(self, seed: int):
        self.s = splitmix64_state(seed)

    def next_u64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & _MASK, 7) * 9) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection of the biased low range."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def coin(self) -> bool:
        return bool(self.next_u64() >> 63)

    def state_array(self) -> np.ndarray:
        return np.array(self.s, dtype=np.uint64)


@nb.njit(cache=True)
def _rotl_nb(x, k):
    return (x << np.uint64(k)) | (x >> np.uint64(64 - k))


@nb.njit(cache=True)
def next_u64_nb(s):
    result = _rotl_nb(s[1] * np.uint64(5), 7) * np.uint64(9)
    t = s[1] << np.uint64(17)
    s[2] ^= s[0]
    s[3] ^= s[1]
    s[1] ^= s[2]
    s[0] ^= s[3]
    s[2] ^= t
    s[3] = _rotl_nb(s[3], 45)
    return result


@nb.njit(cache=True)
def below_nb(s, bound):
    b = np.uint64(bound)
    # (2**64) % b computed without overflow
    threshold = (np.uint64(0) - b) % b
    while True:
        r = next_u64_nb(s)
        if r >= threshold:
            return np.int64(r % b)
