"""Deterministic, platform-stable random number generation.

SplitMix64 is used directly as the draw engine: it is a well-known
64-bit generator whose output depends only on integer arithmetic, so
identical seeds give identical draw sequences on every platform and
library version. Unit-interval doubles take the top 53 bits; bounded
integers use rejection sampling to avoid modulo bias.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SeededRng:
    """SplitMix64 stream seeded by a 64-bit value."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both endpoints inclusive.

        Rejection sampling over the largest multiple of the range width
        keeps the draw exactly uniform.
        """
        if hi < lo:
            raise ValueError("empty integer range")
        n = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % n


def derive_stream_seed(master_seed: int, index: int) -> int:
    """Mix a master seed with a stable file index into an independent
    per-item stream seed. Pure 64-bit arithmetic; scheduling-independent."""
    return _mix((master_seed ^ ((index + 1) * _GAMMA)) & _MASK64)
