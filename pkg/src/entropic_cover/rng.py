"""xoshiro256** seeded through splitmix64.

Small and fully specified so sample points can be reproduced from another
language: ``uniform`` uses the top 53 bits of one output, ``randint`` uses
rejection on the smallest covering power of two.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


def _splitmix64(state: int):
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        yield z ^ (z >> 31)


class Xoshiro256:
    def __init__(self, seed: int = 0):
        gen = _splitmix64(seed & _MASK)
        self.s = [next(gen) for _ in range(4)]

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

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` inclusive."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        bits = max(1, (span - 1).bit_length())
        while True:
            v = self.next_u64() >> (64 - bits)
            if v < span:
                return lo + v

    def even(self, lo: int, hi: int) -> int:
        """Uniform even integer in ``[lo, hi]``."""
        a = -((-lo) // 2)
        return 2 * self.randint(a, hi // 2)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]
