"""Deterministic randomness for dealing and code generation.

The generator is SplitMix64, a public-domain 64-bit shift/multiply
generator (Steele, Lea, Flood; used as the seeder in the Java and
xoshiro ecosystems).  It is pinned here, rather than delegating to
``random`` or numpy, so that a recorded seed reproduces the exact same
draws on any platform and any future library version.

state <- state + 0x9E3779B97F4A7C15        (golden-ratio increment)
z <- state
z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
output z ^ (z >> 31)

Residues are drawn by rejection below the largest multiple of the
modulus, so they are exactly uniform, not merely approximately so.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB


class SplitMix64:
    """Tiny deterministic PRNG; one instance per seeded operation."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MUL1) & _MASK
        z = ((z ^ (z >> 27)) * _MUL2) & _MASK
        return z ^ (z >> 31)

    def residue(self, m: int) -> int:
        """Uniform draw from {0, ..., m-1}; m must be positive."""
        if m <= 0:
            raise ValueError("modulus must be positive")
        # largest multiple of m that fits in 64 bits
        bound = (1 << 64) - ((1 << 64) % m)
        while True:
            z = self.next_u64()
            if z < bound:
                return z % m

    def residues(self, count: int, m: int) -> list[int]:
        return [self.residue(m) for _ in range(count)]
