"""Small deterministic 64-bit RNG helpers shared by the pure-Python kernels
and the experiment seed derivation. The Cython kernels reimplement the same
generators on C uint64 so both backends draw identical streams.
"""

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(z: int) -> int:
    z = (z + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def xorshift64star(state: int) -> tuple[int, int]:
    """Advance one step; returns (new_state, output). State must be nonzero."""
    state ^= state >> 12
    state = (state ^ (state << 25)) & MASK64
    state ^= state >> 27
    return state, (state * 0x2545F4914F6CDD1D) & MASK64


def seed_state(seed: int, stream: int = 0) -> int:
    """Nonzero xorshift state for (seed XOR stream)."""
    s = splitmix64((seed ^ stream) & MASK64)
    return s if s != 0 else _GOLDEN


def mix(*values: int) -> int:
    """Deterministic hash of a tuple of integers into a 64-bit seed."""
    h = _GOLDEN
    for v in values:
        h = splitmix64((h ^ (v & MASK64)) & MASK64)
    return h
