"""Scalar splitmix64, the reference for the array kernels.

Output ``i`` of the stream keyed by ``seed`` is ``mix64(seed + (i + 1) * GOLDEN)``
(mod 2**64), which is exactly the i-th value of Vigna's SplitMix64 started at
``seed``. Being counter-based, any output can be computed independently.
"""

RNG_ALGORITHM = "splitmix64-counter-v1"

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MUL1 = 0xBF58476D1CE4E5B9
MUL2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * MUL1) & MASK64
    z = ((z ^ (z >> 27)) * MUL2) & MASK64
    return z ^ (z >> 31)


def splitmix64_at(seed: int, i: int) -> int:
    return mix64(seed + (i + 1) * GOLDEN)


def splitmix64_stream(seed: int, count: int) -> list[int]:
    return [splitmix64_at(seed, i) for i in range(count)]


def trial_seed(master_seed: int, trial: int) -> int:
    """Seed of Monte Carlo trial ``trial``; independent of scheduling."""
    return splitmix64_at(master_seed ^ 0x5851F42D4C957F2D, trial)
