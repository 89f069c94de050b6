"""Integer helpers for the logarithmic constants and radius schedules."""

import math
from typing import List


def log2_ceil(n: int) -> int:
    """ceil(log2 n), with log2_ceil(1) = 0 and log2_ceil(0) = 0."""
    if n <= 1:
        return 0
    return (n - 1).bit_length()


def log_factor(n: int) -> int:
    """ceil(log2 n) floored at 1, the multiplier used by every sample size."""
    return max(1, log2_ceil(n))


def loglog(n: int) -> int:
    """LL(n) = max(1, ceil(log2 log2 max(n, 4)))."""
    return max(1, math.ceil(math.log2(math.log2(max(n, 4)))))


def klogk_rounds(k: int) -> int:
    """Round count K = max(10, ceil(10 k log2 max(k, 2)))."""
    return max(10, math.ceil(10 * k * math.log2(max(k, 2))))


def at_most(value: float, bound: float) -> bool:
    """value <= bound with a relative tolerance for float powers."""
    return value <= bound * (1 + 1e-12) + 1e-12


def geometric_schedule(lo: int, hi: int, epsilon: float) -> List[int]:
    """Increasing integer radii covering [lo, hi] with ratio at most 1 + epsilon.

    The first radius is min(hi, max(lo, floor(lo * (1 + epsilon)))); each next
    one is max(prev + 1, floor(prev * (1 + epsilon))) capped at hi. Any value
    D in [lo, hi] has a schedule entry R with D <= R <= (1 + epsilon) * D.

    Raises:
        ValueError: if epsilon <= 0 or lo < 1
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if lo < 1:
        raise ValueError(f"schedule must start at a positive radius, got {lo}")
    hi = max(hi, lo)
    radius = min(hi, max(lo, math.floor(lo * (1 + epsilon))))
    schedule = [radius]
    while radius < hi:
        radius = min(hi, max(radius + 1, math.floor(radius * (1 + epsilon))))
        schedule.append(radius)
    return schedule


def dyadic_schedule(hi: int) -> List[int]:
    """Radii 2^i for 0 <= i <= ceil(log2 hi)."""
    return [1 << i for i in range(log2_ceil(max(hi, 1)) + 1)]
