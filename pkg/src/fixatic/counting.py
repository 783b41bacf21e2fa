"""Exact set-partition and surjection counts (Python ints, no floats)."""

from __future__ import annotations

import logging
from functools import lru_cache
from math import comb, factorial

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs n, k >= 0")
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def surjection_count(n: int, k: int) -> int:
    """Number of surjections from an n-set onto a k-set."""
    return factorial(k) * stirling2(n, k)


def surjection_count_inclusion_exclusion(n: int, k: int) -> int:
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))


def multinomial(n: int, parts: list[int]) -> int:
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"parts {parts} must be non-negative and sum to {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def equal_class_partition_count(n: int, k: int, i: int) -> int:
    """Partitions of an n-set into k unlabelled classes of size i each."""
    if n != k * i:
        raise ValueError(f"n={n} is not k*i={k * i}")
    return factorial(n) // (factorial(i) ** k * factorial(k))


def odd_cycle_partition_count(n: int) -> int:
    """Maximum fixatic partitions of an odd cycle: one triple, the rest pairs.

    (n choose 3) * multinomial(n-3; 2,...,2) / (floor(n/2)-1)!
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"odd cycle order must be odd and >= 3, got {n}")
    pairs = n // 2 - 1
    if pairs == 0:
        # C_3 = K_3: a single class; the closed form is not meant for this case
        log.info("odd_cycle_partition_count(3) is outside the closed form's range; returning 1")
        return 1
    value = comb(n, 3) * multinomial(n - 3, [2] * pairs)
    assert value % factorial(pairs) == 0
    return value // factorial(pairs)
