"""Partitions into classes from an upward-closed family of vertex sets.

Both fixing sets and locating sets are closed under supersets, so the
largest partition of V into family members has as many classes as the
largest collection of pairwise disjoint members: leftover vertices can be
dumped into any class.  Sets are bitmasks throughout.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .graph import mask_to_list


def minimal_hitting_sets(n: int, targets: list[int]) -> list[int]:
    """Inclusion-minimal vertex sets meeting every mask in ``targets``."""
    if any(t == 0 for t in targets):
        return []
    found: set[int] = set()
    seen: set[int] = set()

    def rec(chosen: int):
        if chosen in seen:
            return
        seen.add(chosen)
        for t in targets:
            if not chosen & t:
                for v in mask_to_list(t):
                    rec(chosen | 1 << v)
                return
        found.add(chosen)

    rec(0)

    def hits_all(mask):
        return all(mask & t for t in targets)

    minimal = [
        m for m in found
        if not any(hits_all(m & ~(1 << v)) for v in mask_to_list(m))
    ]
    return sorted(minimal, key=lambda m: (m.bit_count(), mask_to_list(m)))


def max_disjoint_packing(n: int, members: list[int]) -> list[int]:
    """A largest collection of pairwise disjoint masks from ``members``.

    Branch and bound on the smallest available vertex: either it goes into
    one of the members containing it, or it is left over.  The bound is
    ``chosen + |available| // smallest member size``.
    """
    if not members:
        return []
    if any(m == 0 for m in members):
        raise ValueError("empty set in family; packing is unbounded")
    min_size = min(m.bit_count() for m in members)
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for m in sorted(members, key=lambda m: (m.bit_count(), mask_to_list(m))):
        by_vertex[(m & -m).bit_length() - 1].append(m)

    best: list[int] = []

    def rec(avail: int, chosen: list[int]):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + avail.bit_count() // min_size <= len(best):
            return
        if not avail:
            return
        low = avail & -avail
        v = low.bit_length() - 1
        for m in by_vertex[v]:
            if m & avail == m:
                chosen.append(m)
                rec(avail & ~m, chosen)
                chosen.pop()
        rec(avail & ~low, chosen)

    rec((1 << n) - 1, [])
    return best


def packing_to_partition(n: int, packing: list[int]) -> list[list[int]]:
    """Classes sorted by smallest member; uncovered vertices join the first class."""
    classes = sorted((mask_to_list(m) for m in packing), key=lambda c: c[0])
    covered = 0
    for m in packing:
        covered |= m
    leftover = mask_to_list(((1 << n) - 1) & ~covered)
    if not classes:
        return [leftover] if leftover else []
    classes[0] = sorted(classes[0] + leftover)
    return sorted(classes, key=lambda c: c[0])


def count_partitions(n: int, k: int, good: Callable[[int], bool], min_size: int = 1) -> int:
    """Unordered partitions of {0..n-1} into exactly k classes, all ``good``.

    Each new class is anchored at the smallest unassigned vertex, so every
    partition is generated once.
    """
    min_size = max(min_size, 1)
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def count(rest: int, classes: int) -> int:
        if classes == 1:
            return int(rest.bit_count() >= min_size and good(rest))
        if rest.bit_count() < classes * min_size:
            return 0
        low = rest & -rest
        others = rest & ~low
        total = 0
        sub = others
        while True:
            cls = sub | low
            remaining = rest & ~cls
            if cls.bit_count() >= min_size and remaining.bit_count() >= (classes - 1) * min_size \
                    and good(cls):
                total += count(remaining, classes - 1)
            if sub == 0:
                break
            sub = (sub - 1) & others
        return total

    if k <= 0 or n == 0:
        return int(k == 0 and n == 0)
    return count(full, k)


def iter_partitions(n: int, k: int, good: Callable[[int], bool], min_size: int = 1) -> Iterator[list[int]]:
    """Same enumeration as :func:`count_partitions`, yielding the class masks."""
    min_size = max(min_size, 1)

    def rec(rest: int, classes: int, acc: list[int]):
        if classes == 1:
            if rest.bit_count() >= min_size and good(rest):
                yield acc + [rest]
            return
        if rest.bit_count() < classes * min_size:
            return
        low = rest & -rest
        others = rest & ~low
        subs = []
        sub = others
        while True:
            subs.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & others
        for sub in reversed(subs):
            cls = sub | low
            remaining = rest & ~cls
            if cls.bit_count() >= min_size and remaining.bit_count() >= (classes - 1) * min_size \
                    and good(cls):
                yield from rec(remaining, classes - 1, acc + [cls])

    if k >= 1 and n >= 1:
        yield from rec((1 << n) - 1, k, [])
