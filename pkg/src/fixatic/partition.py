"""Fixatic partitions: partitions of V(G) whose every class is a fixing set."""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .autom import automorphism_group
from .fixing import fixing_number
from .graph import Graph, list_to_mask, mask_to_list
from .packing import (count_partitions, iter_partitions, max_disjoint_packing,
                      minimal_hitting_sets, packing_to_partition)

COUNT_CAP = 12


@dataclass(frozen=True)
class FixaticPartition:
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> "FixaticPartition":
        normalized = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0] if c else -1)
        return cls(tuple(normalized))

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class FixaticResult:
    fxt: int
    witness: FixaticPartition
    pi_t: int | None = None


def partition_defect(g: Graph, classes: Sequence[Iterable[int]]) -> str | None:
    """Why ``classes`` is not a fixatic partition of g, or None if it is.

    Reason codes: ``"empty"``, ``"range"``, ``"overlap"``, ``"cover"``,
    ``"not_fixing"``.
    """
    group = automorphism_group(g)
    seen = 0
    masks = []
    for c in classes:
        c = list(c)
        if not c:
            return "empty"
        if any(not 0 <= v < g.n for v in c):
            return "range"
        m = list_to_mask(c)
        if m & seen or len(set(c)) != len(c):
            return "overlap"
        seen |= m
        masks.append(m)
    if seen != (1 << g.n) - 1:
        return "cover"
    if not all(group.has_trivial_stabilizer(m) for m in masks):
        return "not_fixing"
    return None


def is_fixatic_partition(g: Graph, classes: Sequence[Iterable[int]]) -> bool:
    return partition_defect(g, classes) is None


def minimal_fixing_sets(g: Graph) -> list[tuple[int, ...]]:
    group = automorphism_group(g)
    full = (1 << g.n) - 1
    if group.is_trivial():
        return [()]
    targets = [full & ~ob for ob in group.obstructions()]
    return [tuple(mask_to_list(m)) for m in minimal_hitting_sets(g.n, targets)]


def fixatic_upper_bound(g: Graph) -> int:
    """floor(n / fix(G)); n for rigid graphs, where every singleton is fixing."""
    k = fixing_number(g).size
    return g.n if k == 0 else g.n // k


@lru_cache(maxsize=1 << 16)
def _fixatic(g: Graph) -> FixaticResult:
    if g.n == 0:
        return FixaticResult(0, FixaticPartition(()))
    group = automorphism_group(g)
    if group.is_trivial():
        return FixaticResult(g.n, FixaticPartition.of([v] for v in range(g.n)))
    members = [list_to_mask(s) for s in minimal_fixing_sets(g)]
    packing = max_disjoint_packing(g.n, members)
    classes = packing_to_partition(g.n, packing)
    return FixaticResult(len(classes), FixaticPartition.of(classes))


def fixatic_number(g: Graph, with_count: bool = False, count_cap: int = COUNT_CAP) -> FixaticResult:
    result = _fixatic(g)
    if with_count:
        result = replace(result, pi_t=count_fixatic_partitions(g, cap=count_cap))
    return result


@lru_cache(maxsize=1 << 12)
def _count(g: Graph) -> int:
    group = automorphism_group(g)
    k = _fixatic(g).fxt
    return count_partitions(g.n, k, group.has_trivial_stabilizer, min_size=fixing_number(g).size)


def count_fixatic_partitions(g: Graph, cap: int = COUNT_CAP) -> int:
    """Number of unordered fixatic partitions with F_xt(G) classes."""
    if g.n > cap:
        raise ValueError(f"partition counting is capped at n <= {cap}, got {g.n}")
    return _count(g)


def iter_max_fixatic_partitions(g: Graph, cap: int = COUNT_CAP) -> Iterator[FixaticPartition]:
    if g.n > cap:
        raise ValueError(f"partition enumeration is capped at n <= {cap}, got {g.n}")
    group = automorphism_group(g)
    k = _fixatic(g).fxt
    for masks in iter_partitions(g.n, k, group.has_trivial_stabilizer,
                                 min_size=fixing_number(g).size):
        yield FixaticPartition.of(mask_to_list(m) for m in masks)
