"""Locating (resolving) sets, location number and locatic number."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .graph import Graph, is_connected, list_to_mask, mask_to_list
from .packing import max_disjoint_packing, packing_to_partition

LOCATIC_CAP = 12


class DisconnectedGraphError(ValueError):
    pass


def _require_connected(g: Graph):
    if not is_connected(g):
        raise DisconnectedGraphError("distances are only defined on connected graphs")


@lru_cache(maxsize=1 << 14)
def distance_matrix(g: Graph) -> tuple[tuple[int, ...], ...]:
    _require_connected(g)
    rows = []
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        rows.append(tuple(dist))
    return tuple(rows)


def codes(g: Graph, W: Sequence[int]) -> list[tuple[int, ...]]:
    d = distance_matrix(g)
    return [tuple(d[v][w] for w in W) for v in range(g.n)]


def is_locating_set(g: Graph, W: Sequence[int]) -> bool:
    W = list(W)
    if not W:
        raise ValueError("locating set must be non-empty")
    for w in W:
        if not 0 <= w < g.n:
            raise ValueError(f"vertex {w} out of range for n={g.n}")
    c = codes(g, W)
    return len(set(c)) == len(c)


def location_number(g: Graph) -> int:
    _require_connected(g)
    if g.n <= 1:
        return 0 if g.n == 0 else 1
    for k in range(1, g.n + 1):
        for W in combinations(range(g.n), k):
            if is_locating_set(g, W):
                return k
    raise AssertionError("V itself is always locating")


def minimal_locating_sets(g: Graph) -> list[int]:
    _require_connected(g)
    full = (1 << g.n) - 1
    locating = set()
    for mask in range(1, full + 1):
        if is_locating_set(g, mask_to_list(mask)):
            locating.add(mask)
    return sorted(m for m in locating
                  if not any((m & ~(1 << v)) in locating for v in mask_to_list(m)))


@lru_cache(maxsize=1 << 14)
def _locatic(g: Graph) -> tuple[tuple[int, ...], ...]:
    packing = max_disjoint_packing(g.n, minimal_locating_sets(g))
    return tuple(tuple(mask_to_list(m)) for m in packing)


def locatic_partition(g: Graph, cap: int = LOCATIC_CAP) -> list[list[int]]:
    """A largest partition of V into locating sets."""
    if g.n > cap:
        raise ValueError(f"locatic number is capped at n <= {cap}, got {g.n}")
    _require_connected(g)
    return packing_to_partition(g.n, [list_to_mask(c) for c in _locatic(g)])


def locatic_number(g: Graph, cap: int = LOCATIC_CAP) -> int:
    return len(locatic_partition(g, cap))
