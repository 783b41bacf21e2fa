"""Fixing sets and the fixing number (minimum base size of Aut(G) on V)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .autom import automorphism_group
from .graph import Graph, list_to_mask
from .permgroup import PermutationGroup, fixed_mask

ENUMERATION_CAP = 16


@dataclass(frozen=True)
class FixingWitness:
    size: int
    witness: tuple[int, ...]


def _check_vertices(g: Graph, F: Iterable[int]) -> list[int]:
    F = list(F)
    for v in F:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return F


def is_fixing_set(g: Graph, F: Iterable[int]) -> bool:
    F = _check_vertices(g, F)
    return automorphism_group(g).has_trivial_stabilizer(list_to_mask(F))


def minimum_base(group: PermutationGroup) -> tuple[int, ...]:
    """Smallest point set with trivial pointwise stabiliser.

    Recursion: a trivial group needs nothing; otherwise try one representative
    (the smallest vertex) from each non-trivial orbit, stabilise it and
    recurse.  Vertices in one orbit have conjugate stabilisers, so one
    representative per orbit is enough.  Stabilisers are memoised by the set
    of points they fix, which determines them.
    """
    memo: dict[int, tuple[int, ...]] = {}

    def fixed_points(elements) -> int:
        mask = (1 << group.degree) - 1
        for p in elements:
            mask &= fixed_mask(p)
        return mask

    def best(elements: list, budget: int) -> tuple[int, ...] | None:
        # smallest base of the group given by ``elements`` using < budget points
        if len(elements) == 1:
            return () if budget > 0 else None
        if budget <= 1:
            return None
        key = fixed_points(elements)
        if key in memo:
            r = memo[key]
            return r if len(r) < budget else None
        sub_group = PermutationGroup(group.degree, elements=elements)
        result = None
        for orbit in sub_group.orbits():
            if len(orbit) < 2:
                continue
            v = orbit[0]
            stab = [p for p in elements if p[v] == v]
            r = best(stab, budget - 1)
            if r is not None:
                result = (v,) + r
                budget = len(result)
        if result is not None:
            memo[key] = result
        return result

    base = best(list(group.elements), group.degree + 1)
    return tuple(sorted(base))


@lru_cache(maxsize=1 << 16)
def fixing_number(g: Graph) -> FixingWitness:
    base = minimum_base(automorphism_group(g))
    return FixingWitness(len(base), base)


def minimum_fixing_sets(g: Graph, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    if g.n > cap:
        raise ValueError(f"minimum_fixing_sets is capped at n <= {cap}, got {g.n}")
    group = automorphism_group(g)
    k = fixing_number(g).size
    return [F for F in combinations(range(g.n), k)
            if group.has_trivial_stabilizer(list_to_mask(F))]


def fixing_vertices(g: Graph) -> list[int]:
    group = automorphism_group(g)
    return [v for v in range(g.n) if group.has_trivial_stabilizer(1 << v)]
