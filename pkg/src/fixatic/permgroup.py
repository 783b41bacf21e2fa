"""Vertex permutations and explicitly materialised permutation groups.

A permutation is a tuple ``p`` with ``p[v]`` the image of ``v``.  Products
follow the "right operand acts first" convention: ``compose(p, q)[v] ==
p[q[v]]``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]

MATERIALIZATION_CAP = 10**6


class GroupTooLargeError(RuntimeError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[x] for x in q)


def invert(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for v, image in enumerate(p):
        inv[image] = v
    return tuple(inv)


def moved_points(p: Sequence[int]) -> list[int]:
    return [v for v, image in enumerate(p) if image != v]


def fixed_mask(p: Sequence[int]) -> int:
    mask = 0
    for v, image in enumerate(p):
        if image == v:
            mask |= 1 << v
    return mask


def closure(degree: int, generators: Iterable[Perm], cap: int = MATERIALIZATION_CAP) -> frozenset[Perm]:
    """All products of ``generators`` (breadth-first from the identity)."""
    gens = [g for g in generators if g != identity(degree)]
    elements = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        if len(elements) > cap:
            raise GroupTooLargeError(f"group exceeds materialisation cap {cap}")
        frontier = nxt
    return frozenset(elements)


class PermutationGroup:
    """A permutation group on {0..degree-1} with its element list materialised.

    Construct from generators; ``elements`` may be supplied when already
    known (e.g. when filtering a stabiliser out of a larger group).
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = (),
                 elements: Iterable[Perm] | None = None, cap: int = MATERIALIZATION_CAP):
        gens = [tuple(g) for g in generators]
        if elements is None:
            for g in gens:
                if len(g) != degree or not is_permutation(g):
                    raise ValueError(f"not a permutation of degree {degree}: {g}")
        ident = identity(degree)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(sorted(set(gens) - {ident}))
        if elements is None:
            self.elements = closure(degree, self.generators, cap)
        else:
            self.elements = frozenset(elements) | {ident}
        self._orbits = None
        self._obstructions = None

    @classmethod
    def trivial(cls, degree: int) -> "PermutationGroup":
        return cls(degree)

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={self.order})"

    def orbits(self) -> list[list[int]]:
        if self._orbits is None:
            parent = list(range(self.degree))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for p in self.elements:
                for v, image in enumerate(p):
                    a, b = find(v), find(image)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
            classes: dict[int, list[int]] = {}
            for v in range(self.degree):
                classes.setdefault(find(v), []).append(v)
            self._orbits = sorted(classes.values())
        return [list(o) for o in self._orbits]

    def orbit_of(self, v: int) -> list[int]:
        return sorted({p[v] for p in self.elements})

    def stabilizer(self, points: Iterable[int]) -> "PermutationGroup":
        points = list(points)
        for v in points:
            if not 0 <= v < self.degree:
                raise ValueError(f"vertex {v} out of range for degree {self.degree}")
        if not points:
            return self
        kept = [p for p in self.elements if all(p[v] == v for v in points)]
        return PermutationGroup(self.degree, generators=kept, elements=kept)

    def obstructions(self) -> tuple[int, ...]:
        """Inclusion-maximal fixed-point masks of non-identity elements.

        A vertex set F (as a mask) has trivial pointwise stabiliser iff it is
        contained in none of these masks.
        """
        if self._obstructions is None:
            full = (1 << self.degree) - 1
            masks = {fixed_mask(p) for p in self.elements}
            masks.discard(full)
            maximal = []
            for m in sorted(masks, key=lambda x: -x.bit_count()):
                if not any(m & big == m for big in maximal):
                    maximal.append(m)
            self._obstructions = tuple(sorted(maximal))
        return self._obstructions

    def has_trivial_stabilizer(self, mask: int) -> bool:
        return all(mask & ob != mask for ob in self.obstructions())


def orbits(grp: PermutationGroup) -> list[list[int]]:
    return grp.orbits()


def pointwise_stabilizer(grp: PermutationGroup, F: Iterable[int]) -> PermutationGroup:
    return grp.stabilizer(F)


def group_order(grp: PermutationGroup) -> int:
    return grp.order
