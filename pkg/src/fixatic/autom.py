"""Automorphism groups by individualisation-refinement, plus twin detection.

The search follows the usual skeleton: refine the unit partition to an
equitable one, walk a reference path that always individualises the
smallest vertex of the first non-singleton cell, then, from the deepest
level upwards, look for automorphisms that send the reference vertex of a
level to each other vertex of its cell not already in its orbit.  The
generators found this way build a stabiliser chain, and the group is then
materialised from them.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, list_to_mask
from .permgroup import MATERIALIZATION_CAP, GroupTooLargeError, PermutationGroup, identity

BRUTEFORCE_MAX_N = 8

Cells = list[tuple[int, ...]]


def refine(g: Graph, cells: Cells) -> Cells:
    """Split cells by neighbour counts into every cell until nothing splits.

    Sub-cells are ordered by their signature, which only depends on cell
    indices, so the result commutes with relabelling the graph.
    """
    rows = g.rows
    while True:
        masks = [list_to_mask(c) for c in cells]
        new: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new.append(cell)
                continue
            changed = True
            for key in keys:
                new.append(tuple(v for v in cell if sig[v] == key))
        cells = new
        if not changed:
            return cells


def individualize(cells: Cells, index: int, v: int) -> Cells:
    rest = tuple(x for x in cells[index] if x != v)
    return cells[:index] + [(v,), rest] + cells[index + 1:]


def _first_nonsingleton(cells: Cells) -> int:
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return -1


def _shape(cells: Cells) -> tuple[int, ...]:
    return tuple(len(c) for c in cells)


def is_automorphism(g: Graph, p) -> bool:
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges())


def _search_tree(g: Graph):
    root = refine(g, [tuple(range(g.n))])
    path = []  # (partition, target cell index, individualised vertex)
    part = root
    while (i := _first_nonsingleton(part)) >= 0:
        v = min(part[i])
        path.append((part, i, v))
        part = refine(g, individualize(part, i, v))
    return path, part


def _find_automorphism(g, path, leaf, level, w):
    """An automorphism fixing the path prefix above ``level`` and mapping the
    reference vertex at ``level`` to ``w``; None when there is none."""
    ref_leaf = [c[0] for c in leaf]
    shapes = [_shape(p) for p, _, _ in path] + [_shape(leaf)]

    def dfs(cells, depth):
        if _shape(cells) != shapes[depth]:
            return None
        if depth == len(path):
            perm = [0] * g.n
            for ref_cell, cell in zip(ref_leaf, cells):
                perm[ref_cell] = cell[0]
            perm = tuple(perm)
            return perm if is_automorphism(g, perm) else None
        i = path[depth][1]
        for x in cells[i]:
            found = dfs(refine(g, individualize(cells, i, x)), depth + 1)
            if found is not None:
                return found
        return None

    part, i, _ = path[level]
    return dfs(refine(g, individualize(part, i, w)), level + 1)


def _orbit(v, generators):
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for p in generators:
            y = p[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def automorphism_generators(g: Graph) -> tuple[list[tuple[int, ...]], int]:
    """Strong generators of Aut(g) along the reference base, and the group order."""
    path, leaf = _search_tree(g)
    generators: list[tuple[int, ...]] = []
    order = 1
    for level in range(len(path) - 1, -1, -1):
        part, i, v = path[level]
        orbit = _orbit(v, generators)
        for w in part[i]:
            if w in orbit:
                continue
            perm = _find_automorphism(g, path, leaf, level, w)
            if perm is not None:
                generators.append(perm)
                orbit = _orbit(v, generators)
        order *= len(orbit)
    return generators, order


@lru_cache(maxsize=1 << 16)
def automorphism_group(g: Graph) -> PermutationGroup:
    generators, order = automorphism_generators(g)
    if order > MATERIALIZATION_CAP:
        raise GroupTooLargeError(f"|Aut| = {order} exceeds cap {MATERIALIZATION_CAP}")
    group = PermutationGroup(g.n, generators)
    assert group.order == order, (group.order, order)
    return group


def automorphism_group_bruteforce(g: Graph) -> PermutationGroup:
    """Every permutation preserving adjacency, found by exhaustive enumeration.

    Permutations are built one image at a time; a prefix is abandoned as soon
    as it maps an edge to a non-edge (or vice versa), which discards exactly
    the permutations that would fail the full check.
    """
    n = g.n
    if n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute-force oracle is capped at n <= {BRUTEFORCE_MAX_N}, got {n}")
    found = []
    images = [0] * n
    used = [False] * n

    def extend(v):
        if v == n:
            found.append(tuple(images))
            return
        for x in range(n):
            if used[x]:
                continue
            if any(g.has_edge(u, v) != g.has_edge(images[u], x) for u in range(v)):
                continue
            images[v] = x
            used[x] = True
            extend(v + 1)
            used[x] = False

    extend(0)
    return PermutationGroup(n, generators=found, elements=found)


def twin_sets(g: Graph) -> list[list[int]]:
    """Maximal classes (size >= 2) of the twin relation N(u)-v == N(v)-u."""
    n = g.n
    parent = list(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if g.rows[u] & ~(1 << v) == g.rows[v] & ~(1 << u):
                a, b = parent[u], parent[v]
                # twin relation is an equivalence; classes are merged by smallest label
                root = min(a, b)
                for x in range(n):
                    if parent[x] in (a, b):
                        parent[x] = root
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(parent[v], []).append(v)
    return sorted(c for c in classes.values() if len(c) >= 2)


def saturated_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def transposition_automorphisms(g: Graph) -> list[tuple[int, int]]:
    """Pairs {u, v} for which swapping u and v (fixing all else) is an automorphism."""
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            p = list(identity(g.n))
            p[u], p[v] = v, u
            if is_automorphism(g, p):
                out.append((u, v))
    return out
