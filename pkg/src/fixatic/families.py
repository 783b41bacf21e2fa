"""Labelled generators for the graph families used by the realizability results.

Labelling convention: root/spine vertices first, then the legs in order (each
leg listed from the vertex nearest the root outwards), then leaf blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class FamilyGraph:
    """A generated graph together with the family name and parameters that built it."""
    family: str
    params: tuple
    graph: Graph


def _need(params, count, name):
    if len(params) != count:
        raise ValueError(f"{name} takes {count} parameter(s), got {list(params)}")
    for p in params:
        if not isinstance(p, int):
            raise ValueError(f"{name} parameters must be integers, got {p!r}")


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star(k: int) -> Graph:
    """K_{1,k}: centre 0, leaves 1..k."""
    if k < 1:
        raise ValueError("star needs k >= 1")
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def circulant(n: int, S: Sequence[int]) -> Graph:
    """Cayley graph Cay(Z_n; S): i ~ j iff j - i mod n lies in S."""
    if n < 1:
        raise ValueError("circulant needs n >= 1")
    conn = set(S)
    if any(not 0 < s < n for s in conn):
        raise ValueError(f"connection set must lie in 1..{n - 1} (0 not allowed): {sorted(conn)}")
    if any((n - s) % n not in conn for s in conn):
        raise ValueError(f"connection set is not closed under negation mod {n}: {sorted(conn)}")
    return Graph.from_edges(n, ((i, (i + s) % n) for i in range(n) for s in conn))


def _attach_paths(edges, next_vertex, root, count, length):
    """Hang ``count`` paths of ``length`` vertices on ``root``; returns next free label."""
    for _ in range(count):
        prev = root
        for _ in range(length):
            edges.append((prev, next_vertex))
            prev = next_vertex
            next_vertex += 1
    return next_vertex


def broom_pair(t: int) -> Graph:
    """Edge uv (u=0, v=1), two pendant paths of order t-1 at u, t at v."""
    if t < 2:
        raise ValueError("broom_pair needs t >= 2")
    edges = [(0, 1)]
    nxt = _attach_paths(edges, 2, 0, 2, t - 1)
    nxt = _attach_paths(edges, nxt, 1, t, t - 1)
    assert nxt == 2 + (t - 1) * (t + 2)
    return Graph.from_edges(nxt, edges)


def spider(legs: int, length: int) -> Graph:
    edges = []
    nxt = _attach_paths(edges, 1, 0, legs, length)
    return Graph.from_edges(nxt, edges)


def spider_dan1(t: int) -> Graph:
    """Root 0 with t+1 legs of order t."""
    if t < 2:
        raise ValueError("spider_dan1 needs t >= 2")
    return spider(t + 1, t)


def spider_rslt(t: int) -> Graph:
    """Root 0 with t+1 legs of order 2t-1."""
    if t < 1:
        raise ValueError("spider_rslt needs t >= 1")
    return spider(t + 1, 2 * t - 1)


def caterpillar2(t: int) -> Graph:
    """Spine path 0..t-3, then two leaves per spine vertex."""
    if t < 3:
        raise ValueError("caterpillar2 needs t >= 3")
    spine = t - 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        edges += [(i, nxt), (i, nxt + 1)]
        nxt += 2
    return Graph.from_edges(nxt, edges)


def double_broom(t: int) -> Graph:
    """Edge uv (u=0, v=1) with leaves: (t+4)/2 on u and (t+2)/2 on v for even t,
    ceil(t/2)+1 on each for odd t."""
    if t < 3:
        raise ValueError("double_broom needs t >= 3")
    if t % 2 == 0:
        a, b = (t + 4) // 2, (t + 2) // 2
    else:
        a = b = (t + 1) // 2 + 1
    edges = [(0, 1)]
    nxt = _attach_paths(edges, 2, 0, a, 1)
    nxt = _attach_paths(edges, nxt, 1, b, 1)
    return Graph.from_edges(nxt, edges)


def k4_minus_e() -> Graph:
    """K_4 without the edge 0-1 (so 2 and 3 are the saturated vertices)."""
    return Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def example1_standin() -> Graph:
    """P_7: automorphism group of order 2 fixing exactly the centre vertex."""
    return path(7)


FAMILIES: dict[str, tuple[str, Callable[..., Graph]]] = {
    "path": ("n", path),
    "cycle": ("n", cycle),
    "complete": ("n", complete),
    "star": ("k", star),
    "complete_bipartite": ("a b", complete_bipartite),
    "circulant": ("n s1 s2 ...", None),
    "broom_pair": ("t", broom_pair),
    "spider_dan1": ("t", spider_dan1),
    "caterpillar2": ("t", caterpillar2),
    "spider_rslt": ("t", spider_rslt),
    "double_broom": ("t", double_broom),
    "k4_minus_e": ("", k4_minus_e),
    "example1_standin": ("", example1_standin),
}


def generate(family: str, params: Sequence = ()) -> Graph:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    params = list(params)
    if family == "circulant":
        if not params:
            raise ValueError("circulant takes n followed by the connection set")
        n, rest = params[0], params[1:]
        if len(rest) == 1 and not isinstance(rest[0], int):
            rest = list(rest[0])
        return circulant(n, rest)
    usage, fn = FAMILIES[family]
    _need(params, len(usage.split()), family)
    return fn(*params)


def family_graph(family: str, params: Sequence = ()) -> FamilyGraph:
    params = list(params)
    if family == "circulant" and len(params) == 2 and not isinstance(params[1], int):
        params = [params[0], *sorted(params[1])]
    return FamilyGraph(family, tuple(params), generate(family, params))
