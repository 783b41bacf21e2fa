"""Simple undirected graphs on vertices 0..n-1.

Adjacency is kept as one integer bitmask per vertex, so ``rows[v] >> u & 1``
answers edge membership and ``rows[v]`` doubles as the neighbourhood set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

GRAPH6_MAX_N = 62


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            u = row
            while u:
                low = u & -u
                w = low.bit_length() - 1
                if not self.rows[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
                u ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return mask_to_list(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in mask_to_list(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Subgraph induced on ``keep``, relabelled in increasing vertex order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.induced(v for v in range(self.n) if v not in drop)

    def relabel(self, perm) -> "Graph":
        """Graph whose edge set is {perm[u] perm[v] : uv in E}."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def list_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# graph6 ---------------------------------------------------------------------

def _upper_triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {pos}: character {ch!r} outside 63..126")
    if ord(s[0]) == 126:
        raise GraphFormatError("byte 0: long-form graph6 (n > 62) is not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise GraphFormatError(
            f"byte 0: length byte says n={n}, expecting {nbytes} data bytes, got {len(s) - 1}"
        )
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError(f"byte {len(s) - 1}: nonzero padding bits")
    edges = [pair for pair, bit in zip(_upper_triangle_pairs(n), bits) if bit]
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6 encoding supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [int(g.has_edge(i, j)) for i, j in _upper_triangle_pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# edge lists -----------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line))
    if not lines:
        raise GraphFormatError("missing 'n m' header")

    def ints(lineno, line, count):
        parts = line.split()
        if len(parts) != count:
            raise GraphFormatError(f"line {lineno}: expected {count} integers, got {line!r}")
        try:
            return [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {line!r}") from None

    n, m = ints(*lines[0], 2)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lines[0][0]}: negative header value")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)} edge lines")
    edges = []
    for lineno, line in body:
        u, v = ints(lineno, line, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Accept either a single graph6 token or an edge list."""
    stripped = [ln for ln in text.strip().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(stripped) == 1 and len(stripped[0].split()) == 1:
        return parse_graph6(stripped[0])
    return parse_edge_list(text)


# graph algebra --------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.rows + tuple(row << shift for row in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    block1 = (1 << g1.n) - 1
    block2 = ((1 << g2.n) - 1) << g1.n
    rows = tuple(row | block2 for row in g1.rows) + tuple(
        (row << g1.n) | block1 for row in g2.rows
    )
    return Graph(g1.n + g2.n, rows)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        new = g.rows[v] & ~seen
        seen |= new
        queue.extend(mask_to_list(new))
    return seen == (1 << g.n) - 1
