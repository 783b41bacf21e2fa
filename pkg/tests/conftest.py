import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from fixatic.claims import scan_connected_graphs  # noqa: E402
from fixatic.graph import Graph  # noqa: E402


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def random_graphs(count, sizes, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice(sizes)
        out.append(Graph.from_edges(
            n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]))
    return out


@pytest.fixture(scope="session")
def corpus_upto5():
    return [g for n in range(1, 6) for g in scan_connected_graphs(n)]


@pytest.fixture(scope="session")
def corpus6():
    return list(scan_connected_graphs(6))
