import pytest

from oracles import isomorphic
from fixatic.autom import automorphism_group
from fixatic.families import (FAMILIES, broom_pair, caterpillar2, circulant, complete, cycle,
                              double_broom, family_graph, generate, k4_minus_e, path,
                              spider_dan1, spider_rslt, star)
from fixatic.fixing import fixing_number
from fixatic.graph import is_connected
from fixatic.partition import fixatic_number


def test_basic_families():
    assert path(4).m == 3 and cycle(5).m == 5 and complete(5).m == 10
    assert star(3).degree(0) == 3
    assert generate("complete_bipartite", [2, 3]).m == 6
    assert k4_minus_e().m == 5 and not k4_minus_e().has_edge(0, 1)


def test_circulant():
    assert circulant(5, [1, 4]) == cycle(5)
    assert isomorphic(circulant(7, [2, 5]), cycle(7))
    assert circulant(5, [1, 2, 3, 4]) == complete(5)
    assert generate("circulant", [7, 1, 6]) == generate("circulant", [7, {1, 6}])
    assert family_graph("circulant", [7, {6, 1}]).params == (7, 1, 6)


@pytest.mark.parametrize("S", [[1], [0, 1, 6], [7], [1, 6, 8]])
def test_circulant_errors(S):
    with pytest.raises(ValueError):
        circulant(7, S)


def test_unknown_family():
    with pytest.raises(ValueError):
        generate("hypercube", [3])


@pytest.mark.parametrize("fn, t, pair", [
    (broom_pair, 2, (2, 2)), (broom_pair, 3, (3, 3)),
    (spider_dan1, 2, (2, 3)), (spider_dan1, 3, (3, 4)),
    (spider_rslt, 1, (1, 2)), (spider_rslt, 2, (2, 4)),
])
def test_realizing_families(fn, t, pair):
    g = fn(t)
    assert is_connected(g)
    assert (fixing_number(g).size, fixatic_number(g).fxt) == pair


@pytest.mark.parametrize("t", [4, 5])
def test_caterpillar_sum(t):
    g = caterpillar2(t)
    assert fixing_number(g).size + fixatic_number(g).fxt == t


@pytest.mark.parametrize("t", [3, 4])
def test_double_broom_difference(t):
    g = double_broom(t)
    assert is_connected(g)
    assert abs(fixing_number(g).size - fixatic_number(g).fxt) == t


def test_every_family_generates():
    for name, (usage, fn) in FAMILIES.items():
        params = {"n": 5, "k": 3, "t": 3, "a": 2, "b": 3}
        args = [params[u] for u in usage.split()] if fn else [7, 1, 6]
        assert automorphism_group(generate(name, args)).order >= 1
