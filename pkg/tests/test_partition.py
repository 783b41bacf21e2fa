import pytest
from hypothesis import given, settings

from conftest import graphs, random_graphs
from oracles import all_automorphisms, brute_fixatic, stabilizer_trivial
from fixatic.families import complete, cycle, example1_standin, path, star
from fixatic.fixing import fixing_number
from fixatic.graph import Graph
from fixatic.partition import (FixaticPartition, count_fixatic_partitions, fixatic_number,
                               fixatic_upper_bound, is_fixatic_partition,
                               iter_max_fixatic_partitions, partition_defect)

RIGID_TREE = Graph.from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])


@pytest.mark.parametrize("classes, reason", [
    ([[0, 1], [2, 3]], None),
    ([[0, 2], [1, 3]], "not_fixing"),
    ([[0, 1, 2, 3]], None),
    ([[0, 1], [2]], "cover"),
    ([[0, 1], [1, 2, 3]], "overlap"),
    ([[0, 1], [], [2, 3]], "empty"),
    ([[0, 1], [2, 5]], "range"),
])
def test_partition_defect_c4(classes, reason):
    assert partition_defect(cycle(4), classes) == reason
    assert is_fixatic_partition(cycle(4), classes) == (reason is None)


@pytest.mark.parametrize("g, fxt, pi", [
    (cycle(5), 2, 10), (cycle(7), 3, 105), (cycle(9), 4, 1260), (star(3), 1, 1),
    (complete(4), 1, 1), (example1_standin(), 6, 6), (path(4), 4, 1), (cycle(4), 2, 2),
    (RIGID_TREE, 7, 1),
])
def test_fixatic_examples(g, fxt, pi):
    r = fixatic_number(g, with_count=True)
    assert (r.fxt, r.pi_t) == (fxt, pi)
    assert len(r.witness) == fxt
    assert is_fixatic_partition(g, r.witness.classes)


def test_upper_bound_examples():
    assert fixatic_upper_bound(cycle(5)) == 2
    assert fixatic_upper_bound(path(7)) == 7
    assert fixatic_upper_bound(RIGID_TREE) == 7
    assert fixatic_upper_bound(complete(4)) == 1


def test_partition_normalization():
    assert FixaticPartition.of([[3, 2], [1, 0]]).classes == ((0, 1), (2, 3))


def test_count_cap():
    with pytest.raises(ValueError):
        count_fixatic_partitions(path(13))


def test_matches_oracle_exhaustive(corpus_upto5):
    for g in corpus_upto5:
        r = fixatic_number(g, with_count=True)
        assert (r.fxt, r.pi_t) == brute_fixatic(g)


@pytest.mark.slow
def test_matches_oracle_n6(corpus6):
    for g in corpus6:
        r = fixatic_number(g, with_count=True)
        assert (r.fxt, r.pi_t) == brute_fixatic(g)


def test_matches_oracle_random():
    for g in random_graphs(40, [6, 7], seed=17):
        r = fixatic_number(g, with_count=True)
        assert (r.fxt, r.pi_t) == brute_fixatic(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_fixatic_properties(g):
    r = fixatic_number(g, with_count=True)
    k = fixing_number(g).size
    assert 1 <= r.fxt <= fixatic_upper_bound(g)
    if k > 0:
        assert r.fxt * k <= g.n
    parts = list(iter_max_fixatic_partitions(g))
    assert len(parts) == len(set(parts)) == r.pi_t >= 1
    assert r.witness in parts
    auts = all_automorphisms(g)
    for p in parts:
        assert len(p) == r.fxt
        assert sorted(v for c in p.classes for v in c) == list(range(g.n))
        assert all(stabilizer_trivial(auts, c) for c in p.classes)


def test_interchange_invariant():
    # in a maximum fixatic partition every class is a fixing set, so for any two
    # classes neither is needed to fix the vertices of the other
    for g in random_graphs(30, [5, 6], seed=23):
        for p in iter_max_fixatic_partitions(g):
            for c in p.classes:
                assert is_fixatic_partition(g, [c, [v for v in range(g.n) if v not in c]]) \
                    or len(p) == 1
