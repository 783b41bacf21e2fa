import pytest
from hypothesis import given, strategies as st

from oracles import all_automorphisms
from fixatic.families import complete, cycle, path, star
from fixatic.permgroup import (PermutationGroup, closure, compose, group_order, identity, invert,
                               orbits, pointwise_stabilizer)


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


def group_of(g):
    elems = all_automorphisms(g)
    return PermutationGroup(g.n, generators=elems, elements=elems)


def test_compose_applies_right_first():
    assert compose([1, 0, 2], [0, 2, 1]) == (1, 2, 0)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_group_laws(pqr):
    p, q, r = pqr
    n = len(p)
    assert compose(p, identity(n)) == p == compose(identity(n), p)
    assert compose(p, invert(p)) == identity(n) == compose(invert(p), p)
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


def test_orbits_examples():
    assert orbits(group_of(cycle(4))) == [[0, 1, 2, 3]]
    assert orbits(group_of(path(4))) == [[0, 3], [1, 2]]
    assert orbits(group_of(star(3))) == [[0], [1, 2, 3]]


def test_stabilizer_examples():
    c4 = group_of(cycle(4))
    s0 = pointwise_stabilizer(c4, [0])
    assert group_order(s0) == 2
    assert (0, 3, 2, 1) in s0
    assert pointwise_stabilizer(c4, [0, 1]).is_trivial()
    assert pointwise_stabilizer(c4, range(4)).is_trivial()
    assert pointwise_stabilizer(c4, []) == c4
    with pytest.raises(ValueError):
        pointwise_stabilizer(c4, [4])


@pytest.mark.parametrize("g, order", [(complete(4), 24), (cycle(5), 10), (path(4), 2)])
def test_group_order(g, order):
    grp = group_of(g)
    assert group_order(grp) == order
    # generating set of the full group closes to the same element set
    assert PermutationGroup(g.n, grp.generators) == grp


def test_trivial_group():
    t = PermutationGroup.trivial(3)
    assert t.order == 1 and t.generators == () and t.is_trivial()
    assert PermutationGroup(3, [(0, 1, 2)]).generators == ()


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        PermutationGroup(3, [(0, 0, 1)])


@given(st.integers(1, 6).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=3)))
def test_closure_is_a_group(gens):
    n = len(gens[0])
    grp = PermutationGroup(n, gens)
    els = grp.elements
    assert identity(n) in els
    for p in els:
        assert invert(p) in els
        for g in gens:
            assert compose(g, p) in els
    assert (grp.order == 1) == all(g == identity(n) for g in gens)


@given(st.integers(1, 6).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=3)))
def test_orbit_stabilizer_and_antitone(gens):
    n = len(gens[0])
    grp = PermutationGroup(n, gens)
    for v in range(n):
        assert grp.order == len(grp.orbit_of(v)) * grp.stabilizer([v]).order
    for v in range(n):
        for w in range(n):
            small = grp.stabilizer([v, w]).elements
            assert small <= grp.stabilizer([v]).elements


def test_obstructions_match_stabilizers():
    grp = group_of(cycle(6))
    for mask in range(1 << 6):
        F = [v for v in range(6) if mask >> v & 1]
        assert grp.has_trivial_stabilizer(mask) == grp.stabilizer(F).is_trivial()


def test_closure_matches_explicit_for_small_graphs(corpus_upto5):
    for g in corpus_upto5[::7]:
        grp = group_of(g)
        assert closure(g.n, grp.generators) == grp.elements
