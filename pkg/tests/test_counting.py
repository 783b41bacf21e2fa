from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import set_partitions
from fixatic.counting import (equal_class_partition_count, multinomial, odd_cycle_partition_count,
                              stirling2, surjection_count, surjection_count_inclusion_exclusion)


def test_values():
    assert stirling2(4, 2) == 7
    assert surjection_count(3, 2) == 6
    assert multinomial(6, [2, 2, 2]) == 90
    assert equal_class_partition_count(6, 3, 2) == 15
    assert equal_class_partition_count(4, 2, 2) == 3
    assert [odd_cycle_partition_count(n) for n in (5, 7, 9)] == [10, 105, 1260]


def test_stirling_against_enumeration():
    for n in range(0, 8):
        counts = {}
        for p in set_partitions(range(n)):
            counts[len(p)] = counts.get(len(p), 0) + 1
        for k in range(0, n + 1):
            assert stirling2(n, k) == counts.get(k, 0)


@given(st.integers(0, 10), st.integers(0, 10))
def test_surjection_formulas_agree(n, k):
    assert surjection_count(n, k) == surjection_count_inclusion_exclusion(n, k)


def test_equal_class_against_enumeration():
    for n, k, i in [(4, 2, 2), (6, 2, 3), (6, 3, 2), (8, 4, 2)]:
        brute = sum(1 for p in set_partitions(range(n)) if sorted(map(len, p)) == [i] * k)
        assert equal_class_partition_count(n, k, i) == brute


def test_odd_cycle_formula_against_enumeration():
    # one class of size 3 and (n-3)/2 classes of size 2
    for n in (5, 7, 9):
        shape = sorted([3] + [2] * ((n - 3) // 2))
        brute = sum(1 for p in set_partitions(range(n)) if sorted(map(len, p)) == shape)
        assert odd_cycle_partition_count(n) == brute


def test_odd_cycle_boundary():
    assert odd_cycle_partition_count(3) == 1
    for bad in (2, 4, 1):
        with pytest.raises(ValueError):
            odd_cycle_partition_count(bad)


def test_errors():
    with pytest.raises(ValueError):
        multinomial(5, [2, 2])
    with pytest.raises(ValueError):
        equal_class_partition_count(5, 2, 2)


@given(st.integers(0, 12), st.integers(0, 12))
def test_multinomial_two_parts(a, b):
    assert multinomial(a + b, [a, b]) == comb(a + b, a)
