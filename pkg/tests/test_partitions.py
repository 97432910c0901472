from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powerlimits.partitions import (
    Partition,
    PartitionCapError,
    centralizer_order,
    enumerate_partitions,
    pi_a,
    pi_prime_a,
)


def partition_count(n: int) -> int:
    """Euler's pentagonal-number recurrence, independent of the enumerator."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_small_enumerations():
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert [p.parts for p in enumerate_partitions(1)] == [(1,)]
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(31))
def test_count_matches_pentagonal_recurrence(n):
    parts = enumerate_partitions(n)
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)
    assert all(p.n == n for p in parts)


def test_order_is_reverse_lexicographic():
    parts = [p.parts for p in enumerate_partitions(9)]
    assert parts == sorted(parts, reverse=True)


def test_cap():
    with pytest.raises(PartitionCapError):
        enumerate_partitions(61)
    assert len(enumerate_partitions(5, cap=5)) == 7
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.of(1, 3, 1).parts == (3, 1, 1)
    assert Partition.of(3, 1, 1).power_label() == "1^2 3^1"


@pytest.mark.parametrize("parts, expected", [((1, 1), 2), ((1, 1, 1), 6), ((2, 1), 2), ((2,), 2), ((3,), 3)])
def test_centralizer_order(parts, expected):
    assert centralizer_order(Partition(parts)) == expected


@pytest.mark.parametrize("n", range(0, 13))
def test_class_equation(n):
    parts = enumerate_partitions(n)
    assert sum(Fraction(1, centralizer_order(p)) for p in parts) == 1
    assert sum(factorial(n) // centralizer_order(p) for p in parts) == factorial(n)


def test_pi_examples():
    assert pi_a(Partition((2, 1)), 2) == 1
    assert pi_a(Partition((3, 3, 2)), 3) == 2
    assert pi_a(Partition((3, 3, 2)), 1) == 3
    assert pi_prime_a(Partition((1,)), 2) == 1
    assert pi_prime_a(Partition((2, 1)), 2) == 2
    assert pi_prime_a(Partition((3,)), 3) == 0


partitions_st = st.integers(min_value=1, max_value=14).flatmap(
    lambda n: st.sampled_from(enumerate_partitions(n))
)


@given(partitions_st, st.integers(min_value=1, max_value=20))
def test_pi_bounds(p, a):
    assert 0 <= pi_a(p, a) <= len(p)
    if a > p.n:
        assert pi_a(p, a) == 0
    assert pi_a(p, 1) == len(p)


@given(partitions_st)
def test_pi_prime_one_counts_even_parts(p):
    assert pi_prime_a(p, 1) == sum(1 for k in p.parts if k % 2 == 0)
