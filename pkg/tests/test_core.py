import itertools

import pytest
from hypothesis import given, strategies as st

from permorder import core
from permorder.core import (
    GeneralizedTableau,
    InvalidTableau,
    NotABijection,
    NotLexSorted,
    Partition,
    Permutation,
    StandardTableau,
    TwoLineArray,
    binomial,
    factorial,
    make_permutation,
    partitions,
)

from oracles import partition_count


def test_make_permutation_examples():
    assert make_permutation([2, 3, 1]).n == 3
    assert make_permutation([1]).n == 1
    with pytest.raises(NotABijection):
        make_permutation([1, 1, 2])


@pytest.mark.parametrize("word", [[0, 1], [2, 3], [1, 3], [-1], [1, 2, 2]])
def test_make_permutation_rejects(word):
    with pytest.raises(NotABijection):
        make_permutation(word)


@pytest.mark.parametrize("n", range(1, 6))
def test_make_permutation_accepts_exactly_the_bijections(n):
    accepted = 0
    for word in itertools.product(range(1, n + 1), repeat=n):
        try:
            make_permutation(word)
        except NotABijection:
            continue
        accepted += 1
    assert accepted == factorial(n)


def test_make_permutation_sweep_n6():
    accepted = sum(1 for w in itertools.permutations(range(1, 7)) if make_permutation(w))
    assert accepted == 720


def test_permutation_indexing_and_inverse():
    pi = Permutation((2, 3, 1))
    assert pi[1] == 2 and pi[3] == 1
    assert pi.inverse().word == (3, 1, 2)
    with pytest.raises(IndexError):
        pi[0]


def test_factorial_and_binomial():
    assert factorial(5) == 120
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert factorial(30) == 265252859812191058636308480000000


def test_partition_examples():
    assert [p.parts for p in partitions(4, 2)] == [(4,), (3, 1), (2, 2)]
    assert [p.parts for p in partitions(3, 3)] == [(3,), (2, 1), (1, 1, 1)]
    assert [p.parts for p in partitions(1, 5)] == [(1,)]


@pytest.mark.parametrize("n", range(1, 21))
def test_partition_count_matches_recurrence(n):
    assert len(partitions(n, n)) == partition_count(n)


@given(st.integers(1, 16), st.integers(1, 16))
def test_partition_invariants(n, m):
    out = partitions(n, m)
    assert len(set(out)) == len(out)
    for p in out:
        assert p.weight == n
        assert len(p) <= m
        assert all(a >= b for a, b in zip(p.parts, p.parts[1:]))
    # reverse-lexicographic order
    assert [p.parts for p in out] == sorted((p.parts for p in out), reverse=True)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition((3, 1)).conjugate().parts == (2, 1, 1)


def test_tableau_validation():
    StandardTableau([[1, 3], [2]])
    GeneralizedTableau([[1, 1], [2]])
    with pytest.raises(InvalidTableau):
        StandardTableau([[1, 1], [2]])
    with pytest.raises(InvalidTableau):
        GeneralizedTableau([[1, 2], [1]])
    with pytest.raises(InvalidTableau):
        GeneralizedTableau([[1], [2, 3]])
    with pytest.raises(InvalidTableau):
        StandardTableau([[1, 2], [4]])
    assert StandardTableau([]).n == 0


def test_two_line_array_validation():
    TwoLineArray(((1, 1), (1, 3), (2, 2)))
    with pytest.raises(NotLexSorted):
        TwoLineArray(((1, 3), (1, 1)))
    with pytest.raises(NotLexSorted):
        TwoLineArray(((2, 1), (1, 1)))


def test_guard(fresh_guards):
    with pytest.raises(core.GuardExceeded):
        core.check_guard("xi_brute", 10)
    core.check_guard("xi_brute", 10, guard=10)
    fresh_guards["xi_brute"] = 11
    core.check_guard("xi_brute", 11)
