from fractions import Fraction
from math import factorial

import pytest

from permorder.core import GuardExceeded, NonIntegerResult, partitions
from permorder.counting import (
    beth_exact,
    lds_distribution,
    xi3_closed,
    xi3_closed_terms,
    xi_brute,
    xi_shapes,
)
from permorder.stats import catalan, syt_enumerate

from oracles import all_perms, involution_count, lds_by_subsets


def xi_by_subsets(n, k):
    return sum(1 for w in all_perms(n) if lds_by_subsets(w) <= k)


def test_xi_brute_examples():
    assert xi_brute(4, 2) == 14 == catalan(4)
    assert xi_brute(4, 3) == 23
    assert xi_brute(5, 7) == 120


@pytest.mark.parametrize("n", range(1, 7))
def test_xi_brute_matches_subset_oracle(n):
    for k in range(1, n + 1):
        assert xi_brute(n, k) == xi_by_subsets(n, k)


def test_xi_brute_guard():
    with pytest.raises(GuardExceeded):
        xi_brute(10, 3)
    assert xi_brute(30, 30) == factorial(30)


def test_xi_shapes_examples():
    assert xi_shapes(4, 2) == 14
    assert xi_shapes(1, 1) == 1
    assert xi_shapes(4, 4) == 24


@pytest.mark.parametrize("n", range(1, 9))
def test_xi_shapes_matches_brute(n):
    for k in range(1, n + 1):
        assert xi_shapes(n, k) == xi_brute(n, k)


@pytest.mark.parametrize("n", range(1, 25))
def test_xi_monotone_in_k(n):
    values = [xi_shapes(n, k) for k in range(1, n + 3)]
    for k in range(1, n + 2):
        a, b = values[k - 1], values[k]
        assert a <= b
        assert (a == b) == (k >= n)


def test_xi3_closed_terms():
    assert xi3_closed_terms(2) == [Fraction(-1, 3), 0, Fraction(7, 3)]
    assert xi3_closed_terms(3) == [Fraction(-1, 2), -3, 3, Fraction(13, 2)]


def test_xi3_closed_examples():
    assert xi3_closed(2) == 2
    assert xi3_closed(3) == 6
    assert xi3_closed(4) == 23


@pytest.mark.parametrize("n", range(1, 31))
def test_xi3_closed_matches_shapes(n):
    assert xi3_closed(n) == xi_shapes(n, 3)


@pytest.mark.parametrize("n", range(1, 13))
def test_xi2_is_catalan(n):
    assert xi_shapes(n, 2) == catalan(n)


def test_lds_distribution_examples():
    assert lds_distribution(3) == {1: 1, 2: 4, 3: 1}
    assert lds_distribution(1) == {1: 1}
    assert lds_distribution(4) == {1: 1, 2: 13, 3: 9, 4: 1}
    assert lds_distribution(4, method="shapes") == {1: 1, 2: 13, 3: 9, 4: 1}
    with pytest.raises(GuardExceeded):
        lds_distribution(10)
    with pytest.raises(ValueError):
        lds_distribution(3, method="magic")


@pytest.mark.parametrize("n", range(1, 10))
def test_lds_distribution_methods_agree(n):
    brute = lds_distribution(n)
    assert brute == lds_distribution(n, method="shapes")
    assert sum(brute.values()) == factorial(n)


def test_lds_distribution_parallel():
    assert lds_distribution(8, workers=2) == lds_distribution(8, method="shapes")


def test_beth_examples():
    assert beth_exact(4, 2) == 6
    assert beth_exact(3, 1) == 1
    assert beth_exact(3, 3) == 4


@pytest.mark.parametrize("n", range(1, 9))
def test_beth_matches_enumeration(n):
    for k in range(1, n + 1):
        assert beth_exact(n, k) == sum(len(syt_enumerate(s)) for s in partitions(n, k))


@pytest.mark.parametrize("n", range(1, 15))
def test_beth_total_is_involution_count(n):
    assert beth_exact(n, n) == involution_count(n)
