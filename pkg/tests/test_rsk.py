import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from permorder.core import (
    DimsTooSmall,
    GeneralizedTableau,
    MultiplicityMatrix,
    Permutation,
    ShapeMismatch,
    StandardTableau,
    TwoLineArray,
)
from permorder.rsk import (
    array_to_matrix,
    knuth_forward,
    knuth_inverse,
    matrix_to_array,
    perm_to_array,
    rsk_forward,
    rsk_inverse,
    schensted_insert,
)
from permorder.stats import syt_enumerate
from permorder.core import partitions

from oracles import all_perms


def test_insert_examples():
    t, cell = schensted_insert(GeneralizedTableau([[2, 3]]), 1)
    assert t.rows == ((1, 3), (2,)) and cell == (2, 1)
    t, cell = schensted_insert(GeneralizedTableau([]), 7)
    assert t.rows == ((7,),) and cell == (1, 1)
    t, cell = schensted_insert(GeneralizedTableau([[1, 2]]), 3)
    assert t.rows == ((1, 2, 3),) and cell == (1, 3)


def test_insert_equal_values_go_right():
    t, cell = schensted_insert(GeneralizedTableau([[1, 2, 2], [3]]), 2)
    assert t.rows == ((1, 2, 2, 2), (3,)) and cell == (1, 4)
    t, cell = schensted_insert(GeneralizedTableau([[1, 2, 2], [3]]), 1)
    assert t.rows == ((1, 1, 2), (2,), (3,)) and cell == (3, 1)


@given(st.lists(st.integers(1, 6), max_size=15))
def test_insert_keeps_invariants_after_every_step(values):
    t = GeneralizedTableau([])
    for x in values:
        before = t.shape.parts
        t, (r, c) = schensted_insert(t, x)  # constructor re-validates all invariants
        after = t.shape.parts
        assert len(t.rows[r - 1]) == c
        grown = [i for i in range(len(after)) if i >= len(before) or after[i] != before[i]]
        assert grown == [r - 1]
    assert sorted(t.entries()) == sorted(values)


def test_rsk_examples():
    p, q = rsk_forward(Permutation((2, 3, 1)))
    assert p.rows == ((1, 3), (2,)) and q.rows == ((1, 2), (3,))
    p, q = rsk_forward(Permutation((1, 2, 3)))
    assert p.rows == q.rows == ((1, 2, 3),)
    p, q = rsk_forward(Permutation((3, 2, 1)))
    assert p.rows == q.rows == ((1,), (2,), (3,))


def test_rsk_inverse_examples():
    assert rsk_inverse(StandardTableau([[1, 3], [2]]), StandardTableau([[1, 2], [3]])).word == (2, 3, 1)
    assert rsk_inverse(StandardTableau([[1, 2, 3]]), StandardTableau([[1, 2, 3]])).word == (1, 2, 3)
    with pytest.raises(ShapeMismatch):
        rsk_inverse(StandardTableau([[1, 2], [3]]), StandardTableau([[1], [2], [3]]))


@pytest.mark.parametrize("n", range(1, 7))
def test_rsk_round_trip(n):
    seen = set()
    for w in all_perms(n):
        p, q = rsk_forward(Permutation(w))
        assert p.shape == q.shape
        assert rsk_inverse(p, q).word == w
        seen.add((p.rows, q.rows))
    assert len(seen) == len(list(all_perms(n)))


@pytest.mark.parametrize("n", range(1, 6))
def test_rsk_surjective(n):
    for shape in partitions(n, n):
        tabs = syt_enumerate(shape)
        for p in tabs:
            for q in tabs:
                assert rsk_forward(rsk_inverse(p, q)) == (p, q)


def test_knuth_examples():
    p, q = knuth_forward(TwoLineArray(((1, 1), (1, 3), (2, 2))))
    assert p.rows == ((1, 2), (3,)) and q.rows == ((1, 1), (2,))
    p, q = knuth_forward(TwoLineArray(((1, 1), (2, 2))))
    assert p.rows == ((1, 2),) and q.rows == ((1, 2),)
    p, q = knuth_forward(TwoLineArray(()))
    assert p.rows == () and q.rows == ()


def test_knuth_inverse_examples():
    a = knuth_inverse(GeneralizedTableau([[1, 2], [3]]), GeneralizedTableau([[1, 1], [2]]))
    assert a.pairs == ((1, 1), (1, 3), (2, 2))
    assert knuth_inverse(GeneralizedTableau([]), GeneralizedTableau([])).pairs == ()
    with pytest.raises(ShapeMismatch):
        knuth_inverse([[1, 2]], [[1], [1]])
    with pytest.raises(ShapeMismatch):
        rsk_inverse([[1, 2], [3]], [[1], [2], [3]])
    assert rsk_inverse([[1, 3], [2]], [[1, 2], [3]]).word == (2, 3, 1)


def test_knuth_forward_rejects_unsorted():
    with pytest.raises(ValueError):
        knuth_forward(TwoLineArray(((2, 1), (1, 1))))


arrays = st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5)), max_size=12).map(
    lambda pairs: TwoLineArray(tuple(sorted(pairs)))
)


@given(arrays)
@settings(max_examples=300)
def test_knuth_round_trip_and_content(array):
    p, q = knuth_forward(array)
    assert p.shape == q.shape
    assert sorted(p.entries()) == sorted(array.bottom)
    assert sorted(q.entries()) == sorted(array.top)
    assert knuth_inverse(p, q) == array


@pytest.mark.parametrize("n", range(1, 7))
def test_knuth_agrees_with_rsk_on_permutations(n):
    for w in all_perms(n):
        pi = Permutation(w)
        p, q = knuth_forward(perm_to_array(pi))
        p2, q2 = rsk_forward(pi)
        assert p.rows == p2.rows and q.rows == q2.rows


def test_perm_to_array_examples():
    assert perm_to_array(Permutation((2, 3, 1))).pairs == ((1, 2), (2, 3), (3, 1))
    assert perm_to_array(Permutation((1,))).pairs == ((1, 1),)
    assert perm_to_array(Permutation((2, 1))).pairs == ((1, 2), (2, 1))


def test_matrix_examples():
    m = array_to_matrix(TwoLineArray(((1, 2), (1, 2), (2, 1))), (2, 2))
    assert m.to_lists() == [[0, 2], [1, 0]]
    assert matrix_to_array(MultiplicityMatrix([[0, 2], [1, 0]])).pairs == ((1, 2), (1, 2), (2, 1))
    assert array_to_matrix(TwoLineArray(()), (1, 1)).to_lists() == [[0]]
    with pytest.raises(DimsTooSmall):
        array_to_matrix(TwoLineArray(((3, 1),)), (2, 2))


@given(arrays)
def test_matrix_round_trip(array):
    assert matrix_to_array(array_to_matrix(array, (5, 5))) == array
    assert matrix_to_array(array_to_matrix(array)) == array


def test_knuth_inverse_on_random_semistandard_pairs():
    # pairs (P, Q) from forward images of random arrays, recombined with shapes
    rng = random.Random(7)
    for _ in range(200):
        pairs = sorted((rng.randint(1, 4), rng.randint(1, 4)) for _ in range(rng.randint(0, 9)))
        p, q = knuth_forward(TwoLineArray(tuple(pairs)))
        assert knuth_forward(knuth_inverse(p, q)) == (p, q)
