"""Schensted row insertion, RSK for permutations and Knuth's two-line version."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from typing import Sequence

from .core import (
    DimsTooSmall,
    GeneralizedTableau,
    MultiplicityMatrix,
    NotARecordingTableau,
    Permutation,
    ShapeMismatch,
    StandardTableau,
    TwoLineArray,
)


def _insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert ``x`` in place; return the 0-indexed cell that was created."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        # least entry strictly greater than x; equal values stay to the left
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return r, j
        row[j], x = x, row[j]
        r += 1


def _uninsert(rows: list[list[int]], r: int) -> int:
    """Remove the last cell of row ``r`` and reverse-bump it out of row 0."""
    y = rows[r].pop()
    if not rows[r]:
        rows.pop()
    for i in range(r - 1, -1, -1):
        row = rows[i]
        # largest entry strictly less than y, rightmost among equals
        j = bisect_left(row, y) - 1
        row[j], y = y, row[j]
    return y


def schensted_insert(tableau: GeneralizedTableau, x: int) -> tuple[GeneralizedTableau, tuple[int, int]]:
    """Insert ``x`` into ``tableau`` and report where the new cell landed.

    The returned cell is 1-indexed (row, column).  A ``StandardTableau`` is
    accepted, but the result is always returned as a ``GeneralizedTableau``
    since inserting an arbitrary value need not keep the entries 1..n.

    >>> t, cell = schensted_insert(GeneralizedTableau(((2, 3),)), 1)
    >>> t.rows, cell
    (((1, 3), (2,)), (2, 1))
    """
    if x < 1:
        raise ValueError(f"can only insert positive integers, got {x}")
    rows = [list(row) for row in tableau.rows]
    r, c = _insert(rows, x)
    return GeneralizedTableau(rows), (r + 1, c + 1)


def _forward(word: Sequence[int], labels: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    p: list[list[int]] = []
    q: list[list[int]] = []
    for x, label in zip(word, labels):
        r, _ = _insert(p, x)
        if r == len(q):
            q.append([])
        q[r].append(label)
    return p, q


def rsk_forward(pi: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """Insertion tableau P and recording tableau Q of a permutation."""
    p, q = _forward(pi.word, range(1, pi.n + 1))
    return StandardTableau(p), StandardTableau(q)


def shape_of(pi: Permutation) -> tuple[int, ...]:
    """Shape of the RSK tableaux, without building tableau objects."""
    p: list[list[int]] = []
    for x in pi.word:
        _insert(p, x)
    return tuple(len(row) for row in p)


def _coerce_pair(p, q, kind):
    """Accept tableau objects or raw rows; shapes are compared before validation."""
    p_rows = p.rows if isinstance(p, GeneralizedTableau) else p
    q_rows = q.rows if isinstance(q, GeneralizedTableau) else q
    p_shape = [len(row) for row in p_rows]
    q_shape = [len(row) for row in q_rows]
    if p_shape != q_shape:
        raise ShapeMismatch(f"shapes differ: {tuple(p_shape)} vs {tuple(q_shape)}")
    if not isinstance(p, kind):
        p = kind(p_rows)
    if not isinstance(q, kind):
        q = kind(q_rows)
    return p, q


def rsk_inverse(p: StandardTableau, q: StandardTableau) -> Permutation:
    """The permutation whose insertion and recording tableaux are ``p`` and ``q``."""
    p, q = _coerce_pair(p, q, StandardTableau)
    n = p.n
    rows = p.to_lists()
    where = {v: r for r, row in enumerate(q.rows) for v in row}
    word = [0] * n
    for i in range(n, 0, -1):
        word[i - 1] = _uninsert(rows, where[i])
    return Permutation(tuple(word))


def knuth_forward(array: TwoLineArray) -> tuple[GeneralizedTableau, GeneralizedTableau]:
    """Knuth's correspondence: insert the bottom line, record the top line.

    >>> p, q = knuth_forward(TwoLineArray(((1, 1), (1, 3), (2, 2))))
    >>> p.rows, q.rows
    (((1, 2), (3,)), ((1, 1), (2,)))
    """
    p, q = _forward(array.bottom, array.top)
    return GeneralizedTableau(p), GeneralizedTableau(q)


def knuth_inverse(p: GeneralizedTableau, q: GeneralizedTableau) -> TwoLineArray:
    p, q = _coerce_pair(p, q, GeneralizedTableau)
    rows = p.to_lists()
    qrows = q.to_lists()
    pairs = []
    for _ in range(q.n):
        # the largest label that sits furthest right was recorded last
        top = max(row[-1] for row in qrows)
        candidates = [(len(row) - 1, r) for r, row in enumerate(qrows) if row[-1] == top]
        _, r = max(candidates)
        if r + 1 < len(qrows) and len(qrows[r + 1]) == len(qrows[r]):
            raise NotARecordingTableau(f"cell of label {top} in row {r + 1} is not a corner")
        qrows[r].pop()
        if not qrows[r]:
            qrows.pop()
        pairs.append((top, _uninsert(rows, r)))
    pairs.reverse()
    try:
        return TwoLineArray(tuple(pairs))
    except ValueError as exc:
        raise NotARecordingTableau(str(exc)) from None


def perm_to_array(pi: Permutation) -> TwoLineArray:
    return TwoLineArray(tuple(enumerate(pi.word, start=1)))


def array_to_matrix(array: TwoLineArray, dims: tuple[int, int] | None = None) -> MultiplicityMatrix:
    """Count the pairs: entry (i, j) is the multiplicity of (i, j) in ``array``.

    ``dims`` defaults to the smallest (rows, cols) covering the array.
    """
    need_r = max(array.top, default=0)
    need_c = max(array.bottom, default=0)
    if dims is None:
        dims = (max(need_r, 1), max(need_c, 1))
    n_rows, n_cols = dims
    if need_r > n_rows or need_c > n_cols:
        raise DimsTooSmall(f"dims {n_rows}x{n_cols} cannot hold index ({need_r}, {need_c})")
    counts = Counter(array.pairs)
    return MultiplicityMatrix(
        tuple(tuple(counts[(i, j)] for j in range(1, n_cols + 1)) for i in range(1, n_rows + 1))
    )


def matrix_to_array(matrix: MultiplicityMatrix) -> TwoLineArray:
    pairs = []
    for i, row in enumerate(matrix.entries, start=1):
        for j, mult in enumerate(row, start=1):
            pairs.extend([(i, j)] * mult)
    return TwoLineArray(tuple(pairs))

