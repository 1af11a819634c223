"""Permutation and tableau statistics."""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from math import prod
from typing import Sequence

from .core import (
    InternalError,
    Partition,
    Permutation,
    StandardTableau,
    as_partition,
    check_guard,
    factorial,
)


def lds_length(word: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence (patience piles).

    Works on any sequence of comparable values, not only permutations.
    """
    # tails[i] is the largest possible last value of a decreasing run of
    # length i + 1; negate so the piles are increasing and bisect applies
    tails: list[int] = []
    for x in word:
        j = bisect_left(tails, -x)
        if j == len(tails):
            tails.append(-x)
        else:
            tails[j] = -x
    return len(tails)


def _lds_witness(word: Sequence[int]) -> tuple[int, ...]:
    # longest[i]: length of the longest decreasing run starting at i
    n = len(word)
    longest = [1] * n
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if word[j] < word[i] and longest[j] + 1 > longest[i]:
                longest[i] = longest[j] + 1
    need = max(longest, default=0)
    picked: list[int] = []
    for i in range(n):
        if longest[i] == need and (not picked or word[i] < word[picked[-1]]):
            picked.append(i)
            need -= 1
            if need == 0:
                break
    return tuple(i + 1 for i in picked)


def lds(pi: Permutation) -> tuple[int, tuple[int, ...]]:
    """Longest decreasing subsequence of ``pi``: (length, 1-indexed positions).

    The witness is the lexicographically smallest index sequence among all
    longest ones.

    >>> lds(Permutation((2, 3, 1)))
    (2, (1, 3))
    """
    length = lds_length(pi.word)
    witness = _lds_witness(pi.word)
    if len(witness) != length:
        raise InternalError(f"patience length {length} disagrees with DP witness {witness}")
    return length, witness


def is_k_divisible(pi: Permutation, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    return lds_length(pi.word) >= k


def hook_lengths(shape: Partition | Sequence[int]) -> list[int]:
    """Hook length of every cell, row-major."""
    shape = as_partition(shape)
    cols = shape.conjugate().parts
    return [shape[r] - c + cols[c] - r - 1 for r, c in shape.cells()]


def syt_count_hook(shape: Partition | Sequence[int]) -> int:
    """Number of standard Young tableaux of ``shape`` via the hook formula."""
    return _hook_count(as_partition(shape).parts)


@lru_cache(maxsize=65536)
def _hook_count(parts: tuple[int, ...]) -> int:
    num = factorial(sum(parts))
    den = prod(hook_lengths(parts))
    q, r = divmod(num, den)
    if r:
        raise InternalError(f"hook formula not integral for {parts}")
    return q


def syt_enumerate(shape: Partition | Sequence[int], guard: int | None = None) -> list[StandardTableau]:
    """All standard tableaux of ``shape`` by placing 1..n one cell at a time.

    Results are sorted by their rows so the output order is deterministic.
    """
    shape = as_partition(shape)
    n = shape.weight
    check_guard("syt_enumerate", n, guard)
    parts = shape.parts
    rows: list[list[int]] = [[] for _ in parts]
    found: list[tuple[tuple[int, ...], ...]] = []

    def place(value: int) -> None:
        if value > n:
            found.append(tuple(tuple(row) for row in rows))
            return
        for r, target in enumerate(parts):
            length = len(rows[r])
            if length < target and (r == 0 or len(rows[r - 1]) > length):
                rows[r].append(value)
                place(value + 1)
                rows[r].pop()

    place(1)
    found.sort()
    return [StandardTableau(t) for t in found]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))
