"""Exact values of xi_k(n), beth_k(n) and the LDS distribution.

Every quantity has at least two routes: an exhaustive sweep over S_n
(factorial time, guarded) and a sum over shapes through the hook formula.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache

from .core import NonIntegerResult, binomial, check_guard, factorial, partitions
from .stats import lds_length, syt_count_hook


def _lds_counts_chunk(args: tuple[int, int]) -> Counter:
    n, first = args
    rest = [v for v in range(1, n + 1) if v != first]
    return Counter(lds_length((first,) + tail) for tail in itertools.permutations(rest))


@lru_cache(maxsize=None)
def _lds_counts(n: int, workers: int = 1) -> tuple[tuple[int, int], ...]:
    jobs = [(n, first) for first in range(1, n + 1)]
    if workers > 1 and n >= 8:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_lds_counts_chunk, jobs))
    else:
        parts = [_lds_counts_chunk(job) for job in jobs]
    total = sum(parts, Counter())
    return tuple(sorted(total.items()))


def lds_distribution_brute(n: int, guard: int | None = None, workers: int = 1) -> dict[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    check_guard("lds_distribution", n, guard)
    counts = dict(_lds_counts(n, workers))
    return {k: counts.get(k, 0) for k in range(1, n + 1)}


def lds_distribution_shapes(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    totals = [0] * (n + 1)
    for shape in partitions(n, n):
        totals[len(shape)] += syt_count_hook(shape) ** 2
    return {k: totals[k] for k in range(1, n + 1)}


def lds_distribution(n: int, method: str = "brute", guard: int | None = None, workers: int = 1) -> dict[int, int]:
    """k -> #{pi in S_n : lds(pi) = k}.

    >>> lds_distribution(4)
    {1: 1, 2: 13, 3: 9, 4: 1}
    """
    if method == "brute":
        return lds_distribution_brute(n, guard, workers)
    if method == "shapes":
        return lds_distribution_shapes(n)
    raise ValueError(f"unknown method {method!r}")


def xi_brute(n: int, k: int, guard: int | None = None, workers: int = 1) -> int:
    """Permutations of 1..n with no decreasing subsequence longer than k, by sweep."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k >= n:
        return factorial(n)
    check_guard("xi_brute", n, guard)
    dist = dict(_lds_counts(n, workers))
    return sum(c for length, c in dist.items() if length <= k)


def xi_shapes(n: int, k: int) -> int:
    """Sum of squared tableau counts over shapes with at most k rows."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k >= n:
        return factorial(n)
    return sum(syt_count_hook(shape) ** 2 for shape in partitions(n, k))


def xi3_closed_terms(n: int) -> list[Fraction]:
    """Individual summands of the closed form for xi_3(n), factor 2 included."""
    terms = []
    for j in range(n + 1):
        num = 3 * j * j + 2 * j + 1 - n - 2 * j * n
        den = (j + 1) ** 2 * (j + 2) * (n - j + 1)
        terms.append(2 * binomial(2 * j, j) * binomial(n, j) ** 2 * Fraction(num, den))
    return terms


def xi3_closed(n: int) -> int:
    """Closed formula for the number of permutations avoiding a decreasing run of 4.

    Individual terms are not integers (at n = 3 one of them is -1/2), so the
    sum is accumulated exactly and only the total is required to be integral.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = sum(xi3_closed_terms(n), Fraction(0))
    if total.denominator != 1 or total < 0:
        raise NonIntegerResult(f"closed form for xi_3({n}) evaluated to {total}")
    return total.numerator


def beth_exact(n: int, k: int) -> int:
    """Standard Young tableaux with n cells and at most k rows."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return sum(syt_count_hook(shape) for shape in partitions(n, k))

