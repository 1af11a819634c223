"""Upper bounds on xi, epsilon, beth and multilinear word counts.

All bounds are exact rationals and comparisons against the integer counts
are exact; nothing is rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import OutOfRange, binomial, factorial
from .counting import beth_exact, xi_brute, xi_shapes
from .posets import epsilon_exact


def xi_bound(n: int, k: int) -> Fraction:
    """k^(2n) / ((k-1)!)^2."""
    if n < 1 or k < 1:
        raise OutOfRange("xi_bound needs n >= 1 and k >= 1")
    return Fraction(k ** (2 * n), factorial(k - 1) ** 2)


def epsilon_bound(n: int, k: int) -> Fraction:
    if not 1 <= k <= n:
        raise OutOfRange(f"epsilon_bound needs 1 <= k <= n, got n={n}, k={k}")
    by_rows = Fraction(k ** (2 * n), factorial(k) ** 2)
    by_cols = Fraction((n - k + 1) ** (2 * n), factorial(n - k) ** 2)
    return min(by_rows, by_cols)


def beth_bound(n: int, k: int) -> Fraction:
    """k^n / (k-1)!."""
    if n < 1 or k < 1:
        raise OutOfRange("beth_bound needs n >= 1 and k >= 1")
    return Fraction(k**n, factorial(k - 1))


def multilinear_bound(l: int, n: int, k: int) -> Fraction:
    if not 1 <= n <= l:
        raise OutOfRange(f"multilinear_bound needs 1 <= n <= l, got l={l}, n={n}")
    if k < 1:
        raise OutOfRange("multilinear_bound needs k >= 1")
    return binomial(l, n) * xi_bound(n, k)


def multilinear_exact(l: int, n: int, k: int) -> int:
    """Words of n distinct letters from an l-letter alphabet with no decreasing run of k+1."""
    if not 1 <= n <= l:
        raise OutOfRange(f"multilinear_exact needs 1 <= n <= l, got l={l}, n={n}")
    return binomial(l, n) * xi_shapes(n, k)


@dataclass(frozen=True)
class BoundsRow:
    statistic: str
    n: int
    k: int
    exact: int
    bound: Fraction
    l: int | None = None
    at_most: int | None = None

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.exact) / self.bound

    @property
    def passed(self) -> bool:
        return self.exact <= self.bound


@dataclass(frozen=True)
class BoundsReport:
    rows: tuple[BoundsRow, ...] = field(default_factory=tuple)

    @property
    def all_pass(self) -> bool:
        return all(row.passed for row in self.rows)

    def failures(self) -> list[BoundsRow]:
        return [row for row in self.rows if not row.passed]


STATISTICS = ("xi", "epsilon", "beth", "multilinear")


def _ks(n: int, k_policy) -> Iterable[int]:
    if k_policy == "all":
        return range(1, n + 1)
    if callable(k_policy):
        return [k for k in range(1, n + 1) if k_policy(n, k)]
    return [k for k in k_policy if 1 <= k <= n]


def verify(
    n_max: int,
    k_policy="all",
    statistics: Sequence[str] = STATISTICS,
    xi_method: str = "brute",
    l_max: int | None = None,
    guard: int | None = None,
    workers: int = 1,
) -> BoundsReport:
    """Compare every bound with the exact count it claims to dominate.

    ``k_policy`` is ``"all"`` (every 1 <= k <= n), an iterable of k values,
    or a predicate ``(n, k) -> bool``.  Multilinear rows use alphabet sizes
    ``l`` from n up to ``l_max`` (default ``n_max``).  Oracle guards are
    enforced by the underlying counting routines and are not caught here.
    """
    unknown = set(statistics) - set(STATISTICS)
    if unknown:
        raise ValueError(f"unknown statistics: {sorted(unknown)}")
    if n_max < 1:
        raise OutOfRange("n_max must be positive")
    rows: list[BoundsRow] = []
    for stat in STATISTICS:
        if stat not in statistics:
            continue
        for n in range(1, n_max + 1):
            ks = list(_ks(n, k_policy))
            if stat == "xi":
                for k in ks:
                    if xi_method == "brute":
                        value = xi_brute(n, k, guard=guard, workers=workers)
                    else:
                        value = xi_shapes(n, k)
                    rows.append(BoundsRow("xi", n, k, value, xi_bound(n, k)))
            elif stat == "epsilon":
                census = epsilon_exact(n, guard=guard, workers=workers)
                running = 0
                for k in range(1, n + 1):
                    running += census[k]
                    if k in ks:
                        rows.append(
                            BoundsRow("epsilon", n, k, census[k], epsilon_bound(n, k), at_most=running)
                        )
            elif stat == "beth":
                for k in ks:
                    rows.append(BoundsRow("beth", n, k, beth_exact(n, k), beth_bound(n, k)))
            else:
                for l in range(n, max(l_max or n_max, n) + 1):
                    for k in ks:
                        rows.append(
                            BoundsRow(
                                "multilinear", n, k, multilinear_exact(l, n, k),
                                multilinear_bound(l, n, k), l=l,
                            )
                        )
    return BoundsReport(tuple(rows))
