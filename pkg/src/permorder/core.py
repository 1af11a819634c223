"""Shared domain types, errors, exact-arithmetic helpers and partitions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

#: Default size limits for the factorial-time oracles.  Mutable on purpose:
#: callers (and the CLI ``--guard`` flag) may raise them for exploration.
GUARDS: dict[str, int] = {
    "syt_enumerate": 12,
    "canonical_form": 9,
    "epsilon_exact": 7,
    "xi_brute": 9,
    "lds_distribution": 9,
    "syt_count_schur": 6,
    "rk_coefficient": 4,
}


class PermOrderError(Exception):
    """Base class for every error raised by this package."""


class NotABijection(PermOrderError, ValueError):
    pass


class InvalidPartition(PermOrderError, ValueError):
    pass


class InvalidTableau(PermOrderError, ValueError):
    pass


class NotLexSorted(PermOrderError, ValueError):
    pass


class ShapeMismatch(PermOrderError, ValueError):
    pass


class NotARecordingTableau(PermOrderError, ValueError):
    pass


class DimsTooSmall(PermOrderError, ValueError):
    pass


class SizeMismatch(PermOrderError, ValueError):
    pass


class DegreeMismatch(PermOrderError, ValueError):
    pass


class OutOfRange(PermOrderError, ValueError):
    pass


class GuardExceeded(PermOrderError):
    """An oracle was asked for a size above its configured guard."""

    def __init__(self, what: str, size: int, guard: int):
        super().__init__(f"{what}: size {size} exceeds guard {guard}")
        self.what = what
        self.size = size
        self.guard = guard


class NonIntegerResult(PermOrderError, ArithmeticError):
    pass


class InternalError(PermOrderError, RuntimeError):
    pass


def check_guard(what: str, size: int, guard: int | None = None) -> None:
    limit = GUARDS[what] if guard is None else guard
    if size > limit:
        raise GuardExceeded(what, size, limit)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def factorial(n: int) -> int:
    if n < 0:
        raise OutOfRange(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def exact(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)


def as_count(value: Fraction | int, what: str = "value") -> int:
    """Convert an exact rational that must be a nonnegative integer."""
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"{what} = {value} is not a nonnegative integer")
    return value.numerator


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise NotABijection(f"{list(word)} is not a permutation of 1..{len(word)}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __getitem__(self, i: int) -> int:
        """1-indexed lookup: ``pi[i]`` is pi(i)."""
        if not 1 <= i <= len(self.word):
            raise IndexError(i)
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, val in enumerate(self.word, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))


def make_permutation(word: Iterable[int]) -> Permutation:
    return Permutation(tuple(word))


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise InvalidPartition(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartition(f"parts must be weakly decreasing: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells as 0-indexed (row, col) pairs, row-major."""
        for r, p in enumerate(self.parts):
            for c in range(p):
                yield r, c


def partitions(n: int, max_parts: int) -> list[Partition]:
    """Partitions of ``n`` with at most ``max_parts`` parts, reverse-lex order.

    >>> [p.parts for p in partitions(4, 2)]
    [(4,), (3, 1), (2, 2)]
    """
    if n < 1 or max_parts < 1:
        raise OutOfRange("partitions() needs n >= 1 and max_parts >= 1")
    return list(_cached_partitions(n, min(max_parts, n)))


@lru_cache(maxsize=256)
def _cached_partitions(n: int, max_parts: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n, max_parts))


def _partitions(n: int, largest: int, slots: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if slots == 0:
        return
    # the remaining parts can hold at most largest * (slots - 1) after the first
    for first in range(min(n, largest), 0, -1):
        if first * slots < n:
            break
        for rest in _partitions(n - first, first, slots - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------

def _rows_tuple(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _check_shape(rows) -> Partition:
    if any(len(row) == 0 for row in rows):
        raise InvalidTableau("empty rows are not allowed")
    try:
        return Partition(tuple(len(row) for row in rows))
    except InvalidPartition as exc:
        raise InvalidTableau(f"row lengths do not form a partition: {exc}") from None


@dataclass(frozen=True)
class GeneralizedTableau:
    """Positive entries, rows weakly increasing, columns strictly increasing."""

    rows: tuple[tuple[int, ...], ...]
    shape: Partition = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rows = _rows_tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", _check_shape(rows))
        for row in rows:
            if any(x < 1 for x in row):
                raise InvalidTableau(f"entries must be positive: {row}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise InvalidTableau(f"row not weakly increasing: {row}")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise InvalidTableau(f"column not strictly increasing between {upper} and {lower}")

    @property
    def n(self) -> int:
        return self.shape.weight

    def entries(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class StandardTableau(GeneralizedTableau):
    """A generalized tableau holding each of 1..n exactly once."""

    def __post_init__(self):
        super().__post_init__()
        if sorted(self.entries()) != list(range(1, self.n + 1)):
            raise InvalidTableau(f"entries of {self.to_lists()} are not exactly 1..{self.n}")
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidTableau(f"row not strictly increasing: {row}")


# ---------------------------------------------------------------------------
# two-line arrays and matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoLineArray:
    """Pairs (u, v) of positive integers in weakly increasing lex order."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(u), int(v)) for u, v in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for u, v in pairs:
            if u < 1 or v < 1:
                raise NotLexSorted(f"pair {(u, v)} has a non-positive entry")
        for a, b in zip(pairs, pairs[1:]):
            if a > b:
                raise NotLexSorted(f"pairs out of lex order: {a} before {b}")

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.pairs)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.pairs)


@dataclass(frozen=True)
class MultiplicityMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = _rows_tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len({len(row) for row in entries}) > 1:
            raise ValueError("matrix rows have different lengths")
        if any(x < 0 for row in entries for x in row):
            raise ValueError("matrix entries must be nonnegative")

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.entries), (len(self.entries[0]) if self.entries else 0)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def as_partition(shape: Partition | Sequence[int]) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(tuple(shape))
