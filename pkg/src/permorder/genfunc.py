"""Exact truncated power series and multivariate polynomials.

Covers the Bessel-type series b_i and their Toeplitz determinants U_k, whose
coefficients are xi_k(n) / (n!)^2, and the Jacobi-Trudi route from complete
homogeneous polynomials to Schur polynomials.
"""

from __future__ import annotations

import itertools
import warnings
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence, TypeVar

from .core import (
    DegreeMismatch,
    NonIntegerResult,
    Partition,
    as_partition,
    check_guard,
    factorial,
    partitions,
)

R = TypeVar("R")


class TruncatedSeries:
    """c_0 + c_1 x + ... + c_D x^D with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, degree: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if degree is None:
            degree = len(coeffs) - 1
        if degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        if len(coeffs) > degree + 1:
            coeffs = coeffs[: degree + 1]
        coeffs += [Fraction(0)] * (degree + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, degree: int) -> "TruncatedSeries":
        return cls([], degree)

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls([1], degree)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError(i)
        if i > self.degree:
            raise IndexError(f"coefficient {i} is beyond truncation degree {self.degree}")
        return self.coeffs[i]

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([a * other for a in self.coeffs])
        self._check(other)
        d = self.degree
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (d + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(d + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'}; O(x^{self.degree + 1}))"

    def inverse(self) -> "TruncatedSeries":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        d = self.degree
        a = self.coeffs
        inv = [Fraction(0)] * (d + 1)
        inv[0] = 1 / a[0]
        for m in range(1, d + 1):
            inv[m] = -sum(a[i] * inv[m - i] for i in range(1, m + 1)) * inv[0]
        return TruncatedSeries(inv)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def determinant(
    matrix: Sequence[Sequence[R]],
    zero: R,
    one: R,
    is_zero: Callable[[R], bool] = lambda x: not x,
) -> R:
    """Determinant over a commutative ring by Laplace expansion along rows.

    Minors are memoised on the set of columns still available, so the cost
    is O(2^k k) ring multiplications instead of k!.
    """
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if k == 0:
        return one

    @lru_cache(maxsize=None)
    def minor(row: int, cols: int) -> R:
        if row == k:
            return one
        total = zero
        sign = 1
        for c in range(k):
            if cols >> c & 1:
                entry = matrix[row][c]
                if not is_zero(entry):
                    term = entry * minor(row + 1, cols & ~(1 << c))
                    total = total + term if sign > 0 else total - term
                sign = -sign
        return total

    return minor(0, (1 << k) - 1)


def _series_bareiss(matrix: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    # fraction-free elimination; pivots need an invertible constant term
    k = len(matrix)
    a = [list(row) for row in matrix]
    d = a[0][0].degree
    prev = TruncatedSeries.one(d)
    sign = 1
    for i in range(k - 1):
        if a[i][i].coeffs[0] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i].coeffs[0] != 0), None)
            if swap is None:
                raise ZeroDivisionError("no invertible pivot")
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        prev_inv = prev.inverse()
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) * prev_inv
        prev = a[i][i]
    return a[k - 1][k - 1] * sign


def series_det(matrix: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    """Exact determinant of a square matrix of series of equal degree.

    Cofactor expansion up to 6x6; above that, fraction-free elimination,
    falling back to expansion if no pivot with invertible constant term is
    available.
    """
    k = len(matrix)
    if k == 0:
        raise ValueError("empty matrix has no truncation degree")
    degrees = {entry.degree for row in matrix for entry in row}
    if len(degrees) != 1:
        raise DegreeMismatch(f"mixed truncation degrees {sorted(degrees)}")
    d = degrees.pop()
    if k > 6:
        try:
            return _series_bareiss(matrix)
        except ZeroDivisionError:
            pass
    return determinant(
        [list(row) for row in matrix],
        TruncatedSeries.zero(d),
        TruncatedSeries.one(d),
        is_zero=lambda s: not any(s.coeffs),
    )


def bessel_b(i: int, degree: int) -> TruncatedSeries:
    """sum_n x^(2n+i) / (n! (n+i)!), truncated at x^degree."""
    if i < 0 or degree < 0:
        raise ValueError("i and degree must be nonnegative")
    coeffs = [Fraction(0)] * (degree + 1)
    n = 0
    while 2 * n + i <= degree:
        coeffs[2 * n + i] = Fraction(1, factorial(n) * factorial(n + i))
        n += 1
    return TruncatedSeries(coeffs, degree)


def gessel_U(k: int, degree: int) -> TruncatedSeries:
    """det(b_|i-j|) for 1 <= i, j <= k."""
    if k < 1:
        raise ValueError("k must be positive")
    b = [bessel_b(i, degree) for i in range(k)]
    return series_det([[b[abs(i - j)] for j in range(k)] for i in range(k)])


def xi_from_series(k: int, n: int) -> int:
    """(n!)^2 times the coefficient of x^(2n) in U_k."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    coeff = gessel_U(k, 2 * n)[2 * n] * factorial(n) ** 2
    if coeff.denominator != 1 or coeff < 0:
        raise NonIntegerResult(f"(n!)^2 [x^{2 * n}] U_{k} = {coeff}")
    return coeff.numerator


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------

class MultiPoly:
    """Polynomial in V variables: exponent tuple -> nonzero rational coefficient.

    ``cap`` bounds every exponent; products drop monomials exceeding it.
    ``cap=1`` gives the multilinear quotient, which is all that is needed
    to read off coefficients of squarefree monomials.
    """

    __slots__ = ("nvars", "terms", "cap")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None, cap: int | None = None):
        self.nvars = nvars
        self.cap = cap
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has length != {nvars}")
            if cap is not None and max(exps, default=0) > cap:
                continue
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, nvars: int, value=1, cap: int | None = None) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value}, cap)

    @classmethod
    def variable(cls, nvars: int, index: int, cap: int | None = None) -> "MultiPoly":
        """The 1-indexed variable x_index."""
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {tuple(exps): 1}, cap)

    def _check(self, other: "MultiPoly") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"variable counts {self.nvars} and {other.nvars} differ")

    def _cap(self, other: "MultiPoly") -> int | None:
        caps = [c for c in (self.cap, other.cap) if c is not None]
        return min(caps) if caps else None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, out, self._cap(other))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.cap)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()}, self.cap)
        self._check(other)
        cap = self._cap(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if cap is not None and max(e, default=0) > cap:
                    continue
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out, cap)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __repr__(self):
        return f"MultiPoly({self.nvars} vars, {len(self.terms)} terms)"

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def substitute(self, perm: Sequence[int]) -> "MultiPoly":
        """Replace x_i by x_perm[i-1] (1-indexed permutation of the variables)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, a in enumerate(e):
                new[perm[i] - 1] += a
            out[tuple(new)] = c
        return MultiPoly(self.nvars, out, self.cap)

    def embed(self, nvars: int, offset: int) -> "MultiPoly":
        """The same polynomial in a larger ring, variables shifted by ``offset``."""
        if offset + self.nvars > nvars:
            raise ValueError("embedding does not fit")
        out = {}
        for e, c in self.terms.items():
            out[(0,) * offset + e + (0,) * (nvars - offset - self.nvars)] = c
        return MultiPoly(nvars, out, self.cap)


def complete_homogeneous(d: int, nvars: int, cap: int | None = None) -> MultiPoly:
    """Sum of all degree-d monomials in ``nvars`` variables (0 for d < 0)."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        return MultiPoly(nvars, {}, cap)
    terms = {}
    for idx in itertools.combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for i in idx:
            exps[i] += 1
        terms[tuple(exps)] = 1
    return MultiPoly(nvars, terms, cap)


def schur(shape: Partition | Sequence[int], nvars: int, cap: int | None = None) -> MultiPoly:
    """Schur polynomial via the Jacobi-Trudi determinant det(h_{lambda_i + j - i})."""
    shape = as_partition(shape)
    parts = shape.parts
    m = len(parts)
    if m == 0:
        return MultiPoly.constant(nvars, 1, cap)
    if nvars < m:
        warnings.warn(
            f"schur{parts} in {nvars} variables: fewer variables than parts, result is 0",
            stacklevel=2,
        )
    h = {}

    def entry(d: int) -> MultiPoly:
        if d not in h:
            h[d] = complete_homogeneous(d, nvars, cap)
        return h[d]

    matrix = [[entry(parts[i] + j - i) for j in range(m)] for i in range(m)]
    return determinant(matrix, MultiPoly(nvars, {}, cap), MultiPoly.constant(nvars, 1, cap))


def syt_count_schur(shape: Partition | Sequence[int], guard: int | None = None) -> int:
    """Coefficient of x_1 x_2 ... x_n in the Schur polynomial of ``shape``."""
    shape = as_partition(shape)
    n = shape.weight
    check_guard("syt_count_schur", n, guard)
    if n == 0:
        return 1
    poly = schur(shape, n, cap=1)
    coeff = poly.coefficient((1,) * n)
    if coeff.denominator != 1:
        raise NonIntegerResult(f"squarefree coefficient {coeff}")
    return coeff.numerator


def rk_coefficient(k: int, n: int, guard: int | None = None) -> int:
    """Coefficient of x_1..x_n y_1..y_n in sum over lambda of s_lambda(x) s_lambda(y).

    The sum runs over partitions of n with at most k parts; other sizes
    cannot reach bidegree (n, n).
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    check_guard("rk_coefficient", n, guard)
    total = MultiPoly(2 * n, {}, cap=1)
    for shape in partitions(n, k):
        s = schur(shape, n, cap=1)
        total = total + s.embed(2 * n, 0) * s.embed(2 * n, n)
    coeff = total.coefficient((1,) * (2 * n))
    if coeff.denominator != 1:
        raise NonIntegerResult(f"R_k coefficient {coeff}")
    return coeff.numerator
