"""Posets of dimension at most two, built as intersections of linear orders.

Elements are labelled 1..n.  Internally a poset is kept as two lists of
bitmasks (strict up-sets and down-sets) indexed 0..n-1, which keeps the
antichain search and canonical labelling cheap.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Permutation, SizeMismatch, check_guard
from .stats import lds_length


@dataclass(frozen=True)
class LinearOrder:
    """Element ``e`` has rank ``ranking[e]``; smaller rank means smaller element."""

    ranking: Permutation

    @property
    def n(self) -> int:
        return self.ranking.n

    @classmethod
    def natural(cls, n: int) -> "LinearOrder":
        return cls(Permutation(tuple(range(1, n + 1))))

    @classmethod
    def from_sequence(cls, elements: Sequence[int]) -> "LinearOrder":
        """Order listing ``elements`` from smallest to largest."""
        ranks = [0] * len(elements)
        for rank, e in enumerate(elements, start=1):
            ranks[e - 1] = rank
        return cls(Permutation(tuple(ranks)))

    def rank(self, e: int) -> int:
        return self.ranking[e]


@dataclass(frozen=True)
class Poset:
    """Strict partial order on 1..n; ``lt[a-1][b-1]`` is True when a < b."""

    lt: tuple[tuple[bool, ...], ...]
    up: tuple[int, ...] = field(init=False, repr=False, compare=False)
    down: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lt = tuple(tuple(bool(x) for x in row) for row in self.lt)
        n = len(lt)
        if any(len(row) != n for row in lt):
            raise ValueError("relation matrix must be square")
        object.__setattr__(self, "lt", lt)
        up = [sum(1 << b for b in range(n) if lt[a][b]) for a in range(n)]
        down = [sum(1 << a for a in range(n) if lt[a][b]) for b in range(n)]
        object.__setattr__(self, "up", tuple(up))
        object.__setattr__(self, "down", tuple(down))
        for a in range(n):
            if lt[a][a]:
                raise ValueError(f"relation is not irreflexive at {a + 1}")
            if up[a] & down[a]:
                raise ValueError(f"relation is not antisymmetric at {a + 1}")
            for b in _bits(up[a]):
                if up[b] & ~up[a]:
                    raise ValueError(f"relation is not transitive through {a + 1} < {b + 1}")

    @property
    def n(self) -> int:
        return len(self.lt)

    def less(self, a: int, b: int) -> bool:
        return self.lt[a - 1][b - 1]

    def comparable(self, a: int, b: int) -> bool:
        return self.lt[a - 1][b - 1] or self.lt[b - 1][a - 1]

    def relations(self) -> list[tuple[int, int]]:
        return [(a + 1, b + 1) for a in range(self.n) for b in _bits(self.up[a])]

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Rename element ``e`` to ``perm[e-1]``."""
        n = self.n
        lt = [[False] * n for _ in range(n)]
        for a, b in self.relations():
            lt[perm[a - 1] - 1][perm[b - 1] - 1] = True
        return Poset(lt)

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls([[a < b for b in range(n)] for a in range(n)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls([[False] * n for _ in range(n)])

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Transitive closure of the given cover pairs (a, b) meaning a < b."""
        lt = [[False] * n for _ in range(n)]
        for a, b in pairs:
            lt[a - 1][b - 1] = True
        for m in range(n):
            for a in range(n):
                if lt[a][m]:
                    for b in range(n):
                        if lt[m][b]:
                            lt[a][b] = True
        return cls(lt)


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def intersect_linear_orders(sigma: LinearOrder, tau: LinearOrder) -> Poset:
    if sigma.n != tau.n:
        raise SizeMismatch(f"linear orders on {sigma.n} and {tau.n} elements")
    s, t = sigma.ranking.word, tau.ranking.word
    n = sigma.n
    return Poset([[s[a] < s[b] and t[a] < t[b] for b in range(n)] for a in range(n)])


def poset_from_permutation(pi: Permutation) -> Poset:
    """a < b iff a < b as integers and a appears before b in the word of ``pi``."""
    return intersect_linear_orders(LinearOrder.natural(pi.n), LinearOrder(pi.inverse()))


def pair_normal_form(sigma: LinearOrder, tau: LinearOrder) -> tuple[int, ...]:
    """Isomorphism invariant of a pair of linear orders.

    Relabel so that ``sigma`` becomes the natural order; the word listing
    the tau-ranks in sigma-order is then a complete invariant of the pair.
    """
    if sigma.n != tau.n:
        raise SizeMismatch(f"linear orders on {sigma.n} and {tau.n} elements")
    by_sigma = sorted(range(1, sigma.n + 1), key=sigma.rank)
    return tuple(tau.rank(e) for e in by_sigma)


# ---------------------------------------------------------------------------
# maximum antichain
# ---------------------------------------------------------------------------

def max_antichain(poset: Poset) -> tuple[int, frozenset[int]]:
    """Largest set of pairwise incomparable elements, with a witness.

    Branch and bound for a maximum independent set of the comparability
    graph; the bound is a greedy cover of the candidates by chains (cliques
    of the comparability graph), each of which holds at most one element.
    """
    n = poset.n
    if n == 0:
        return 0, frozenset()
    comp = [poset.up[a] | poset.down[a] for a in range(n)]
    best_size = 0
    best_set = 0

    def chain_cover(cand: int) -> int:
        count = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            chain = 1 << v
            rest = cand & comp[v]
            while rest:
                w = (rest & -rest).bit_length() - 1
                chain |= 1 << w
                rest &= comp[w]
            cand &= ~chain
            count += 1
        return count

    def search(chosen: int, size: int, cand: int) -> None:
        nonlocal best_size, best_set
        if not cand:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + chain_cover(cand) <= best_size:
            return
        v = (cand & -cand).bit_length() - 1
        # branch: take v, then leave v out
        search(chosen | (1 << v), size + 1, cand & ~comp[v] & ~(1 << v))
        search(chosen, size, cand & ~(1 << v))

    search(0, 0, (1 << n) - 1)
    return best_size, frozenset(v + 1 for v in _bits(best_set))


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def _heights(poset: Poset) -> list[int]:
    n = poset.n
    height = [0] * n
    order = sorted(range(n), key=lambda a: bin(poset.down[a]).count("1"))
    for b in order:
        for a in _bits(poset.down[b]):
            height[b] = max(height[b], height[a] + 1)
    return height


def _refined_cells(poset: Poset) -> list[list[int]]:
    """Ordered partition of the elements into isomorphism-invariant classes."""
    n = poset.n
    up, down = poset.up, poset.down
    height = _heights(poset)
    color = [
        (bin(down[a]).count("1"), bin(up[a]).count("1"), height[a]) for a in range(n)
    ]
    while True:
        ranks = {c: i for i, c in enumerate(sorted(set(color)))}
        color = [ranks[c] for c in color]
        new = [
            (
                color[a],
                tuple(sorted(color[b] for b in _bits(down[a]))),
                tuple(sorted(color[b] for b in _bits(up[a]))),
            )
            for a in range(n)
        ]
        if len(set(new)) == len(set(color)):
            break
        color = new
    cells: dict[int, list[int]] = {}
    for a in range(n):
        cells.setdefault(color[a], []).append(a)
    return [cells[c] for c in sorted(cells)]


def _split_twins(poset: Poset, cell: list[int]) -> list[list[int]]:
    """Group elements of a cell with identical up- and down-sets."""
    groups: dict[tuple[int, int], list[int]] = {}
    for a in cell:
        groups.setdefault((poset.up[a], poset.down[a]), []).append(a)
    return list(groups.values())


def _encode(poset: Poset, order: Sequence[int]) -> int:
    # row-major bit string of the relation in the given label order; the
    # first pair is the most significant bit so smaller ints sort first
    pos = {a: i for i, a in enumerate(order)}
    n = poset.n
    bits = 0
    for a in order:
        row = 0
        for b in _bits(poset.up[a]):
            row |= 1 << (n - 1 - pos[b])
        bits = (bits << n) | row
    return bits


def _multiset_orders(counts: list[int]) -> Iterable[tuple[int, ...]]:
    total = sum(counts)
    if total == 0:
        yield ()
        return
    for g, c in enumerate(counts):
        if c:
            counts[g] -= 1
            for rest in _multiset_orders(counts):
                yield (g,) + rest
            counts[g] += 1


def _cell_orders(poset: Poset, cell: list[int]) -> Iterable[tuple[int, ...]]:
    """Orders of a cell worth trying.

    Twins are swapped by an automorphism, so only the pattern of twin
    groups along the order matters, not which twin sits where.
    """
    twins = _split_twins(poset, cell)
    if len(twins) == 1:
        yield tuple(cell)
        return
    for pattern in _multiset_orders([len(g) for g in twins]):
        taken = [0] * len(twins)
        order = []
        for g in pattern:
            order.append(twins[g][taken[g]])
            taken[g] += 1
        yield tuple(order)


def canonical_form(poset: Poset, guard: int | None = None) -> bytes:
    """Encoding equal for two posets exactly when they are isomorphic.

    The labelling search is restricted to orders consistent with an
    invariant refinement of (in-degree, out-degree, height); within a cell
    the lexicographically smallest relation bit string wins.
    """
    n = poset.n
    check_guard("canonical_form", n, guard)
    cells = _refined_cells(poset)
    best = None
    for choice in itertools.product(*(_cell_orders(poset, c) for c in cells)):
        order = [a for part in choice for a in part]
        code = _encode(poset, order)
        if best is None or code < best:
            best = code
    nbytes = (n * n + 7) // 8
    return bytes([n]) + (best or 0).to_bytes(nbytes, "big")


def is_isomorphic(p1: Poset, p2: Poset, guard: int | None = None) -> bool:
    check_guard("canonical_form", max(p1.n, p2.n), guard)
    if p1.n != p2.n:
        return False
    if len(p1.relations()) != len(p2.relations()):
        return False
    return canonical_form(p1, guard) == canonical_form(p2, guard)


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------

def _census_chunk(args: tuple[int, int]) -> dict[bytes, int]:
    n, first = args
    rest = [v for v in range(1, n + 1) if v != first]
    classes: dict[bytes, int] = {}
    for tail in itertools.permutations(rest):
        word = (first,) + tail
        code = canonical_form(poset_from_permutation(Permutation(word)), guard=n)
        if code not in classes:
            classes[code] = lds_length(word)
    return classes


def epsilon_classes(n: int, guard: int | None = None, workers: int = 1) -> dict[bytes, int]:
    """Isomorphism classes of dimension-2 posets on n elements.

    Maps each canonical form to the size of its maximum antichain (which
    equals the longest decreasing subsequence of any generating word).
    """
    check_guard("epsilon_exact", n, guard)
    jobs = [(n, first) for first in range(1, n + 1)]
    if workers > 1 and n >= 6:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_census_chunk, jobs))
    else:
        parts = [_census_chunk(job) for job in jobs]
    merged: dict[bytes, int] = {}
    for part in parts:
        merged.update(part)
    return merged


def epsilon_exact(n: int, guard: int | None = None, workers: int = 1) -> dict[int, int]:
    """k -> number of non-isomorphic n-element dimension-2 posets of width k.

    >>> epsilon_exact(3)
    {1: 1, 2: 3, 3: 1}
    """
    if n < 1:
        raise ValueError("n must be positive")
    counts = Counter(epsilon_classes(n, guard, workers).values())
    return {k: counts.get(k, 0) for k in range(1, n + 1)}
