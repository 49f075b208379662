"""Symmetric group combinatorics: permutations, compositions, tableaux.

Permutations act on letters 1..n and are stored in one-line notation,
so ``w.images[i-1] == w(i)``.  Compositions of n cut {1..n} into
consecutive blocks; their Young subgroups, distinguished coset
representatives and double coset representatives drive everything the
Hecke algebra modules do.

Positions and letters are 1-based throughout, matching the usual
combinatorial conventions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, cached_property
from typing import Iterator

__all__ = [
    'Permutation',
    'Composition',
    'RowStandardTableau',
    'NotDistinguished',
    'all_permutations',
    'coset_reps',
    'double_coset_reps',
    'intersect_composition',
    'stirling2',
    'bell',
]


class NotDistinguished(ValueError):
    """Raised when a permutation is not a distinguished (double) coset rep."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> w = Permutation((2, 3, 1))
    >>> w(1), w(3)
    (2, 1)
    >>> w.length()
    2
    >>> Permutation.from_word(3, w.reduced_word()) == w
    True
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f'not a permutation of 1..{len(self.images)}: {self.images}')

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition of functions: (self * other)(i) == self(other(i))."""
        if self.n != other.n:
            raise ValueError('size mismatch')
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Coxeter length = number of inversions."""
        im = self.images
        return sum(1 for a, b in itertools.combinations(range(self.n), 2) if im[a] > im[b])

    def reduced_word(self) -> tuple[int, ...]:
        """Indices i1..ik with self == s_{i1} * ... * s_{ik}, k = length."""
        im = list(self.images)
        picked = []
        while True:
            for i in range(len(im) - 1):
                if im[i] > im[i + 1]:
                    # right multiplication by s_{i+1} removes this descent
                    im[i], im[i + 1] = im[i + 1], im[i]
                    picked.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(picked))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> Permutation:
        """The adjacent transposition s_i = (i, i+1), 1 <= i <= n-1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f's_{i} does not exist in S_{n}')
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(tuple(im))

    @classmethod
    def from_word(cls, n: int, word: tuple[int, ...] | list[int]) -> Permutation:
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(n, i)
        return w

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f'Permutation({self.images!r})'


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n sorted lexicographically by one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@dataclass(frozen=True)
class Composition:
    """A composition of n: parts sum to n, zero parts are kept verbatim.

    >>> lam = Composition((2, 0, 3))
    >>> lam.n
    5
    >>> lam.blocks()
    ((1, 2), (), (3, 4, 5))
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise ValueError(f'negative part in {self.parts}')

    @property
    def n(self) -> int:
        return sum(self.parts)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Consecutive blocks of {1..n}, one per part (possibly empty)."""
        out = []
        start = 1
        for p in self.parts:
            out.append(tuple(range(start, start + p)))
            start += p
        return tuple(out)

    def block_index(self, letter: int) -> int:
        """1-based index of the part whose block contains the letter."""
        start = 1
        for idx, p in enumerate(self.parts, start=1):
            if start <= letter < start + p:
                return idx
            start += p
        raise ValueError(f'letter {letter} out of range for {self}')

    def young_subgroup(self) -> list[Permutation]:
        """All elements of Y_lambda, the block-wise permutations."""
        n = self.n
        out = []
        per_block = [list(itertools.permutations(b)) for b in self.blocks()]
        for choice in itertools.product(*per_block):
            im = [0] * n
            for block, perm in zip(self.blocks(), choice):
                for src, dst in zip(block, perm):
                    im[src - 1] = dst
            out.append(Permutation(tuple(im)))
        return sorted(out)

    @classmethod
    def hook(cls, n: int, k: int) -> Composition:
        """The hook (n-k, 1^k); for k = n the first part is zero."""
        if not 0 <= k <= n:
            raise ValueError(f'hook (n-k, 1^k) needs 0 <= k <= n, got k={k}, n={n}')
        return cls((n - k,) + (1,) * k)

    def __repr__(self) -> str:
        return f'Composition({self.parts!r})'


@dataclass(frozen=True)
class RowStandardTableau:
    """A filling of a composition shape with 1..n, rows increasing.

    Rows may be empty when the shape has zero parts.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = sorted(x for row in self.rows for x in row)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError(f'entries must be exactly 1..n: {self.rows}')
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f'rows must increase: {self.rows}')

    @property
    def shape(self) -> Composition:
        return Composition(tuple(len(row) for row in self.rows))

    @classmethod
    def initial(cls, shape: Composition) -> RowStandardTableau:
        """The row filling 1, 2, ..., n in reading order."""
        return cls(shape.blocks())

    def permutation(self) -> Permutation:
        """The d with d applied entrywise to the initial tableau gives self.

        Entries of the initial tableau in reading order are 1..n, so the
        one-line notation of d is just the concatenation of the rows.
        """
        return Permutation(tuple(x for row in self.rows for x in row))

    def row_of(self, letter: int) -> int:
        for idx, row in enumerate(self.rows, start=1):
            if letter in row:
                return idx
        raise ValueError(f'{letter} not in tableau')

    def __repr__(self) -> str:
        return f'RowStandardTableau({self.rows!r})'


def row_standard_tableaux(shape: Composition) -> Iterator[RowStandardTableau]:
    """All row-standard fillings of the shape, in no particular order."""

    def fill(remaining: frozenset[int], parts: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not parts:
            yield ()
            return
        for chosen in itertools.combinations(sorted(remaining), parts[0]):
            for rest in fill(remaining - set(chosen), parts[1:]):
                yield (chosen,) + rest

    n = shape.n
    for rows in fill(frozenset(range(1, n + 1)), shape.parts):
        yield RowStandardTableau(rows)


def _increasing_on_blocks(w: Permutation, shape: Composition) -> bool:
    return all(w(a) < w(b) for block in shape.blocks() for a, b in zip(block, block[1:]))


@cache
def coset_reps(shape: Composition) -> tuple[Permutation, ...]:
    """Distinguished left coset representatives D_lambda of Y_lambda.

    These are the minimal length elements of the cosets d Y_lambda,
    equivalently the permutations increasing on every block, equivalently
    the permutations read off row-standard tableaux of the shape.
    Sorted lexicographically by one-line notation.

    >>> [d.images for d in coset_reps(Composition((2, 1)))]
    [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    """
    return tuple(sorted(t.permutation() for t in row_standard_tableaux(shape)))


@cache
def double_coset_reps(mu: Composition, lam: Composition) -> tuple[Permutation, ...]:
    """Distinguished double coset representatives D_{mu,lambda}.

    D_{mu,lambda} = inverses of D_mu, intersected with D_lambda: the d
    increasing on lambda-blocks whose inverse is increasing on mu-blocks.
    Each Y_mu d Y_lambda contains exactly one such d.
    """
    if mu.n != lam.n:
        raise ValueError('compositions of different n')
    return tuple(d for d in coset_reps(lam) if _increasing_on_blocks(d.inverse(), mu))


def is_distinguished(mu: Composition, d: Permutation, lam: Composition) -> bool:
    return _increasing_on_blocks(d, lam) and _increasing_on_blocks(d.inverse(), mu)


@cache
def count_double_cosets(mu: Composition, lam: Composition) -> int:
    """|D_{mu,lambda}| counted without enumerating any permutations.

    Double cosets Y_mu d Y_lambda biject with nonnegative integer
    matrices whose row sums are mu and column sums are lam (entry (i,j)
    records |d^{-1}(mu-block i) meet lambda-block j|), so the count is a
    contingency-table count.  Rows are filled smallest first; the state
    keeps the remaining column sums sorted, which collapses the many
    interchangeable singleton columns of hook shapes.

    >>> count_double_cosets(Composition((3, 1)), Composition((2, 1, 1)))
    3
    >>> count_double_cosets(Composition((2, 1, 1)), Composition((2, 1, 1)))
    7
    """
    if mu.n != lam.n:
        raise ValueError('compositions of different n')
    rows = tuple(sorted(p for p in mu.parts if p))
    cols = tuple(sorted(p for p in lam.parts if p))

    def fills(target: int, caps: tuple[int, ...]):
        if not caps:
            if target == 0:
                yield ()
            return
        for x in range(min(target, caps[0]) + 1):
            for rest in fills(target - x, caps[1:]):
                yield (x,) + rest

    @cache
    def count(i: int, rem: tuple[int, ...]) -> int:
        if i == len(rows) - 1:
            # last row is forced to absorb whatever remains
            return 1 if sum(rem) == rows[i] else 0
        return sum(
            count(i + 1, tuple(sorted(r - x for r, x in zip(rem, fill))))
            for fill in fills(rows[i], rem))

    if not rows:
        return 1 if not cols else 0
    return count(0, cols)


def intersect_composition(mu: Composition, d: Permutation, lam: Composition) -> Composition:
    """The composition tau with Y_tau = d^-1 Y_mu d intersect Y_lambda.

    Requires d in D_{mu,lambda}; then within each lambda-block the
    preimages d^-1(mu-block) are consecutive runs, and tau lists their
    sizes in order.  Empty intersections are dropped, so tau never has
    zero parts (the subgroup does not see them).

    >>> mu, lam = Composition((2, 1, 1)), Composition((3, 1))
    >>> d = Permutation((1, 2, 4, 3))
    >>> intersect_composition(mu, d, lam).parts
    (2, 1, 1)
    """
    if not is_distinguished(mu, d, lam):
        raise NotDistinguished(f'{d} is not in D_{mu.parts},{lam.parts}')
    dinv = d.inverse()
    parts = []
    for lam_block in lam.blocks():
        for mu_block in mu.blocks():
            size = sum(1 for x in mu_block if dinv(x) in lam_block)
            if size:
                parts.append(size)
    return Composition(tuple(parts))


@cache
def stirling2(r: int, k: int) -> int:
    """Stirling numbers of the second kind: set partitions of r into k blocks.

    s(r, k) = k*s(r-1, k) + s(r-1, k-1), s(0, 0) = 1.

    >>> [stirling2(4, k) for k in range(5)]
    [0, 1, 7, 6, 1]
    """
    if r == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > r:
        return 0
    return k * stirling2(r - 1, k) + stirling2(r - 1, k - 1)


def bell(m: int) -> int:
    """Number of set partitions of an m-element set."""
    return sum(stirling2(m, k) for k in range(m + 1))
