"""Exact linear algebra over Q (fraction-free) and over prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import sympy

# 2**62 - 57, the largest prime below 2**62
DEFAULT_PRIME = 4611686018427387847


class ShapeError(ValueError):
    pass


def _to_fraction(x) -> Fraction:
    return Fraction(x)  # accepts ints, Fractions and "num/den" strings


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix over Q (``prime is None``) or GF(prime).

    Rational entries are stored as reduced Fractions, field entries as
    canonical residues in [0, prime).
    """

    entries: tuple[tuple, ...]
    ncols: int
    prime: int | None = None

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], ncols: int | None = None, prime: int | None = None):
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ShapeError("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        if prime is None:
            data = tuple(tuple(_to_fraction(x) for x in r) for r in rows)
        else:
            if not sympy.isprime(prime):
                raise ValueError(f"modulus {prime} is not prime")
            data = tuple(tuple(int(x) % prime for x in r) for r in rows)
        return cls(data, ncols, prime)

    @classmethod
    def identity(cls, n: int, prime: int | None = None):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n, prime)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def transpose(self) -> "ExactMatrix":
        cols = [tuple(r[j] for r in self.entries) for j in range(self.ncols)]
        return ExactMatrix(tuple(cols), self.nrows, self.prime)

    def mod(self, prime: int) -> "ExactMatrix":
        """Reduce a rational matrix mod p (denominators must be invertible)."""
        if self.prime is not None:
            raise ValueError("already a prime-field matrix")
        rows = []
        for r in self.entries:
            rows.append([x.numerator * pow(x.denominator, -1, prime) for x in r])
        return ExactMatrix.from_rows(rows, self.ncols, prime)

    def matvec(self, x: Sequence) -> list:
        if len(x) != self.ncols:
            raise ShapeError(f"vector of length {len(x)} for {self.ncols} columns")
        if self.prime is None:
            xs = [_to_fraction(v) for v in x]
            return [sum((a * b for a, b in zip(r, xs)), Fraction(0)) for r in self.entries]
        p = self.prime
        return [sum(a * int(b) for a, b in zip(r, x)) % p for r in self.entries]

    def to_json(self) -> list[list[str]]:
        if self.prime is None:
            return [[f"{x.numerator}/{x.denominator}" for x in r] for r in self.entries]
        return [[str(x) for x in r] for r in self.entries]


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    out = []
    for r in m.entries:
        d = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * d) for x in r])
    return out


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    a = [r[:] for r in rows]
    nrows = len(a)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        for i in range(rank + 1, nrows):
            ri = a[i]
            f = ri[col]
            for j in range(col + 1, ncols):
                # exact division is the Bareiss invariant
                ri[j] = (pr[col] * ri[j] - f * pr[j]) // prev
            ri[col] = 0
        prev = pr[col]
        rank += 1
        if rank == nrows:
            break
    return rank


def rref_mod(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p); returns (nonzero rows, pivot columns)."""
    a = [[x % p for x in r] for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        pr = [(x * inv) % p for x in a[rank]]
        a[rank] = pr
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col]
                ri = a[i]
                for j in range(col, ncols):
                    if pr[j]:
                        ri[j] = (ri[j] - f * pr[j]) % p
        pivots.append(col)
        rank += 1
        if rank == len(a):
            break
    return a[:rank], pivots


def _rank_mod(rows: list[list[int]], ncols: int, p: int) -> int:
    a = [r[:] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        inv = pow(pr[col], -1, p)
        for i in range(rank + 1, len(a)):
            ri = a[i]
            if ri[col]:
                f = ri[col] * inv % p
                for j in range(col + 1, ncols):
                    if pr[j]:
                        ri[j] = (ri[j] - f * pr[j]) % p
                ri[col] = 0
        rank += 1
        if rank == len(a):
            break
    return rank


def rank(m: ExactMatrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if m.prime is None:
        return _bareiss_rank(_integer_rows(m), m.ncols)
    return _rank_mod([list(r) for r in m.entries], m.ncols, m.prime)


def rank_of_rows(rows: Sequence[Sequence], ncols: int, prime: int | None = None) -> int:
    """Rank of a list of integer/rational row vectors."""
    if not rows:
        return 0
    if prime is None and all(type(x) is int for r in rows for x in r):
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return _bareiss_rank([list(r) for r in rows], ncols)
    return rank(ExactMatrix.from_rows(rows, ncols, prime))


@dataclass(frozen=True)
class Solution:
    kind: str                  # "unique" | "none" | "underdetermined"
    x: tuple | None = None     # a particular solution when one exists
    nullity: int = 0


def _rref_rational(rows: list[list[Fraction]], ncols: int):
    a = [r[:] for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        pr = a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(col)
        rank += 1
    return a, pivots


def solve(m: ExactMatrix, b: Sequence) -> Solution:
    """Classify and solve m x = b exactly."""
    if len(b) != m.nrows:
        raise ShapeError(f"right-hand side has length {len(b)}, matrix has {m.nrows} rows")
    n = m.ncols
    if m.prime is None:
        aug = [list(r) + [_to_fraction(bi)] for r, bi in zip(m.entries, b)]
        red, pivots = _rref_rational(aug, n + 1)
        zero = Fraction(0)
    else:
        p = m.prime
        aug = [list(r) + [int(bi) % p] for r, bi in zip(m.entries, b)]
        red, pivots = rref_mod(aug, n + 1, p)
        zero = 0
    if n in pivots:
        return Solution("none")
    x = [zero] * n
    for row, col in zip(red, pivots):
        x[col] = row[n]
    nullity = n - len(pivots)
    return Solution("unique" if nullity == 0 else "underdetermined", tuple(x), nullity)
