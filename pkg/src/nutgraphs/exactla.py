"""Exact integer linear algebra for adjacency kernels.

Everything here works on Python ints, so there is no overflow: the
fraction-free pivots of a 39x39 0/1 matrix already exceed 64 bits.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError, InvalidInputError

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))


@dataclass(frozen=True)
class KernelDescription:
    rank: int
    nullity: int
    basis: tuple[IntVector, ...]


def normalize_primitive(v: Iterable[int]) -> IntVector:
    """Divide by the entry gcd and flip sign so the first nonzero entry is positive.

    >>> normalize_primitive((2, -4, 6))
    (1, -2, 3)
    >>> normalize_primitive((0, 0, 0))
    (0, 0, 0)
    """
    v = tuple(int(x) for x in v)
    g = reduce(gcd, v, 0)
    if g == 0:
        return v
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


def mat_vec_mul(m: IntMatrix, v: Sequence[int]) -> IntVector:
    if len(v) != m.cols:
        raise DimensionError(f"vector length {len(v)} != matrix cols {m.cols}")
    return tuple(sum(a * b for a, b in zip(m.row(i), v) if a)
                 for i in range(m.rows))


def is_zero_vector(v: Iterable[int]) -> bool:
    return not any(v)


def bareiss_echelon(m: IntMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination.

    Returns the integer row-echelon form (only the first ``rank`` rows are
    meaningful) and the pivot columns. Pivots are the first nonzero entry in
    column order; rows are swapped, never scaled by anything but the
    previous pivot, so every intermediate entry is a minor of ``m``.
    """
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        pr = a[r]
        piv = pr[c]
        tail = pr[c + 1:]
        for i in range(r + 1, nrows):
            ri = a[i]
            f = ri[c]
            if f:
                ri[c + 1:] = [(piv * x - f * y) // prev for x, y in zip(ri[c + 1:], tail)]
            elif piv != prev:
                ri[c + 1:] = [piv * x // prev for x in ri[c + 1:]]
            ri[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:len(pivots)], pivots


def kernel_basis(m: IntMatrix) -> KernelDescription:
    """Rank, nullity and a primitive, sign-normalized integer kernel basis of ``m``.

    One basis vector per free column. The free variable is set to the last
    fraction-free pivot, which is the determinant of the pivot block; by
    Cramer's rule the pivot variables are then integers, so back-substitution
    only ever performs exact divisions.
    """
    if m.rows == 0 or m.cols == 0:
        raise InvalidInputError("empty matrix")
    echelon, pivots = bareiss_echelon(m)
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    det = echelon[-1][pivots[-1]] if rank else 1
    basis = []
    for f in free:
        x = [0] * m.cols
        x[f] = det
        for r in range(rank - 1, -1, -1):
            row = echelon[r]
            c = pivots[r]
            s = sum(row[j] * x[j] for j in range(c + 1, m.cols) if row[j] and x[j])
            q, rem = divmod(-s, row[c])
            if rem:
                raise ArithmeticError("inexact back-substitution")
            x[c] = q
        basis.append(normalize_primitive(x))
    return KernelDescription(rank, len(free), tuple(basis))


def rank(m: IntMatrix) -> int:
    return len(bareiss_echelon(m)[1])
