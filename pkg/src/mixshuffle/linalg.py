"""Exact linear algebra over the rationals.

Rank uses fraction-free (Bareiss) elimination on integer rows; null vectors
and span membership use plain ``Fraction`` row reduction.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def integer_rows(matrix: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def bareiss_rank(matrix: Sequence[Sequence]) -> int:
    """Rank by fraction-free Gaussian elimination; every division is exact."""
    m = integer_rows(matrix)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            a = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, ncols):
                num = p * row_i[j] - a * row_r[j]
                assert num % prev == 0
                row_i[j] = num // prev
            row_i[col] = 0
        prev = p
        rank += 1
    return rank


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[Fraction(x) for x in row] for row in matrix]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def null_vector(columns: Sequence[Sequence]) -> tuple[Fraction, ...] | None:
    """A primitive integer vector c with sum_i c_i * columns[i] = 0, or None.

    The sign is fixed so that the first nonzero entry is positive.
    """
    k = len(columns)
    if k == 0:
        return None
    height = len(columns[0])
    if height == 0:
        vec = [Fraction(0)] * k
        vec[0] = Fraction(1)
        return tuple(vec)
    matrix = [[columns[j][i] for j in range(k)] for i in range(height)]
    red, pivots = rref(matrix)
    free = next((j for j in range(k) if j not in pivots), None)
    if free is None:
        return None
    vec = [Fraction(0)] * k
    vec[free] = Fraction(1)
    for row, col in zip(red, pivots):
        vec[col] = -row[free]
    scale = lcm(*(x.denominator for x in vec))
    ints = [int(x * scale) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    first = next(x for x in ints if x)
    sign = 1 if first > 0 else -1
    return tuple(Fraction(sign * x // g) for x in ints)


def solve(columns: Sequence[Sequence], target: Sequence) -> tuple[Fraction, ...] | None:
    """Some x with sum_i x_i * columns[i] = target, or None if inconsistent."""
    k = len(columns)
    height = len(target)
    matrix = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(height)]
    if not matrix:
        return tuple(Fraction(0) for _ in range(k))
    red, pivots = rref(matrix)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for row, col in zip(red, pivots):
        x[col] = row[k]
    return tuple(x)
