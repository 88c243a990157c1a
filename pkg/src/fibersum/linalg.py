"""Fraction-free linear algebra over exact rings.

Two primitives: a Bareiss determinant for square matrices of Laurent
polynomials (all intermediate divisions are exact in an integral domain),
and an integer matrix rank by fraction-free forward elimination.  No
floating point anywhere.
"""

from __future__ import annotations

from .ring import LaurentPoly


def laurent_det(matrix) -> LaurentPoly:
    """Determinant of a square matrix of LaurentPoly entries.

    One-step Bareiss elimination with row pivoting; each division by the
    previous pivot is exact because every intermediate entry is a minor of
    the input matrix.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    a = [list(row) for row in matrix]
    for row in a:
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def integer_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, len(m)):
            factor = m[i][col]
            for j in range(ncols):
                # Bareiss step: division by the previous pivot is exact.
                m[i][j] = (pivot * m[i][j] - factor * m[rank][j]) // prev
        prev = pivot
        rank += 1
        if rank == len(m):
            break
    return rank
