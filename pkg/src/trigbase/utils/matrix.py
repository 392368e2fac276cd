"""Exact dense matrix helpers on lists of rows."""

from typing import Any, List, Optional, Sequence, Tuple

Matrix = List[List[Any]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Any]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Matrix:
    """Exact product; inner dimensions must agree."""
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def diagonal(values: Sequence[Any]) -> Matrix:
    n = len(values)
    return [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]


def leading_block(a: Sequence[Sequence[Any]], n: int) -> Matrix:
    return [list(row[:n]) for row in a[:n]]


def first_mismatch(
    a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]
) -> Optional[Tuple[int, int, Any, Any]]:
    """Return (i, j, a_ij, b_ij) for the first differing entry in row order, or None.

    Missing entries count as 0, so triangular storage compares against full.
    """
    rows = max(len(a), len(b))
    for i in range(rows):
        ra = a[i] if i < len(a) else []
        rb = b[i] if i < len(b) else []
        for j in range(max(len(ra), len(rb))):
            x = ra[j] if j < len(ra) else 0
            y = rb[j] if j < len(rb) else 0
            if x != y:
                return i, j, x, y
    return None


def bareiss_det(a: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant of an integer matrix."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
