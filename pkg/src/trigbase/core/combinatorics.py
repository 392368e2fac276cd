"""Exact integer sequences and triangles.

Binomials (generalized to negative upper index), pyramidal numbers,
the Catalan family, the two Catalan triangles and the arithmetic
functions used by the factor battery.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt, prod
from typing import List, Optional

from .errors import DegenerateDenominator, NegativeK, NonIntegerCoefficient, OutOfTriangle
from .series import TruncSeries
from ..utils.cache import RecurrenceCache

logger = logging.getLogger(__name__)


@lru_cache(maxsize=65536)
def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient n(n-1)...(n-k+1)/k!.

    Args:
        n: Upper index, any integer
        k: Lower index, k >= 0

    Raises:
        NegativeK: if k < 0
    """
    if k < 0:
        raise NegativeK(f"binomial({n}, {k}): lower index must be >= 0")
    if n >= 0:
        return comb(n, k)
    # upper negation
    return (-1) ** k * comb(k - n - 1, k)


def pyramidal(i: int, j: int) -> int:
    """Pyramidal number p_j^[i], the t^j coefficient of (1+t)/(1-t)^(i+1).

    Zero for j < 0.
    """
    if i < 0:
        raise ValueError(f"pyramidal dimension must be >= 0, got {i}")
    if j < 0:
        return 0
    return 2 * binomial(i + j, j) - binomial(i + j - 1, j)


def pyramidal_row(i: int, count: int) -> List[int]:
    """[p_0^[i], ..., p_{count-1}^[i]]."""
    return [pyramidal(i, j) for j in range(count)]


def pyramidal_array(rows: int, cols: int) -> List[List[Optional[int]]]:
    """Staggered difference array used to memorize the spread polynomials.

    Row r holds p^[r+2] starting at column r with a blank between
    consecutive entries, so each row is the running sum of the row above.
    Blank cells are None.
    """
    grid: List[List[Optional[int]]] = []
    for r in range(rows):
        row: List[Optional[int]] = [None] * cols
        for c in range(r, cols, 2):
            row[c] = pyramidal(r + 2, (c - r) // 2)
        grid.append(row)
    return grid


def pyramidal_column(index: int) -> List[int]:
    """Entries p^[index-2k]_k for k = 0, 1, ... while the dimension stays >= 0.

    This is the anti-diagonal of the pyramidal table that the leading
    coefficients of the zpread factors follow.
    """
    return [pyramidal(index - 2 * k, k) for k in range(index // 2 + 1)]


def _segner_step(n: int, known: List[int]) -> int:
    return sum(known[k] * known[n - 1 - k] for k in range(n))


_SEGNER = RecurrenceCache("catalan-segner", [1], _segner_step)


def catalan(n: int) -> int:
    """Catalan number binom(2n, n)/(n+1)."""
    if n < 0:
        raise ValueError(f"catalan index must be >= 0, got {n}")
    return binomial(2 * n, n) // (n + 1)


def catalan_segner(n: int) -> int:
    """Catalan number from the Segner recursion C_n = sum C_k C_{n-1-k}."""
    if n < 0:
        raise ValueError(f"catalan index must be >= 0, got {n}")
    return _SEGNER.get(n)


def catalan_difference_form(n: int) -> int:
    """binom(2n, n) - binom(2n-1, n)."""
    return binomial(2 * n, n) - binomial(2 * n - 1, n)


def central_binomial(n: int) -> int:
    if n < 0:
        raise ValueError(f"central binomial index must be >= 0, got {n}")
    return binomial(2 * n, n)


def fuss_catalan(m: int, p: int, r: int) -> Fraction:
    """Fuss-Catalan number F_m(p, r) = r/(mp+r) * binom(mp+r, m).

    F_0(p, r) = 1 for all p, r, the constant term of the r-fold
    convolution power.

    Raises:
        DegenerateDenominator: if mp + r == 0 and m > 0
    """
    if min(m, p, r) < 0:
        raise ValueError(f"F_{m}({p},{r}): indices must be >= 0")
    if m == 0:
        return Fraction(1)
    if m * p + r == 0:
        raise DegenerateDenominator(f"F_{m}({p},{r}): mp + r = 0")
    return Fraction(r, m * p + r) * binomial(m * p + r, m)


def fuss_catalan_forms(m: int, p: int, r: int) -> List[Fraction]:
    """All closed forms of F_m(p, r) whose denominators are nonzero."""
    forms: List[Fraction] = []
    if m * p + r != 0:
        forms.append(Fraction(r, m * p + r) * binomial(m * p + r, m))
    if m * (p - 1) + r != 0:
        forms.append(Fraction(r, m * (p - 1) + r) * binomial(m * p + r - 1, m))
    if m != 0:
        forms.append(Fraction(r, m) * binomial(m * p + r - 1, m - 1))
    return forms


def generalized_binomial_series(p: int, r: int, order: int) -> TruncSeries:
    """sum_m F_m(p, r) x^m, the r-fold convolution of the generalized binomial series."""
    return TruncSeries.from_function(lambda m: fuss_catalan(m, p, r), order)


def catalan_series(order: int) -> TruncSeries:
    """C(x) = sum C_n x^n."""
    return TruncSeries.from_function(catalan, order)


def central_binomial_series(order: int) -> TruncSeries:
    """B(x) = sum binom(2n, n) x^n = (1-4x)^(-1/2)."""
    return TruncSeries.from_function(central_binomial, order)


def _exact(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerCoefficient(f"{what} = {num}/{den} is not an integer")
    return q


def catalan_triangle_even(i: int, j: int) -> int:
    """B^even_ij = (j/i) binom(2i, i-j), indexed from 1."""
    if i < 1 or j < 1:
        raise ValueError(f"B^even is indexed from 1, got ({i}, {j})")
    if j > i:
        raise OutOfTriangle(f"B^even({i}, {j}) lies above the diagonal")
    return _exact(j * binomial(2 * i, i - j), i, f"B^even({i},{j})")


def catalan_triangle_odd(i: int, j: int) -> int:
    """B^odd_ij = ((2j+1)/(2i+1)) binom(2i+1, i-j), indexed from 0."""
    if i < 0 or j < 0:
        raise ValueError(f"B^odd is indexed from 0, got ({i}, {j})")
    if j > i:
        raise OutOfTriangle(f"B^odd({i}, {j}) lies above the diagonal")
    return _exact((2 * j + 1) * binomial(2 * i + 1, i - j), 2 * i + 1, f"B^odd({i},{j})")


def catalan_triangle_even_matrix(size: int) -> List[List[int]]:
    """Rows i = 1..size of B^even as a square lower-triangular matrix."""
    return [
        [catalan_triangle_even(i, j) if j <= i else 0 for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]


def catalan_triangle_odd_matrix(size: int) -> List[List[int]]:
    """Rows i = 0..size-1 of B^odd as a square lower-triangular matrix."""
    return [
        [catalan_triangle_odd(i, j) if j <= i else 0 for j in range(size)]
        for i in range(size)
    ]


# Arithmetic functions

def factorize(d: int) -> dict:
    """Prime factorization {p: exponent} by trial division."""
    if d < 1:
        raise ValueError(f"cannot factor {d}")
    factors: dict = {}
    p = 2
    while p * p <= d:
        while d % p == 0:
            factors[p] = factors.get(p, 0) + 1
            d //= p
        p += 1 if p == 2 else 2
    if d > 1:
        factors[d] = factors.get(d, 0) + 1
    return factors


def is_prime(d: int) -> bool:
    return d >= 2 and factorize(d) == {d: 1}


def divisors(d: int) -> List[int]:
    if d < 1:
        raise ValueError(f"divisors of {d} are not defined here")
    small = [k for k in range(1, isqrt(d) + 1) if d % k == 0]
    large = [d // k for k in reversed(small) if k * k != d]
    return small + large


def totient(d: int) -> int:
    """Euler's phi."""
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(d).items())


def moebius(d: int) -> int:
    factors = factorize(d)
    if any(e > 1 for e in factors.values()):
        return 0
    return (-1) ** len(factors)


def a014963(d: int) -> int:
    """q if d is a power of the prime q, else 1 (exponential of von Mangoldt)."""
    factors = factorize(d)
    if len(factors) == 1:
        return next(iter(factors))
    return 1


def a014963_product(d: int) -> Fraction:
    """prod_{k | d} (d/k)^mu(k), which equals a014963(d)."""
    return prod(
        (Fraction(d // k) ** moebius(k) for k in divisors(d)),
        start=Fraction(1),
    )


def a053139(d: int) -> int:
    """totient(d) - moebius(d)."""
    return totient(d) - moebius(d)
