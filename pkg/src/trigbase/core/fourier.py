"""Trigonometric moment integrals and the super Catalan matrix.

I(n, m) = (1/2pi) int_0^2pi cos^n sin^m dt is computed in closed form
and, independently, as the constant term of a Laurent polynomial.
M_kl = (2k)!(2l)!/(k!l!(k+l)!) is the constant term of kappa^2k sigma^2l.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, List, Tuple

from .basechange import BasisElement, TransitionKind, TrigBasis, laurent_expand, transition_matrix
from .combinatorics import binomial, catalan, central_binomial
from .errors import CheckFailed, NonIntegerCoefficient, NotReal
from .laurent import Z, Z_INV, LaurentPoly
from .numbers import GaussianRational
from .report import CheckReport
from ..utils.matrix import bareiss_det, diagonal, first_mismatch, leading_block, mat_mul, transpose

logger = logging.getLogger(__name__)

_COS = (Z + Z_INV) * Fraction(1, 2)
_SIN = (Z - Z_INV) * GaussianRational(0, Fraction(-1, 2))


@dataclass(frozen=True)
class IntegralValue:
    """I(n, m) divided by 2pi; zero iff n or m is odd."""

    n: int
    m: int
    value: Fraction

    @property
    def is_zero(self) -> bool:
        return self.value == 0


@lru_cache(maxsize=256)
def _cos_power(n: int) -> LaurentPoly:
    return _COS**n


@lru_cache(maxsize=256)
def _sin_power(m: int) -> LaurentPoly:
    return _SIN**m


def _product_constant_term(a: LaurentPoly, b: LaurentPoly) -> Fraction:
    total = GaussianRational(0)
    for e, c in a.terms.items():
        d = b.coeff(-e)
        if d:
            total = total + GaussianRational.coerce(c) * d
    if not total.is_real():
        raise NotReal(f"constant term {total} is not real")
    return total.re


def trig_integral_laurent(n: int, m: int) -> Fraction:
    """Constant term of ((z+1/z)/2)^n ((z-1/z)/(2i))^m."""
    if n < 0 or m < 0:
        raise ValueError(f"exponents must be >= 0, got ({n}, {m})")
    return _product_constant_term(_cos_power(n), _sin_power(m))


@lru_cache(maxsize=65536)
def super_catalan(k: int, l: int) -> int:
    """Super Catalan number (2k)!(2l)!/(k!l!(k+l)!).

    For k >= 1 the value is compared with
    binom(k+l-1, l) binom(2(k+l), k+l) / binom(2(k+l)-1, 2l).

    Raises:
        NonIntegerCoefficient: if the factorial quotient is not an integer
        CheckFailed: if the two closed forms disagree
    """
    if k < 0 or l < 0:
        raise ValueError(f"super Catalan indices must be >= 0, got ({k}, {l})")
    num = factorial(2 * k) * factorial(2 * l)
    den = factorial(k) * factorial(l) * factorial(k + l)
    value, rest = divmod(num, den)
    if rest:
        raise NonIntegerCoefficient(f"M[{k},{l}] = {num}/{den}")
    if k >= 1:
        ratio = super_catalan_ratio_form(k, l)
        if ratio != value:
            report = CheckReport("super_catalan", anchor="factorial and binomial-ratio forms agree")
            report.fail(f"M[{k},{l}]", value, ratio)
            report.finish()
    return value


def super_catalan_ratio_form(k: int, l: int) -> Fraction:
    """binom(k+l-1, l) binom(2(k+l), k+l) / binom(2(k+l)-1, 2l); 0/0 at k = 0, l >= 1."""
    if k < 1:
        raise ValueError(f"ratio form needs k >= 1, got {k}")
    s = k + l
    return Fraction(binomial(s - 1, l) * binomial(2 * s, s), binomial(2 * s - 1, 2 * l))


@lru_cache(maxsize=4096)
def trig_integral(n: int, m: int) -> IntegralValue:
    """(1/2pi) int_0^2pi cos^n(t) sin^m(t) dt, exactly.

    Zero if n or m is odd, otherwise M_kl / 2^(2(k+l)) with n = 2k, m = 2l.
    The Laurent constant term is computed as well and must agree.

    Raises:
        CheckFailed: if the closed form and the Laurent value differ
    """
    if n < 0 or m < 0:
        raise ValueError(f"exponents must be >= 0, got ({n}, {m})")
    if n % 2 or m % 2:
        value = Fraction(0)
    else:
        k, l = n // 2, m // 2
        value = Fraction(super_catalan(k, l), 2 ** (2 * (k + l)))
    oracle = trig_integral_laurent(n, m)
    if oracle != value:
        report = CheckReport("trig_integral", anchor="closed form equals the Laurent constant term")
        report.fail(f"I({n},{m})", value, oracle)
        report.finish()
    return IntegralValue(n, m, value)


@dataclass(frozen=True)
class SuperCatalanMatrix:
    """Leading size x size block of M."""

    size: int
    entries: Tuple[Tuple[int, ...], ...]

    def entry(self, k: int, l: int) -> int:
        return self.entries[k][l]

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def lower_triangle(self) -> List[List[int]]:
        """Rows k = 0.., entries l <= k."""
        return [list(row[: k + 1]) for k, row in enumerate(self.entries)]


def super_catalan_matrix(size: int) -> SuperCatalanMatrix:
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    entries = tuple(tuple(super_catalan(k, l) for l in range(size)) for k in range(size))
    logger.debug(f"super Catalan matrix of size {size} built")
    return SuperCatalanMatrix(size, entries)


def weirdhyp_term(m: int, l: int) -> Fraction:
    """binom(m-1, l) binom(m, l) / binom(2m-1, 2l); the l = m term is 1."""
    if not 0 <= l <= m:
        raise ValueError(f"need 0 <= l <= m, got l={l}, m={m}")
    if l == m:
        return Fraction(1)
    return Fraction(binomial(m - 1, l) * binomial(m, l), binomial(2 * m - 1, 2 * l))


def weirdhyp_check(m: int) -> CheckReport:
    """2^2m / binom(2m, m) = sum_l binom(m-1,l) binom(m,l) / binom(2m-1,2l).

    Also checks the super Catalan row sum sum_l binom(m,l) M_{m-l,l} = 2^2m.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    report = CheckReport("weirdhyp_check", anchor="2^2m/binom(2m,m) = sum binom(m-1,l)binom(m,l)/binom(2m-1,2l)")
    lhs = Fraction(2 ** (2 * m), central_binomial(m))
    rhs = sum((weirdhyp_term(m, l) for l in range(m + 1)), Fraction(0))
    report.expect_equal(f"m={m}", lhs, rhs)
    row_sum = sum(binomial(m, l) * super_catalan(m - l, l) for l in range(m + 1))
    report.expect_equal(f"m={m} super Catalan sum", 2 ** (2 * m), row_sum)
    return report.finish()


def l_matrix(size: int) -> List[List[int]]:
    """L_ij = binom(2i, i-j), lower unitriangular."""
    return [[binomial(2 * i, i - j) if j <= i else 0 for j in range(size)] for i in range(size)]


def _d_entries(size: int) -> List[int]:
    return [1] + [(-1) ** i * 2 for i in range(1, size)]


def lu_factorization_check(size: int) -> CheckReport:
    """M = L diag(1,-2,2,-2,...) L^T with L_ij = binom(2i, i-j).

    The factorization gives det M^(n) = (-1)^floor(n/2) 2^(n-1); for
    n <= 12 this is cross-checked by fraction-free elimination.
    """
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    report = CheckReport("lu_factorization_check", anchor="M = L diag(1,-2,2,...) L^T")
    m = super_catalan_matrix(size).rows()
    l_mat = l_matrix(size)
    d = _d_entries(size)
    product = mat_mul(mat_mul(l_mat, diagonal(d)), transpose(l_mat))
    report.tick()
    miss = first_mismatch(m, product)
    if miss is not None:
        i, j, want, have = miss
        report.fail(f"M entry ({i},{j})", want, have)

    for n in range(1, size + 1):
        from_factor = prod(d[:n])
        report.expect_equal(f"det M^({n}) formula", (-1) ** (n // 2) * 2 ** (n - 1), from_factor)
        if n <= 12:
            report.expect_equal(f"det M^({n}) elimination", from_factor, bareiss_det(leading_block(m, n)))
    return report.finish()


def m_matrix_derivation_check(size: int) -> CheckReport:
    """Rebuild M as constant terms of kappa^2k sigma^2l.

    Also checks the sigma-power base change
    sigma^2j = sum_i (-1)^i binom(2j, j-i) kappa(2it) that the
    factorization rests on.
    """
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    report = CheckReport("m_matrix_derivation_check", anchor="M_kl = (1/2pi) int kappa^2k sigma^2l")
    m = super_catalan_matrix(size)
    for k in range(size):
        kappa = laurent_expand(BasisElement(TrigBasis.KAPPA_POWER, 2 * k))
        for l in range(size):
            sigma = laurent_expand(BasisElement(TrigBasis.SIGMA_POWER, 2 * l))
            report.expect_equal(f"M[{k},{l}]", m.entry(k, l), _product_constant_term(kappa, sigma))

    lt = transition_matrix(TransitionKind.INV2, size)
    for j in range(size):
        combination = LaurentPoly()
        for i in range(j + 1):
            combination = combination + laurent_expand(
                BasisElement(TrigBasis.KAPPA_MULTIPLE, 2 * i)) * ((-1) ** i * lt.entries[i][j])
        report.expect_equal(f"sigma^{2 * j}", laurent_expand(BasisElement(TrigBasis.SIGMA_POWER, 2 * j)),
                            combination)
    return report.finish()


def matrix_shape_check(size: int) -> CheckReport:
    """M is symmetric, row 0 is central binomials, row 1 is doubled Catalan numbers."""
    report = CheckReport("matrix_shape_check", anchor="M symmetric with first row binom(2k,k)")
    m = super_catalan_matrix(size)
    for k in range(size):
        report.expect_equal(f"M[0,{k}]", central_binomial(k), m.entry(0, k))
        report.expect_equal(f"M[{k},0]", central_binomial(k), m.entry(k, 0))
        if size > 1:
            report.expect_equal(f"M[1,{k}]", 2 * catalan(k), m.entry(1, k))
        for l in range(k):
            report.expect_equal(f"M[{k},{l}] = M[{l},{k}]", m.entry(l, k), m.entry(k, l))
    return report.finish()


def integrality_check(max_index: int) -> CheckReport:
    """super_catalan divides exactly for all k, l <= max_index."""
    report = CheckReport("integrality_check", anchor="super Catalan numbers are integers")
    for k in range(max_index + 1):
        for l in range(max_index + 1):
            report.tick()
            try:
                super_catalan(k, l)
            except NonIntegerCoefficient as exc:
                report.fail(str(exc))
    return report.finish()


def partition_of_unity_check(max_m: int) -> CheckReport:
    """sum_{k+l=m} binom(m,l) 2^-2m M_kl = 1, the expansion of (cos^2 + sin^2)^m."""
    report = CheckReport("partition_of_unity_check", anchor="(cos^2 + sin^2)^m integrates to 1")
    for m in range(max_m + 1):
        total = sum(
            (Fraction(binomial(m, l) * super_catalan(m - l, l), 2 ** (2 * m)) for l in range(m + 1)),
            Fraction(0),
        )
        report.expect_equal(f"m={m}", Fraction(1), total)
    return report.finish()


def integral_recurrence_check(max_n: int, max_m: int) -> CheckReport:
    """(m+1) I(n,m) = (n-1) I(n-2,m+2) for 2 <= n <= max_n, 0 <= m <= max_m."""
    report = CheckReport("integral_recurrence_check", anchor="(m+1) I_{n,m} = (n-1) I_{n-2,m+2}")
    for n in range(2, max_n + 1):
        for m in range(max_m + 1):
            report.expect_equal(
                f"I({n},{m})",
                (n - 1) * trig_integral(n - 2, m + 2).value,
                (m + 1) * trig_integral(n, m).value,
            )
    return report.finish()


def trig_integral_symmetry(max_n: int) -> CheckReport:
    """I(n,m) = (-1)^n I(m,n) and I(n,1) = 0."""
    report = CheckReport("trig_integral_symmetry", anchor="I_{n,m} = (-1)^n I_{m,n}, I_{n,1} = 0")
    for n in range(max_n + 1):
        report.expect_equal(f"I({n},1)", Fraction(0), trig_integral(n, 1).value)
        for m in range(max_n + 1):
            report.expect_equal(f"I({n},{m})", (-1) ** n * trig_integral(m, n).value, trig_integral(n, m).value)
    return report.finish()


def suite_checks(order: int) -> List[Tuple[str, Callable[[], CheckReport]]]:
    """Named checks making up the fourier suite."""
    size = min(order, 40)
    small = min(order, 30)
    return [
        ("lu_factorization_check", lambda: lu_factorization_check(size)),
        ("m_matrix_derivation_check", lambda: m_matrix_derivation_check(min(order, 20))),
        ("matrix_shape_check", lambda: matrix_shape_check(size)),
        ("integrality_check", lambda: integrality_check(min(order, 60))),
        ("partition_of_unity_check", lambda: partition_of_unity_check(min(order, 60))),
        ("integral_recurrence_check", lambda: integral_recurrence_check(small, small)),
        ("trig_integral_symmetry", lambda: trig_integral_symmetry(small)),
        ("weirdhyp_check", lambda: weirdhyp_range_check(order)),
    ]


def weirdhyp_range_check(max_m: int) -> CheckReport:
    """weirdhyp_check for every m = 0..max_m, merged into one report."""
    if max_m < 0:
        raise ValueError(f"max_m must be >= 0, got {max_m}")
    report = CheckReport("weirdhyp_check", anchor=f"2^2m/binom(2m,m) identity for m <= {max_m}")
    for m in range(max_m + 1):
        try:
            report.merge(weirdhyp_check(m))
        except CheckFailed as exc:
            report.merge(exc.report)
    return report.finish()
