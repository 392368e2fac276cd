"""The Riordan group over truncated rational series.

A Riordan array is stored as its pair (g, f); the lower-triangular matrix
with entries [x^n] g f^k is a derived view.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .combinatorics import (
    binomial,
    catalan_series,
    catalan_triangle_even_matrix,
    catalan_triangle_odd_matrix,
    central_binomial_series,
)
from .errors import NotInvertible, NotProper, OrderMismatch
from .report import CheckReport
from .series import TruncSeries, series_compose, series_mul_inverse
from ..utils.matrix import first_mismatch

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class RiordanArray:
    """Pair (g, f) with f(0) = 0; both series share one order."""

    g: TruncSeries
    f: TruncSeries

    def __post_init__(self):
        if self.g.order != self.f.order:
            raise OrderMismatch(f"g has order {self.g.order}, f has order {self.f.order}")
        if self.f.constant_term() != 0:
            raise NotInvertible("f must vanish at 0")

    @classmethod
    def identity(cls, order: int) -> "RiordanArray":
        return cls(TruncSeries.one(order), TruncSeries.x(order))

    @property
    def order(self) -> int:
        return self.g.order

    def is_proper(self) -> bool:
        return self.g.constant_term() != 0

    def __mul__(self, other: "RiordanArray") -> "RiordanArray":
        return riordan_mul(self, other)

    def inverse(self) -> "RiordanArray":
        return riordan_inverse(self)

    def apply(self, h: TruncSeries) -> TruncSeries:
        return riordan_apply(self, h)

    def matrix(self, size: int) -> List[List[Fraction]]:
        return riordan_matrix(self, size)


@dataclass(frozen=True)
class NamedSeries:
    """A series known by name, e.g. C, B or BC^2."""

    tag: str
    series: TruncSeries


def lagrange_invert(f: TruncSeries) -> TruncSeries:
    """Compositional inverse of f by Lagrange inversion.

    With f = x / phi, the n-th coefficient of the inverse is
    (1/n) [x^(n-1)] phi^n.

    Raises:
        NotInvertible: if f(0) != 0 or f'(0) == 0
    """
    if f.constant_term() != 0 or f.order < 1 or f[1] == 0:
        raise NotInvertible("Lagrange inversion needs f(0) = 0 and f'(0) != 0")
    n_max = f.order
    phi = series_mul_inverse(f.divide_by_x())
    coeffs = [Fraction(0)] * (n_max + 1)
    power = phi
    for n in range(1, n_max + 1):
        coeffs[n] = power[n - 1] / n
        power = power * phi
    return TruncSeries(coeffs, n_max)


def reversion_by_iteration(f: TruncSeries) -> TruncSeries:
    """Compositional inverse by the fixed-point iteration g <- g - (f(g) - x)/f'(0).

    Each pass fixes one more coefficient, so order + 1 passes suffice.
    """
    if f.constant_term() != 0 or f.order < 1 or f[1] == 0:
        raise NotInvertible("reversion needs f(0) = 0 and f'(0) != 0")
    x = TruncSeries.x(f.order)
    lead = f[1]
    g = x / lead
    for _ in range(f.order + 1):
        g = g - (series_compose(f, g) - x) / lead
    return g


def riordan_mul(a: RiordanArray, b: RiordanArray) -> RiordanArray:
    """(g1, f1) * (g2, f2) = (g1 (g2 o f1), f2 o f1)."""
    if a.order != b.order:
        raise OrderMismatch(f"orders {a.order} and {b.order} differ")
    if a.order < 1 or a.f[1] == 0:
        raise NotInvertible("left factor needs f'(0) != 0")
    return RiordanArray(a.g * series_compose(b.g, a.f), series_compose(b.f, a.f))


def riordan_inverse(a: RiordanArray) -> RiordanArray:
    """(g, f)^-1 = (1/(g o fbar), fbar).

    Raises:
        NotProper: if g(0) == 0
    """
    if not a.is_proper():
        raise NotProper("g(0) = 0: the array is not invertible")
    fbar = lagrange_invert(a.f)
    return RiordanArray(series_mul_inverse(series_compose(a.g, fbar)), fbar)


def riordan_apply(a: RiordanArray, h: TruncSeries) -> TruncSeries:
    """Fundamental theorem: (g, f) applied to h is g (h o f)."""
    if h.order != a.order:
        raise OrderMismatch(f"array order {a.order}, series order {h.order}")
    return a.g * series_compose(h, a.f)


def riordan_matrix(a: RiordanArray, size: int) -> List[List[Fraction]]:
    """Rows n = 0..size-1 of the matrix [x^n] g f^k."""
    if size - 1 > a.order:
        raise OrderMismatch(f"matrix of size {size} needs order >= {size - 1}, have {a.order}")
    columns = []
    column = a.g
    for _ in range(size):
        columns.append(column.coeffs[:size])
        column = column * a.f
    return [[columns[k][n] for k in range(size)] for n in range(size)]


# Named series and arrays

def series_c(order: int) -> TruncSeries:
    return catalan_series(order)


def series_b(order: int) -> TruncSeries:
    return central_binomial_series(order)


def named_series(order: int) -> Dict[str, NamedSeries]:
    """C, B, BC, BC^2 and C^2 at the given order."""
    c, b = series_c(order), series_b(order)
    values = {"C": c, "B": b, "BC": b * c, "BC^2": b * c * c, "C^2": c * c}
    return {tag: NamedSeries(tag, s) for tag, s in values.items()}


def _one_plus_x(order: int, sign: int = 1) -> TruncSeries:
    return TruncSeries((1, sign), order)


def _x_c2(order: int) -> TruncSeries:
    c = series_c(order)
    return (c * c).shift(1)


class NamedArray(Enum):
    """Riordan arrays that appear in the base changes."""
    CATALAN_ODD = "catalan_odd"
    CATALAN_EVEN = "catalan_even"
    CENTRAL = "central"
    CENTRAL_ODD = "central_odd"
    PYRAMIDAL_EVEN = "pyramidal_even"
    PYRAMIDAL_ODD = "pyramidal_odd"
    ZPREAD_T = "zpread_t"
    SPREAD_T = "spread_t"


def named_array(name: NamedArray | str, order: int = DEFAULT_ORDER) -> RiordanArray:
    """Build one of the named arrays.

    catalan_odd (C, xC^2), catalan_even (C^2, xC^2), central (B, xC^2),
    central_odd (BC, xC^2), pyramidal_even ((1-x)/(1+x), x/(1+x)^2),
    pyramidal_odd ((1-x)/(1+x)^2, x/(1+x)^2), zpread_t
    ((1+x)/(1-x)^3, -x/(1-x)^2) and spread_t ((1+x)/(1-x)^3, -4x/(1-x)^2).
    """
    name = NamedArray(name)
    c, b = series_c(order), series_b(order)
    xc2 = _x_c2(order)
    plus, minus = _one_plus_x(order, 1), _one_plus_x(order, -1)
    x = TruncSeries.x(order)
    x_over_plus2 = x / (plus * plus)

    if name is NamedArray.CATALAN_ODD:
        return RiordanArray(c, xc2)
    if name is NamedArray.CATALAN_EVEN:
        return RiordanArray(c * c, xc2)
    if name is NamedArray.CENTRAL:
        return RiordanArray(b, xc2)
    if name is NamedArray.CENTRAL_ODD:
        return RiordanArray(b * c, xc2)
    if name is NamedArray.PYRAMIDAL_EVEN:
        return RiordanArray(minus / plus, x_over_plus2)
    if name is NamedArray.PYRAMIDAL_ODD:
        return RiordanArray(minus / (plus * plus), x_over_plus2)
    zpread_g = plus / minus.power(3)
    if name is NamedArray.ZPREAD_T:
        return RiordanArray(zpread_g, -x / (minus * minus))
    return RiordanArray(zpread_g, x * -4 / (minus * minus))


def inversion_pairs(order: int) -> List[Tuple[str, RiordanArray, RiordanArray]]:
    """The four arrays of the inversion theorem with their claimed inverses."""
    plus, minus = _one_plus_x(order, 1), _one_plus_x(order, -1)
    x = TruncSeries.x(order)
    f_inv = x / (plus * plus)
    return [
        ("(C, xC^2)", named_array(NamedArray.CATALAN_ODD, order), RiordanArray(1 / plus, f_inv)),
        ("(C^2, xC^2)", named_array(NamedArray.CATALAN_EVEN, order),
         RiordanArray(1 / (plus * plus), f_inv)),
        ("(B, xC^2)", named_array(NamedArray.CENTRAL, order), RiordanArray(minus / plus, f_inv)),
        ("(BC, xC^2)", named_array(NamedArray.CENTRAL_ODD, order),
         RiordanArray(minus / (plus * plus), f_inv)),
    ]


# Verifications

def _expect_series(report: CheckReport, label: str, expected: TruncSeries, got: TruncSeries) -> None:
    report.tick()
    n = expected.first_difference(got)
    if n is not None:
        report.fail(f"{label} at x^{n}", expected[n], got[n])


def _expect_array(report: CheckReport, label: str, expected: RiordanArray, got: RiordanArray) -> None:
    _expect_series(report, f"{label} g", expected.g, got.g)
    _expect_series(report, f"{label} f", expected.f, got.f)


def inversion_theorem_check(order: int) -> CheckReport:
    """The four inverses, both by the group law and by riordan_inverse."""
    report = CheckReport(
        "inversion_theorem_check",
        anchor="(C,xC^2)^-1 = (1/(1+x), x/(1+x)^2) and the three companion inversions",
    )
    identity = RiordanArray.identity(order)
    for label, array, claimed in inversion_pairs(order):
        _expect_array(report, f"{label} * claimed inverse", identity, array * claimed)
        _expect_array(report, f"{label}^-1", claimed, riordan_inverse(array))

    x = TruncSeries.x(order)
    plus = _one_plus_x(order)
    f_inv = x / (plus * plus)
    _expect_series(report, "C o (x/(1+x)^2)", plus, series_compose(series_c(order), f_inv))
    _expect_series(report, "inverse of x/(1+x)^2", _x_c2(order), lagrange_invert(f_inv))
    return report.finish()


def product_lemma_check(order: int) -> CheckReport:
    """(g1 g2, f)^-1 = (G1 G2, F) whenever (g_i, f)^-1 = (G_i, F).

    Runs over every unordered pair of the inversion pairs, squares included.
    """
    report = CheckReport("product_lemma_check", anchor="inverse of (g1 g2, f) is (G1 G2, F)")
    pairs = inversion_pairs(order)
    for i, (left, a1, inv1) in enumerate(pairs):
        for right, a2, inv2 in pairs[i:]:
            product = RiordanArray(a1.g * a2.g, a1.f)
            claimed = RiordanArray(inv1.g * inv2.g, inv1.f)
            _expect_array(report, f"{left}x{right}", claimed, riordan_inverse(product))
    return report.finish()


def binomial_series_identity(n: int, m: int, order: int) -> CheckReport:
    """sum_j binom(2j+n, j-m) x^j = B C^n (C-1)^m to the given order."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    report = CheckReport(
        "binomial_series_identity",
        anchor=f"sum binom(2j+{n}, j-{m}) x^j = B C^{n} (C-1)^{m}",
    )
    lhs = TruncSeries.from_function(
        lambda j: binomial(2 * j + n, j - m) if j >= m else 0, order
    )
    c = series_c(order)
    rhs = series_b(order) * c.power(n) * (c - 1).power(m)
    _expect_series(report, f"n={n}, m={m}", lhs, rhs)
    return report.finish()


def corollary_check(size: int) -> CheckReport:
    """(B, xC^2) = [binom(2n, n-m)] and (BC, xC^2) = [binom(2n+1, n-m)]."""
    report = CheckReport("corollary_check", anchor="(B,xC^2) = [binom(2n,n-m)]")
    order = size - 1
    for name, top in ((NamedArray.CENTRAL, 0), (NamedArray.CENTRAL_ODD, 1)):
        got = riordan_matrix(named_array(name, order), size)
        expected = [
            [binomial(2 * r + top, r - k) if r >= k else 0 for k in range(size)]
            for r in range(size)
        ]
        _expect_matrix(report, name.value, expected, got)
    return report.finish()


def _expect_matrix(report: CheckReport, label: str, expected, got) -> None:
    report.tick()
    miss = first_mismatch(expected, got)
    if miss is not None:
        i, j, want, have = miss
        report.fail(f"{label} entry ({i},{j})", want, have)


def catalan_triangle_view_check(size: int) -> CheckReport:
    """Matrix views of (C, xC^2) and (C^2, xC^2) are the odd and even Catalan triangles."""
    report = CheckReport("catalan_triangle_view_check", anchor="B^odd = (C,xC^2), B^even = (C^2,xC^2)")
    order = size - 1
    _expect_matrix(report, "B^odd", catalan_triangle_odd_matrix(size),
                   riordan_matrix(named_array(NamedArray.CATALAN_ODD, order), size))
    _expect_matrix(report, "B^even", catalan_triangle_even_matrix(size),
                   riordan_matrix(named_array(NamedArray.CATALAN_EVEN, order), size))
    return report.finish()


def bc2_derivative_check(order: int) -> CheckReport:
    """B C^2 = C'."""
    report = CheckReport("bc2_derivative_check", anchor="BC^2 = C'")
    c = series_c(order + 1)
    bc2 = (series_b(order + 1) * c * c).truncate(order)
    _expect_series(report, "BC^2", c.derivative(), bc2)
    return report.finish()


def lagrange_oracle_check(order: int) -> CheckReport:
    """Lagrange inversion agrees with iterative reversion on sample series."""
    report = CheckReport("lagrange_oracle_check", anchor="Lagrange inversion formula")
    x = TruncSeries.x(order)
    plus = _one_plus_x(order)
    samples = {
        "x - x^2": TruncSeries((0, 1, -1), order),
        "x/(1+x)^2": x / (plus * plus),
        "xC^2": _x_c2(order),
        "x(1+x)/(1-x)": x * plus / _one_plus_x(order, -1),
    }
    for label, f in samples.items():
        inverse = lagrange_invert(f)
        _expect_series(report, f"{label} vs iteration", reversion_by_iteration(f), inverse)
        _expect_series(report, f"{label} o inverse", x, series_compose(f, inverse))
    return report.finish()


def zpread_riordan_check(order: int) -> CheckReport:
    """((1+x)/(1-x)^3, -x/(1-x)^2) * (BC^2, -xC^2) = (1, x)."""
    report = CheckReport("zpread_riordan_check", anchor="(Z^T)^-1 = (BC^2, -xC^2)")
    c = series_c(order)
    claimed = RiordanArray(series_b(order) * c * c, -_x_c2(order))
    _expect_array(report, "Z^T * (BC^2, -xC^2)", RiordanArray.identity(order),
                  named_array(NamedArray.ZPREAD_T, order) * claimed)
    return report.finish()


def suite_checks(order: int) -> List[Tuple[str, Callable[[], CheckReport]]]:
    """Named checks making up the riordan suite at the given order."""
    size = min(order, 30) + 1
    checks: List[Tuple[str, Callable[[], CheckReport]]] = [
        ("inversion_theorem_check", lambda: inversion_theorem_check(order)),
        ("product_lemma_check", lambda: product_lemma_check(order)),
        ("corollary_check", lambda: corollary_check(size)),
        ("catalan_triangle_view_check", lambda: catalan_triangle_view_check(size)),
        ("bc2_derivative_check", lambda: bc2_derivative_check(order)),
        ("lagrange_oracle_check", lambda: lagrange_oracle_check(min(order, 24))),
        ("zpread_riordan_check", lambda: zpread_riordan_check(order)),
    ]
    for n in (-1, 0, 1, 2):
        for m in (0, 1, 2):
            checks.append((
                f"binomial_series_identity(n={n}, m={m})",
                lambda n=n, m=m: binomial_series_identity(n, m, min(order, 30)),
            ))
    return checks
