"""Spread and zpread polynomials.

S_n(sin^2 t) = sin^2(nt) and Z_n(x) = 4 S_n(x/4), so that
Z_n(4 sin^2 t) = 4 sin^2(nt). Z has integer coefficients and small
matrix entries; it is the family the factor battery works with.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, List, Tuple

from .basechange import BasisElement, TrigBasis, laurent_expand
from .chebyshev import chebyshev_t, chebyshev_u, p_poly, v_poly
from .combinatorics import binomial, pyramidal, pyramidal_array
from .errors import CheckFailed
from .polynomial import IntPoly
from .report import CheckReport
from .riordan import NamedArray, RiordanArray, named_array, riordan_matrix, series_b, series_c
from .series import PolySeries, TruncSeries
from ..utils.cache import RecurrenceCache
from ..utils.matrix import first_mismatch, identity, mat_mul, transpose

logger = logging.getLogger(__name__)

_X = IntPoly.x()
_TWO_X = IntPoly((0, 2))
_S_STEP = IntPoly((2, -4))
_Z_STEP = IntPoly((2, -1))


def _spread_step(n: int, known: List[IntPoly]) -> IntPoly:
    return _S_STEP * known[n - 1] - known[n - 2] + _TWO_X


def _zpread_step(n: int, known: List[IntPoly]) -> IntPoly:
    return _Z_STEP * known[n - 1] - known[n - 2] + _TWO_X


_S_CACHE: RecurrenceCache[IntPoly] = RecurrenceCache("spread-S", [IntPoly.zero(), _X], _spread_step)
_Z_CACHE: RecurrenceCache[IntPoly] = RecurrenceCache("zpread-Z", [IntPoly.zero(), _X], _zpread_step)


class SpreadKind(Enum):
    S = "S"
    Z = "Z"


def spread_poly(n: int) -> IntPoly:
    """S_n from S_n = 2(1-2x) S_{n-1} - S_{n-2} + 2x, S_0 = 0, S_1 = x."""
    if n < 0:
        raise ValueError(f"spread index must be >= 0, got {n}")
    return _S_CACHE.get(n)


def zpread_poly(n: int) -> IntPoly:
    """Z_n from Z_n = (2-x) Z_{n-1} - Z_{n-2} + 2x, Z_0 = 0, Z_1 = x."""
    if n < 0:
        raise ValueError(f"zpread index must be >= 0, got {n}")
    return _Z_CACHE.get(n)


def zpread_from_spread(n: int) -> IntPoly:
    """4 S_n(x/4), converted to integer coefficients.

    Raises:
        NonIntegerCoefficient: if a coefficient is fractional
    """
    return (spread_poly(n).scale_variable(Fraction(1, 4)) * 4).to_int()


def zpread_values(x0: Any, count: int) -> List[Any]:
    """[Z_0(x0), ..., Z_{count-1}(x0)] by the value recursion.

    ``x0`` may live in any commutative ring supporting +, - and * with
    integers: int, Fraction, QuadInt, LaurentPoly, IntPoly.
    """
    if count <= 0:
        return []
    values = [x0 * 0, x0]
    two_minus = -x0 + 2
    twice = x0 + x0
    while len(values) < count:
        values.append(two_minus * values[-1] - values[-2] + twice)
    return values[:count]


@dataclass
class SpreadFamily:
    """First ``count`` polynomials of S or Z."""

    kind: SpreadKind
    polys: List[IntPoly] = field(default_factory=list)

    @classmethod
    def build(cls, kind: SpreadKind | str, count: int) -> "SpreadFamily":
        kind = SpreadKind(kind)
        fn = spread_poly if kind is SpreadKind.S else zpread_poly
        return cls(kind, [fn(n) for n in range(count)])

    def matrix(self, size: int) -> List[List[int]]:
        """Entries (m, n) = [x^m] of the n-th polynomial for 1 <= m, n <= size, stored 0-based."""
        return [[self.polys[n].coeff(m) for n in range(1, size + 1)] for m in range(1, size + 1)]


def spread_matrix(size: int) -> List[List[int]]:
    """The spread matrix S, rows and columns indexed from 1."""
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    return SpreadFamily.build(SpreadKind.S, size + 1).matrix(size)


def zpread_matrix(size: int) -> List[List[int]]:
    """The zpread matrix Z, rows and columns indexed from 1."""
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    return SpreadFamily.build(SpreadKind.Z, size + 1).matrix(size)


def mnemonic_spread_matrix(size: int, row_sign: int = -4) -> List[List[int]]:
    """Spread matrix read off the staggered pyramidal array.

    Every second row of the array (p^[2], p^[4], ...) is arranged into a
    triangle and row m is multiplied by row_sign^(m-1). row_sign = -4
    gives S, row_sign = -1 gives Z.
    """
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    width = 2 * size - 1
    grid = pyramidal_array(width, width)
    rows = []
    for m in range(1, size + 1):
        r = 2 * (m - 1)
        row = [0] * size
        for n in range(m, size + 1):
            row[n - 1] = row_sign ** (m - 1) * grid[r][r + 2 * (n - m)]
        rows.append(row)
    logger.debug(f"mnemonic spread matrix of size {size} built with row sign {row_sign}")
    return rows


def shuffle_matrix(size: int) -> List[List[int]]:
    """Entries (k, n) = (-1)^(k-1) binom(2n, n-k), indexed from 1.

    Column n expresses sh^n = (4 sin^2 t)^n over sh(kt) = 4 sin^2(kt).
    """
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    return [
        [(-1) ** (k - 1) * binomial(2 * n, n - k) if n >= k else 0 for n in range(1, size + 1)]
        for k in range(1, size + 1)
    ]


# Verifications

def _expect_matrix(report: CheckReport, label: str, expected, got) -> None:
    report.tick()
    miss = first_mismatch(expected, got)
    if miss is not None:
        i, j, want, have = miss
        report.fail(f"{label} entry ({i + 1},{j + 1})", want, have)


def _expect_poly_series(report: CheckReport, label: str, expected: PolySeries, got: PolySeries) -> None:
    report.tick()
    n = expected.first_difference(got)
    if n is not None:
        report.fail(f"{label} at t^{n}", str(expected[n]), str(got[n]))


def zpread_matrix_check(size: int) -> CheckReport:
    """Z_mn = (-1)^(m+1) p^[2m]_(n-m) and Z^T = ((1+x)/(1-x)^3, -x/(1-x)^2)."""
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    report = CheckReport("zpread_matrix_check", anchor="Z_mn = (-1)^(m+1) p^[2m]_(n-m)")
    z = zpread_matrix(size)
    for m in range(1, size + 1):
        for n in range(m, size + 1):
            report.expect_equal(f"Z[{m},{n}]", (-1) ** (m + 1) * pyramidal(2 * m, n - m), z[m - 1][n - 1])
    array = named_array(NamedArray.ZPREAD_T, size - 1)
    _expect_matrix(report, "Z^T", z, transpose(riordan_matrix(array, size)))
    return report.finish()


def rescaling_check(max_n: int) -> CheckReport:
    """Z_n = 4 S_n(x/4) with integer coefficients."""
    report = CheckReport("rescaling_check", anchor="Z_n(x) = 4 S_n(x/4)")
    for n in range(max_n + 1):
        report.expect_equal(f"Z_{n}", zpread_from_spread(n), zpread_poly(n))
    return report.finish()


def proposition_check(max_n: int) -> CheckReport:
    """S_n(x) = (1 - T_n(1-2x))/2."""
    report = CheckReport("proposition_check", anchor="S_n(x) = (1 - T_n(1-2x))/2")
    one_minus_2x = IntPoly((1, -2))
    for n in range(max_n + 1):
        closed = (1 - chebyshev_t(n).compose(one_minus_2x)).to_rat() * Fraction(1, 2)
        report.expect_equal(f"S_{n}", closed, spread_poly(n))
    return report.finish()


def hirschhorn_gf_check(order: int) -> CheckReport:
    """(1-t)(1-2t+t^2+4tx) sum S_n(x) t^n = tx(1+t), to the given order in t."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    report = CheckReport("hirschhorn_gf_check", anchor="sum S_n t^n = tx(1+t)/((1-t)(1-2t+t^2+4tx))")
    family = PolySeries([spread_poly(n) for n in range(order + 1)], order)
    denominator = PolySeries([1, -1], order) * PolySeries([1, IntPoly((-2, 4)), 1], order)
    _expect_poly_series(report, "generating function", PolySeries([0, _X, _X], order), denominator * family)
    return report.finish()


def sqsin_reduction_check(n: int) -> CheckReport:
    """2^(2n-2) s^n = sum_k (-1)^(k-1) binom(2n, n-k) S_k(s) with s = sin^2 t."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    report = CheckReport("sqsin_reduction_check", anchor="2^(2n-2) sin^2n t = sum (-1)^(k-1) binom(2n,n-k) sin^2 kt")
    rhs = IntPoly.zero()
    for k in range(1, n + 1):
        rhs = rhs + spread_poly(k) * ((-1) ** (k - 1) * binomial(2 * n, n - k))
    report.expect_equal(f"n={n}", IntPoly.monomial(n, 2 ** (2 * n - 2)), rhs)
    return report.finish()


def shuffle_inverse_check(size: int) -> CheckReport:
    """The signed binomial matrix and Z are mutually inverse."""
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    report = CheckReport("shuffle_inverse_check", anchor="sh^n = sum (-1)^(k-1) binom(2n,n-k) sh(kt) inverts Z")
    a, z = shuffle_matrix(size), zpread_matrix(size)
    unit = identity(size)
    _expect_matrix(report, "shuffle * Z", unit, mat_mul(a, z))
    _expect_matrix(report, "Z * shuffle", unit, mat_mul(z, a))
    return report.finish()


def shuffle_laurent_check(max_n: int) -> CheckReport:
    """Z_n(sh(t)) = sh(nt) and the shuffle-matrix columns, as Laurent identities."""
    report = CheckReport("shuffle_laurent_check", anchor="Z_n(4 sin^2 t) = 4 sin^2 nt")
    sh = laurent_expand(BasisElement(TrigBasis.SHUFFLE_POWER, 1))
    for n, value in enumerate(zpread_values(sh, max_n + 1)):
        report.expect_equal(f"Z_{n}(sh)", laurent_expand(BasisElement(TrigBasis.SHUFFLE_MULTIPLE, n)), value)
    a = shuffle_matrix(max_n) if max_n >= 1 else []
    for n in range(1, max_n + 1):
        combination = sum(
            (laurent_expand(BasisElement(TrigBasis.SHUFFLE_MULTIPLE, k)) * a[k - 1][n - 1] for k in range(1, n + 1)),
            laurent_expand(BasisElement(TrigBasis.SHUFFLE_MULTIPLE, 0)),
        )
        report.expect_equal(f"sh^{n}", laurent_expand(BasisElement(TrigBasis.SHUFFLE_POWER, n)), combination)
    return report.finish()


def spreadometric_check(order: int) -> CheckReport:
    """(1+x)/(1-x) s/((1-x)^2 + 4xs) = sum S_{n+1}(s) x^n over Z[s].

    At s = 1 the series is 1/(1-x^2).
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    report = CheckReport("spreadometric_check", anchor="sum sin^2((n+1)t) x^n = (1+x)/(1-x) sin^2 t/((1-x)^2+4x sin^2 t)")
    s = IntPoly.x()
    series = PolySeries([spread_poly(n + 1) for n in range(order + 1)], order)
    denominator = PolySeries([1, -1], order) * PolySeries([1, IntPoly((-2, 4)), 1], order)
    _expect_poly_series(report, "spreadometric series", PolySeries([s, s], order), denominator * series)

    at_one = TruncSeries.from_function(lambda n: spread_poly(n + 1).evaluate(1), order)
    expected = TruncSeries.from_function(lambda n: 1 if n % 2 == 0 else 0, order)
    report.tick()
    n = expected.first_difference(at_one)
    if n is not None:
        report.fail(f"s=1 specialization at x^{n}", expected[n], at_one[n])
    return report.finish()


def cigler_check(n: int) -> CheckReport:
    """S_2n(x^2) = (1-x^2) U_{2n-1}(x)^2 and S_{2n+1}(x^2) = T_{2n+1}(x)^2, plus the zpread forms.

    Z_2n(x^2) = (4-x^2) V_{2n-1}(x)^2 and Z_{2n+1}(x^2) = P_{2n+1}(x)^2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    report = CheckReport("cigler_check", anchor="S_2n(x^2) = (1-x^2) U_(2n-1)(x)^2, S_(2n+1)(x^2) = T_(2n+1)(x)^2")
    x2 = IntPoly((0, 0, 1))
    report.expect_equal(f"n={n} even S", IntPoly((1, 0, -1)) * chebyshev_u(2 * n - 1) ** 2,
                        spread_poly(2 * n).compose(x2))
    report.expect_equal(f"n={n} odd S", chebyshev_t(2 * n + 1) ** 2, spread_poly(2 * n + 1).compose(x2))
    report.expect_equal(f"n={n} even Z", IntPoly((4, 0, -1)) * v_poly(2 * n - 1) ** 2,
                        zpread_poly(2 * n).compose(x2))
    report.expect_equal(f"n={n} odd Z", p_poly(2 * n + 1) ** 2, zpread_poly(2 * n + 1).compose(x2))
    return report.finish()


def spread_riordan_check(size: int) -> CheckReport:
    """S^T = ((1+x)/(1-x)^3, -4x/(1-x)^2) = Z^T * (1, 4x).

    The inverse is (1, x/4)^-1 applied to (BC^2, -xC^2), i.e. both series
    of (BC^2, -xC^2) evaluated at x/4. Also checks Z^T * (BC^2, -xC^2) = (1, x).
    """
    if size < 2:
        raise ValueError(f"matrix size must be >= 2, got {size}")
    report = CheckReport("spread_riordan_check", anchor="S^T = ((1+x)/(1-x)^3, -4x/(1-x)^2)")
    order = size - 1
    spread_t = named_array(NamedArray.SPREAD_T, order)
    _expect_matrix(report, "S^T", spread_matrix(size), transpose(riordan_matrix(spread_t, size)))

    c = series_c(order)
    bc2 = series_b(order) * c * c
    x_c2 = (c * c).shift(1)
    quarter = TruncSeries((0, Fraction(1, 4)), order)
    unit = RiordanArray.identity(order)
    for label, array, inverse in (
        ("S^T", spread_t, RiordanArray(bc2.compose(quarter), -x_c2.compose(quarter))),
        ("Z^T", named_array(NamedArray.ZPREAD_T, order), RiordanArray(bc2, -x_c2)),
    ):
        product = array * inverse
        for part, want, got in (("g", unit.g, product.g), ("f", unit.f, product.f)):
            report.tick()
            k = want.first_difference(got)
            if k is not None:
                report.fail(f"{label} * inverse {part} at x^{k}", want[k], got[k])
    return report.finish()


def mnemonic_spread_check(size: int) -> CheckReport:
    """The pyramidal-array construction reproduces S and Z."""
    report = CheckReport("mnemonic_spread_check", anchor="every second row of the pyramidal array times (-4)^(m-1)")
    _expect_matrix(report, "S", spread_matrix(size), mnemonic_spread_matrix(size))
    _expect_matrix(report, "Z", zpread_matrix(size), mnemonic_spread_matrix(size, row_sign=-1))
    return report.finish()


def composition_check(max_index: int) -> CheckReport:
    """Z_m o Z_n = Z_mn."""
    report = CheckReport("composition_check", anchor="Z_m(Z_n(x)) = Z_mn(x)")
    for m in range(max_index + 1):
        for n in range(max_index + 1):
            report.expect_equal(f"Z_{m} o Z_{n}", zpread_poly(m * n), zpread_poly(m).compose(zpread_poly(n)))
    return report.finish()


def fixed_ends_check(max_n: int) -> CheckReport:
    """Z_n(0) = 0, Z_n(4) = 4 for odd n and 0 for even n, deg Z_n = n, lead Z_n = (-1)^(n+1)."""
    report = CheckReport("fixed_ends_check", anchor="Z_n(4) = 4 sin^2(n pi/2)")
    for n in range(max_n + 1):
        z = zpread_poly(n)
        report.expect_equal(f"Z_{n}(0)", 0, z.evaluate(0))
        report.expect_equal(f"Z_{n}(4)", 4 if n % 2 else 0, z.evaluate(4))
        if n >= 1:
            report.expect_equal(f"deg Z_{n}", n, z.degree)
            report.expect_equal(f"lead Z_{n}", (-1) ** (n + 1), z.lead())
    return report.finish()


def _per_n(name: str, check: Callable[[int], CheckReport], start: int, stop: int) -> CheckReport:
    report = CheckReport(name, anchor=f"{name} for n = {start}..{stop}")
    for n in range(start, stop + 1):
        try:
            report.merge(check(n))
        except CheckFailed as exc:
            report.merge(exc.report)
    return report.finish()


def suite_checks(order: int) -> List[Tuple[str, Callable[[], CheckReport]]]:
    """Named checks making up the spread suite."""
    size = max(min(order, 30), 2)
    return [
        ("zpread_matrix_check", lambda: zpread_matrix_check(size)),
        ("rescaling_check", lambda: rescaling_check(min(order, 100))),
        ("proposition_check", lambda: proposition_check(min(order, 200))),
        ("hirschhorn_gf_check", lambda: hirschhorn_gf_check(min(order, 60))),
        ("sqsin_reduction_check", lambda: _per_n("sqsin_reduction_check", sqsin_reduction_check, 1, min(order, 40))),
        ("shuffle_inverse_check", lambda: shuffle_inverse_check(size)),
        ("shuffle_laurent_check", lambda: shuffle_laurent_check(min(order, 20))),
        ("spreadometric_check", lambda: spreadometric_check(min(order, 15))),
        ("cigler_check", lambda: _per_n("cigler_check", cigler_check, 1, min(order, 50))),
        ("spread_riordan_check", lambda: spread_riordan_check(size)),
        ("mnemonic_spread_check", lambda: mnemonic_spread_check(size)),
        ("composition_check", lambda: composition_check(min(order, 12))),
        ("fixed_ends_check", lambda: fixed_ends_check(min(order, 100))),
    ]
