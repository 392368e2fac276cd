"""Chebyshev polynomials and their depowered variants.

T_n and U_n come from the three-term recursions and are memoized in a
thread-safe cache. P_n(z) = 2 T_n(z/2) and V_n(z) = U_n(z/2) carry the
same information with integer coefficients and no powers of two.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Tuple

from .combinatorics import binomial, pyramidal
from .errors import CheckFailed
from .laurent import Z, Z_INV, LaurentPoly
from .numbers import GaussianRational
from .polynomial import IntPoly
from .report import CheckReport
from .series import PolySeries
from ..utils.cache import RecurrenceCache

logger = logging.getLogger(__name__)

_X = IntPoly.x()
_TWO_X = IntPoly((0, 2))


def _three_term(n: int, known: List[IntPoly]) -> IntPoly:
    return _TWO_X * known[n - 1] - known[n - 2]


_T_CACHE: RecurrenceCache[IntPoly] = RecurrenceCache("chebyshev-T", [IntPoly.one(), _X], _three_term)
_U_CACHE: RecurrenceCache[IntPoly] = RecurrenceCache("chebyshev-U", [IntPoly.one(), _TWO_X], _three_term)


class ChebKind(Enum):
    """Polynomial family stored in a ChebMatrix."""
    T = "T"
    U = "U"
    P = "P"
    V = "V"


def chebyshev_t(n: int) -> IntPoly:
    """T_n from T_n = 2x T_{n-1} - T_{n-2}."""
    if n < 0:
        raise ValueError(f"Chebyshev index must be >= 0, got {n}")
    return _T_CACHE.get(n)


def chebyshev_u(n: int) -> IntPoly:
    """U_n from U_n = 2x U_{n-1} - U_{n-2}."""
    if n < 0:
        raise ValueError(f"Chebyshev index must be >= 0, got {n}")
    return _U_CACHE.get(n)


def p_poly(n: int) -> IntPoly:
    """P_0 = 1, P_n(z) = 2 T_n(z/2) for n > 0."""
    if n == 0:
        return IntPoly.one()
    return (chebyshev_t(n).scale_variable(Fraction(1, 2)) * 2).to_int()


def v_poly(n: int) -> IntPoly:
    """V_n(z) = U_n(z/2)."""
    return chebyshev_u(n).scale_variable(Fraction(1, 2)).to_int()


def family(kind: ChebKind | str) -> Callable[[int], IntPoly]:
    """Index -> polynomial function for a family letter."""
    kind = ChebKind(kind)
    return {
        ChebKind.T: chebyshev_t,
        ChebKind.U: chebyshev_u,
        ChebKind.P: p_poly,
        ChebKind.V: v_poly,
    }[kind]


def t_closed_form(n: int) -> IntPoly:
    """T_n from the pyramidal-number formulas.

    T_2k = (-1)^k + sum_{j=1..k} (-1)^(k+j) 2^(2j-1) p^[2j]_{k-j} x^2j
    T_2k+1 = sum_{j=0..k} (-1)^(k+j) 2^(2j) p^[2j+1]_{k-j} x^(2j+1)
    """
    if n < 0:
        raise ValueError(f"Chebyshev index must be >= 0, got {n}")
    k, odd = divmod(n, 2)
    coeffs = [0] * (n + 1)
    if odd:
        for j in range(k + 1):
            coeffs[2 * j + 1] = (-1) ** (k + j) * 2 ** (2 * j) * pyramidal(2 * j + 1, k - j)
    else:
        coeffs[0] = (-1) ** k
        for j in range(1, k + 1):
            coeffs[2 * j] = (-1) ** (k + j) * 2 ** (2 * j - 1) * pyramidal(2 * j, k - j)
    return IntPoly(coeffs)


def u_closed_form(n: int) -> IntPoly:
    """U_n from the binomial formulas."""
    if n < 0:
        raise ValueError(f"Chebyshev index must be >= 0, got {n}")
    k, odd = divmod(n, 2)
    coeffs = [0] * (n + 1)
    for j in range(k + 1):
        if odd:
            coeffs[2 * j + 1] = (-1) ** (k + j) * 2 ** (2 * j + 1) * binomial(k + j + 1, 2 * j + 1)
        else:
            coeffs[2 * j] = (-1) ** (k + j) * 2 ** (2 * j) * binomial(k + j, 2 * j)
    return IntPoly(coeffs)


@dataclass
class ChebMatrix:
    """Coefficient matrix of a family: entry (m, n) is [x^m] of the n-th polynomial.

    Columns are stored; column n has length n + 1.
    """

    kind: ChebKind
    size: int
    columns: List[List[int]] = field(default_factory=list)

    def entry(self, m: int, n: int) -> int:
        col = self.columns[n]
        return col[m] if m < len(col) else 0

    def rows(self) -> List[List[int]]:
        return [[self.entry(m, n) for n in range(self.size)] for m in range(self.size)]


def chebyshev_matrix(kind: ChebKind | str, size: int) -> ChebMatrix:
    """Matrix of the first ``size`` polynomials of a family."""
    kind = ChebKind(kind)
    fn = family(kind)
    columns = []
    for n in range(size):
        coeffs = list(fn(n).coeffs)
        columns.append(coeffs + [0] * (n + 1 - len(coeffs)))
    return ChebMatrix(kind, size, columns)


def mnemonic_p_matrix(size: int) -> ChebMatrix:
    """Build P from the odd numbers by differences and running sums.

    Row 1 is the odd numbers, row 0 their difference pattern and each
    further row the running sums of the one above. Row m is placed on the
    diagonal starting at column m with every second cell left empty, and
    the signs alternate along the diagonals.
    """
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    width = size
    odd = [2 * j + 1 for j in range(width)]
    pattern = [[odd[0]] + [odd[j] - odd[j - 1] for j in range(1, width)], odd]
    while len(pattern) < size:
        running, total = [], 0
        for value in pattern[-1]:
            total += value
            running.append(total)
        pattern.append(running)

    columns = [[0] * (n + 1) for n in range(size)]
    for m in range(size):
        for j, value in enumerate(pattern[m]):
            n = m + 2 * j
            if n >= size:
                break
            columns[n][m] = (-1) ** j * value
    logger.debug(f"mnemonic P matrix built with size {size}")
    return ChebMatrix(ChebKind.P, size, columns)


# Brace numbers, stored doubled: {0;0} = 1/2.

def brace_doubled(n: int, k: int) -> int:
    """2 * {n;k} from {n;k} = 2{n-1;k} - {n;k-1}."""
    if n < 0 or k < 0:
        raise ValueError(f"brace numbers need n, k >= 0, got ({n}, {k})")
    prev = [1] + [2 * (-1) ** j for j in range(1, k + 1)]
    for i in range(1, n + 1):
        row = [2**i]
        for j in range(1, k + 1):
            row.append(2 * prev[j] - row[j - 1])
        prev = row
    return prev[k]


def brace(n: int, k: int) -> Fraction:
    """Exact brace number {n;k}; equals T_{n, n+2k} except {0;0} = T_00 / 2."""
    return Fraction(brace_doubled(n, k), 2)


# Verifications

def _laurent_diff(expected: LaurentPoly, got: LaurentPoly) -> str:
    for e in sorted(set(expected.exponents()) | set(got.exponents())):
        if expected.coeff(e) != got.coeff(e):
            return f"z^{e}: expected {expected.coeff(e)}, got {got.coeff(e)}"
    return ""


_HALF = Fraction(1, 2)
_COS = (Z + Z_INV) * _HALF
_I_SIN = (Z - Z_INV) * _HALF
_SIN = (Z - Z_INV) * GaussianRational(0, Fraction(-1, 2))


def _cos_multiple(k: int) -> LaurentPoly:
    return (LaurentPoly.monomial(k) + LaurentPoly.monomial(-k)) * _HALF


def _half_difference(k: int) -> LaurentPoly:
    return (LaurentPoly.monomial(k) - LaurentPoly.monomial(-k)) * _HALF


def _sin_multiple(k: int) -> LaurentPoly:
    return (LaurentPoly.monomial(k) - LaurentPoly.monomial(-k)) * GaussianRational(0, Fraction(-1, 2))


def verify_trig_values(n: int) -> CheckReport:
    """Check T_n and U_n at cos(theta) and sin(theta) as Laurent identities in z = e^{i theta}."""
    if n < 0:
        raise ValueError(f"Chebyshev index must be >= 0, got {n}")
    report = CheckReport(
        "verify_trig_values",
        anchor="T_n(cos t) = cos nt, sin t U_n(cos t) = sin (n+1)t, and the sin t variants",
    )
    t_n, u_n = chebyshev_t(n), chebyshev_u(n)
    sign = (-1) ** (n // 2)

    cases = [
        (f"T_{n}(cos)", _cos_multiple(n), t_n.evaluate(_COS)),
        (f"sin*U_{n}(cos)", _half_difference(n + 1),
         _I_SIN * u_n.evaluate(_COS)),
    ]
    if n % 2 == 0:
        cases.append((f"T_{n}(sin)", _cos_multiple(n) * sign, t_n.evaluate(_SIN)))
        cases.append((f"cos*U_{n}(sin)", _cos_multiple(n + 1) * sign, _COS * u_n.evaluate(_SIN)))
    else:
        cases.append((f"T_{n}(sin)", _sin_multiple(n) * sign, t_n.evaluate(_SIN)))
        cases.append((f"cos*U_{n}(sin)", _sin_multiple(n + 1) * sign, _COS * u_n.evaluate(_SIN)))

    for where, expected, got in cases:
        report.tick()
        if expected != got:
            report.fail(f"n={n} {where} {_laurent_diff(expected, got)}")
    return report.finish()


def _family_series(fn: Callable[[int], IntPoly], order: int) -> PolySeries:
    return PolySeries([fn(n) for n in range(order + 1)], order)


def _gf_compare(report: CheckReport, label: str, product: PolySeries, target: PolySeries) -> None:
    for k in range(product.order + 1):
        report.tick()
        if product[k] != target[k]:
            report.fail(f"{label} at t^{k}", str(target[k]), str(product[k]))
            return


def gf_check_chebyshev(order: int) -> CheckReport:
    """Check the generating functions of T, U and P to the given order in t."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    report = CheckReport(
        "gf_check_chebyshev",
        anchor="sum T_n t^n = (1-tx)/(1-2tx+t^2), sum U_n t^n = 1/(1-2tx+t^2), "
               "sum P_n t^n = (1-t^2)/(1-zt+t^2)",
    )
    denom = PolySeries([1, IntPoly((0, -2)), 1], order)
    p_denom = PolySeries([1, IntPoly((0, -1)), 1], order)

    _gf_compare(report, "T generating function", denom * _family_series(chebyshev_t, order),
                PolySeries([1, IntPoly((0, -1))], order))
    _gf_compare(report, "U generating function", denom * _family_series(chebyshev_u, order),
                PolySeries([1], order))
    _gf_compare(report, "P generating function", p_denom * _family_series(p_poly, order),
                PolySeries([1, 0, -1], order))
    return report.finish()


def p_gf_sign_cleansed_check(order: int) -> CheckReport:
    """Check that (1+t^2)/(1-zt-t^2) and 1/(1-zt-t^2) have coefficients p^[m]_l and binom(m+l, l) at z^m t^(m+2l)."""
    report = CheckReport(
        "p_gf_sign_cleansed_check",
        anchor="sum p^[m]_l z^m t^(m+2l) = (1+t^2)/(1-zt-t^2)",
    )

    def cleansed(entry: Callable[[int, int], int]) -> PolySeries:
        polys = []
        for n in range(order + 1):
            coeffs = [0] * (n + 1)
            for m in range(n % 2, n + 1, 2):
                coeffs[m] = entry(m, (n - m) // 2)
            polys.append(IntPoly(coeffs))
        return PolySeries(polys, order)

    denom = PolySeries([1, IntPoly((0, -1)), -1], order)
    _gf_compare(report, "pyramidal generating function", denom * cleansed(pyramidal),
                PolySeries([1, 0, 1], order))
    _gf_compare(report, "binomial generating function",
                denom * cleansed(lambda m, l: binomial(m + l, l)), PolySeries([1], order))

    for n in range(order + 1):
        p_n = p_poly(n)
        for m in range(n % 2, n + 1, 2):
            l = (n - m) // 2
            report.expect_equal(f"P[{m},{n}]", (-1) ** l * pyramidal(m, l), p_n.coeff(m))
    return report.finish()


def closed_form_check(max_n: int) -> CheckReport:
    report = CheckReport("closed_form_check", anchor="pyramidal and binomial formulas for T_n, U_n")
    for n in range(max_n + 1):
        report.expect_equal(f"T_{n}", chebyshev_t(n), t_closed_form(n))
        report.expect_equal(f"U_{n}", chebyshev_u(n), u_closed_form(n))
    return report.finish()


def parity_check(max_n: int) -> CheckReport:
    report = CheckReport("parity_check", anchor="F_n(-x) = (-1)^n F_n(x) for F in T, U, P, V")
    for kind in ChebKind:
        fn = family(kind)
        for n in range(max_n + 1):
            poly = fn(n)
            expected = poly if n % 2 == 0 else -poly
            report.expect_equal(f"{kind.value}_{n}(-x)", expected, poly.reflect())
    return report.finish()


def depowering_check(max_n: int) -> CheckReport:
    report = CheckReport("depowering_check", anchor="2 T_n(z/2) = P_n and U_n(z/2) = V_n")
    for n in range(1, max_n + 1):
        report.expect_equal(f"P_{n}", (chebyshev_t(n).scale_variable(Fraction(1, 2)) * 2), p_poly(n))
        report.expect_equal(f"V_{n}", chebyshev_u(n).scale_variable(Fraction(1, 2)), v_poly(n))
    return report.finish()


def recursion_identity_check(max_n: int) -> CheckReport:
    """x T_{n-1} + (x^2-1) U_{n-2} = T_n and T_n + x U_{n-1} = U_n, with U_{-1} = 0."""
    report = CheckReport("recursion_identity_check", anchor="x T_{n-1} + (x^2-1) U_{n-2} = T_n")
    x2_minus_1 = IntPoly((-1, 0, 1))
    for n in range(1, max_n + 1):
        u_prev2 = chebyshev_u(n - 2) if n >= 2 else IntPoly.zero()
        report.expect_equal(f"T_{n}", chebyshev_t(n), _X * chebyshev_t(n - 1) + x2_minus_1 * u_prev2)
        report.expect_equal(f"U_{n}", chebyshev_u(n), chebyshev_t(n) + _X * chebyshev_u(n - 1))
    return report.finish()


def mnemonic_check(size: int) -> CheckReport:
    report = CheckReport("mnemonic_check", anchor="difference-pattern construction of P")
    built = mnemonic_p_matrix(size)
    reference = chebyshev_matrix(ChebKind.P, size)
    for n in range(size):
        report.expect_equal(f"P column {n}", reference.columns[n], built.columns[n])
    return report.finish()


def brace_check(max_n: int, max_k: int) -> CheckReport:
    """Brace numbers against the T matrix: {n;k} = T_{n, n+2k}, {0;0} = T_00 / 2."""
    report = CheckReport("brace_check", anchor="{n;k} = 2{n-1;k} - {n;k-1}")
    for n in range(max_n + 1):
        for k in range(max_k + 1):
            expected = Fraction(chebyshev_t(n + 2 * k).coeff(n))
            if n == 0 and k == 0:
                expected /= 2
            report.expect_equal(f"{{{n};{k}}}", expected, brace(n, k))
    return report.finish()


def trig_values_check(max_n: int) -> CheckReport:
    """verify_trig_values for every n up to max_n, collected into one report."""
    report = CheckReport("trig_values_check", anchor="Chebyshev values at cos and sin")
    for n in range(max_n + 1):
        try:
            report.merge(verify_trig_values(n))
        except CheckFailed as exc:
            report.merge(exc.report)
    return report.finish()


def suite_checks(order: int) -> List[Tuple[str, Callable[[], CheckReport]]]:
    """Named checks making up the chebyshev suite at the given size."""
    small = min(order, 12)
    return [
        ("gf_check_chebyshev", lambda: gf_check_chebyshev(order)),
        ("p_gf_sign_cleansed_check", lambda: p_gf_sign_cleansed_check(order)),
        ("closed_form_check", lambda: closed_form_check(order)),
        ("parity_check", lambda: parity_check(order)),
        ("depowering_check", lambda: depowering_check(order)),
        ("recursion_identity_check", lambda: recursion_identity_check(order)),
        ("mnemonic_check", lambda: mnemonic_check(order + 1)),
        ("brace_check", lambda: brace_check(small, small)),
        ("trig_values_check", lambda: trig_values_check(order)),
    ]
