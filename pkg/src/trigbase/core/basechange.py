"""Base changes between trigonometric polynomial bases.

Everything is written in kappa = 2cos, sigma = 2sin and
nu_m = sin((m+1)t)/sin(t) so that the transition matrices are integral
and unitriangular. Each basis element has an exact Laurent representative
in z = e^{it}, which is the oracle for every identity in this module.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from .chebyshev import chebyshev_t, chebyshev_u, p_poly, v_poly
from .combinatorics import (
    binomial,
    catalan_triangle_even,
    catalan_triangle_even_matrix,
    catalan_triangle_odd,
    catalan_triangle_odd_matrix,
    pyramidal,
)
from .errors import NotReal
from .laurent import Z, Z_INV, LaurentPoly
from .numbers import GaussianRational
from .polynomial import IntPoly
from .report import CheckReport
from .riordan import NamedArray, RiordanArray, inversion_pairs, named_array, riordan_matrix
from .series import PolySeries, TruncSeries
from ..utils.matrix import first_mismatch, identity, mat_mul, transpose

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)
_MINUS_I = GaussianRational(0, -1)
_KAPPA = Z + Z_INV
_SIGMA = (Z - Z_INV) * _MINUS_I


class TrigBasis(Enum):
    """Families of trigonometric polynomials used as bases."""
    KAPPA_MULTIPLE = "kappa-multiple"
    NU = "nu"
    KAPPA_POWER = "kappa-power"
    SIGMA_POWER = "sigma-power"
    SIGMA_MULTIPLE = "sigma-multiple"
    SHUFFLE_MULTIPLE = "shuffle-multiple"
    SHUFFLE_POWER = "shuffle-power"


_SYMBOLS = {
    TrigBasis.KAPPA_MULTIPLE: "kappa({k}t)",
    TrigBasis.NU: "nu_{k}",
    TrigBasis.KAPPA_POWER: "kappa^{k}",
    TrigBasis.SIGMA_POWER: "sigma^{k}",
    TrigBasis.SIGMA_MULTIPLE: "sigma({k}t)",
    TrigBasis.SHUFFLE_MULTIPLE: "sh({k}t)",
    TrigBasis.SHUFFLE_POWER: "sh^{k}",
}


@dataclass(frozen=True)
class BasisElement:
    """The element of ``basis`` with the given index.

    Index 0 of kappa-multiple is the constant function 1, not kappa(0) = 2.
    """

    basis: TrigBasis
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"basis index must be >= 0, got {self.index}")

    def __str__(self) -> str:
        return _SYMBOLS[self.basis].format(k=self.index)


@lru_cache(maxsize=1024)
def _expand(basis: TrigBasis, k: int) -> LaurentPoly:
    if basis is TrigBasis.KAPPA_MULTIPLE:
        if k == 0:
            return LaurentPoly.constant(1)
        return LaurentPoly.monomial(k) + LaurentPoly.monomial(-k)
    if basis is TrigBasis.NU:
        return LaurentPoly({k - 2 * j: 1 for j in range(k + 1)})
    if basis is TrigBasis.KAPPA_POWER:
        return _KAPPA**k
    if basis is TrigBasis.SIGMA_POWER:
        return _SIGMA**k
    if basis is TrigBasis.SIGMA_MULTIPLE:
        return (LaurentPoly.monomial(k) - LaurentPoly.monomial(-k)) * _MINUS_I
    if basis is TrigBasis.SHUFFLE_MULTIPLE:
        return 2 - LaurentPoly.monomial(2 * k) - LaurentPoly.monomial(-2 * k)
    return (2 - Z * Z - Z_INV * Z_INV) ** k


def laurent_expand(element: BasisElement) -> LaurentPoly:
    """Canonical Laurent representative of a basis element.

    kappa(kt) = z^k + z^-k, nu_m = sum_j z^(m-2j), sigma = -i(z - 1/z),
    shuffle = sigma^2 = 2 - z^2 - z^-2.
    """
    return _expand(element.basis, element.index)


def leading_exponent(element: BasisElement) -> int:
    """Largest z-exponent of the representative (-1 for the zero element)."""
    exponents = laurent_expand(element).exponents()
    return exponents[-1] if exponents else -1


def _cos(m: int) -> LaurentPoly:
    return laurent_expand(BasisElement(TrigBasis.KAPPA_MULTIPLE, m)) * (_HALF if m else 1)


def _sin(m: int) -> LaurentPoly:
    return laurent_expand(BasisElement(TrigBasis.SIGMA_MULTIPLE, m)) * _HALF


# Power reduction

class PowerKind(Enum):
    """Which power is reduced to multiple angles."""
    COS_EVEN = "cos-even"
    COS_ODD = "cos-odd"
    SIN_EVEN = "sin-even"
    SIN_ODD = "sin-odd"

    @property
    def is_even(self) -> bool:
        return self in (PowerKind.COS_EVEN, PowerKind.SIN_EVEN)

    @property
    def is_sine(self) -> bool:
        return self in (PowerKind.SIN_EVEN, PowerKind.SIN_ODD)


def _check_power_index(kind: PowerKind, n: int) -> None:
    low = 1 if kind.is_even else 0
    if n < low:
        raise ValueError(f"{kind.value} power reduction needs n >= {low}, got {n}")


def _scaled_power_reduce(kind: PowerKind, n: int) -> List[int]:
    """Integer coefficients; even kinds are scaled by 2 so the center stays integral."""
    if kind.is_even:
        coeffs = [binomial(2 * n, n)]
        for k in range(1, n + 1):
            sign = (-1) ** k if kind.is_sine else 1
            coeffs.append(2 * sign * binomial(2 * n, n - k))
        return coeffs
    return [
        ((-1) ** k if kind.is_sine else 1) * binomial(2 * n + 1, n - k)
        for k in range(n + 1)
    ]


def power_reduce(kind: PowerKind | str, n: int) -> List[Fraction]:
    """Multiple-angle coefficients of a reduced power.

    cos-even: 2^(2n-1) cos^2n = c_0 + sum_k c_k cos(2kt)
    cos-odd:  2^(2n) cos^(2n+1) = sum_k c_k cos((2k+1)t)
    sin-even: 2^(2n-1) sin^2n = c_0 + sum_k c_k cos(2kt)
    sin-odd:  2^(2n) sin^(2n+1) = sum_k c_k sin((2k+1)t)

    The center coefficient of the even kinds is binom(2n, n)/2.

    Args:
        kind: One of cos-even, cos-odd, sin-even, sin-odd
        n: Power index, n >= 1 for the even kinds and n >= 0 otherwise

    Returns:
        [c_0, ..., c_n]
    """
    kind = PowerKind(kind)
    _check_power_index(kind, n)
    scaled = _scaled_power_reduce(kind, n)
    if kind.is_even:
        return [Fraction(c, 2) for c in scaled]
    return [Fraction(c) for c in scaled]


def _power_laurent(kind: PowerKind, n: int) -> LaurentPoly:
    degree = 2 * n if kind.is_even else 2 * n + 1
    base = _SIGMA if kind.is_sine else _KAPPA
    return base**degree * _HALF


def _angle(kind: PowerKind, k: int) -> int:
    return 2 * k if kind.is_even else 2 * k + 1


def multiple_angle_laurent(kind: PowerKind | str, coeffs: Sequence[Fraction]) -> LaurentPoly:
    """Laurent form of sum_k coeffs[k] times the k-th multiple-angle function of ``kind``."""
    kind = PowerKind(kind)
    term = _sin if kind is PowerKind.SIN_ODD else _cos
    total = LaurentPoly()
    for k, c in enumerate(coeffs):
        if c:
            total = total + term(_angle(kind, k)) * c
    return total


def _real(value, where: str) -> Fraction:
    g = GaussianRational.coerce(value)
    if not g.is_real():
        raise NotReal(f"{where}: {g} is not real")
    return g.re


def power_reduce_from_laurent(kind: PowerKind | str, n: int) -> List[Fraction]:
    """Read the power_reduce coefficients off the Laurent expansion of the power.

    Sine kinds run over Gaussian rationals; every coefficient is checked
    to be real before it is returned.

    Raises:
        NotReal: if a coefficient has a nonzero imaginary part
    """
    kind = PowerKind(kind)
    _check_power_index(kind, n)
    power = _power_laurent(kind, n)
    coeffs: List[Fraction] = []
    for k in range(n + 1):
        m = _angle(kind, k)
        c = power.coeff(m)
        if kind is PowerKind.SIN_ODD:
            value = GaussianRational.coerce(c) * GaussianRational(0, 2)
        else:
            value = GaussianRational.coerce(c) * (2 if m else 1)
        coeffs.append(_real(value, f"{kind.value} n={n} k={k}"))
    return coeffs


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


def cos_power_to_nu(parity: Parity | str, n: int) -> List[int]:
    """Expand a power of kappa over the nu basis.

    even: 2^(2n) cos^2n = sum_{k=0..n} B^odd_{nk} nu_{2k}, returns [B^odd_{n0}, ..., B^odd_{nn}]
    odd:  2^(2n-1) cos^(2n-1) = sum_{k=1..n} B^even_{nk} nu_{2k-1}, returns [B^even_{n1}, ..., B^even_{nn}]
    """
    parity = Parity(parity)
    if parity is Parity.EVEN:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return [catalan_triangle_odd(n, k) for k in range(n + 1)]
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [catalan_triangle_even(n, k) for k in range(1, n + 1)]


# Transition matrices

class TransitionKind(Enum):
    INV1 = "inv1"
    INV2 = "inv2"
    INV3 = "inv3"
    INV4 = "inv4"
    PYRCAT1 = "pyrcat1"
    PYRCAT2 = "pyrcat2"
    PYRCAT3 = "pyrcat3"
    PYRCAT4 = "pyrcat4"


@dataclass(frozen=True)
class _Layout:
    source: TrigBasis
    target: TrigBasis
    offset: int
    entry: Callable[[int, int], int]


def _signed(i: int, j: int) -> int:
    return (-1) ** (j - i)


_LAYOUTS: Dict[TransitionKind, _Layout] = {
    TransitionKind.INV1: _Layout(
        TrigBasis.KAPPA_POWER, TrigBasis.KAPPA_MULTIPLE, 0,
        lambda i, j: _signed(i, j) * pyramidal(2 * i, j - i)),
    TransitionKind.INV2: _Layout(
        TrigBasis.KAPPA_MULTIPLE, TrigBasis.KAPPA_POWER, 0,
        lambda i, j: binomial(2 * j, j - i)),
    TransitionKind.INV3: _Layout(
        TrigBasis.KAPPA_POWER, TrigBasis.KAPPA_MULTIPLE, 1,
        lambda i, j: _signed(i, j) * pyramidal(2 * i + 1, j - i)),
    TransitionKind.INV4: _Layout(
        TrigBasis.KAPPA_MULTIPLE, TrigBasis.KAPPA_POWER, 1,
        lambda i, j: binomial(2 * j + 1, j - i)),
    TransitionKind.PYRCAT1: _Layout(
        TrigBasis.NU, TrigBasis.KAPPA_POWER, 0,
        lambda i, j: catalan_triangle_odd(j, i)),
    TransitionKind.PYRCAT2: _Layout(
        TrigBasis.KAPPA_POWER, TrigBasis.NU, 0,
        lambda i, j: _signed(i, j) * binomial(i + j, j - i)),
    TransitionKind.PYRCAT3: _Layout(
        TrigBasis.NU, TrigBasis.KAPPA_POWER, 1,
        lambda i, j: catalan_triangle_even(j + 1, i + 1)),
    TransitionKind.PYRCAT4: _Layout(
        TrigBasis.KAPPA_POWER, TrigBasis.NU, 1,
        lambda i, j: _signed(i, j) * binomial(i + j + 1, j - i)),
}

_PARTNERS = {
    TransitionKind.INV1: TransitionKind.INV2,
    TransitionKind.INV3: TransitionKind.INV4,
    TransitionKind.PYRCAT1: TransitionKind.PYRCAT2,
    TransitionKind.PYRCAT3: TransitionKind.PYRCAT4,
}
_PARTNERS.update({b: a for a, b in list(_PARTNERS.items())})


@dataclass(frozen=True)
class TransitionMatrix:
    """Upper unitriangular integer matrix between two bases.

    target[j] = sum_i entries[i][j] * source[i], where the i-th source
    element has index 2i + offset in its basis and likewise for targets.
    """

    which: TransitionKind
    source: TrigBasis
    target: TrigBasis
    offset: int
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def source_element(self, i: int) -> BasisElement:
        return BasisElement(self.source, 2 * i + self.offset)

    def target_element(self, j: int) -> BasisElement:
        return BasisElement(self.target, 2 * j + self.offset)


def transition_matrix(which: TransitionKind | str, size: int) -> TransitionMatrix:
    """Build one of the eight transition matrices from its entry formula.

    Args:
        which: inv1..inv4 or pyrcat1..pyrcat4
        size: Number of rows and columns, >= 1

    Returns:
        The leading size x size block
    """
    which = TransitionKind(which)
    if size < 1:
        raise ValueError(f"matrix size must be >= 1, got {size}")
    layout = _LAYOUTS[which]
    entries = tuple(
        tuple(layout.entry(i, j) if j >= i else 0 for j in range(size))
        for i in range(size)
    )
    logger.debug(f"built {which.value} transition matrix of size {size}")
    return TransitionMatrix(which, layout.source, layout.target, layout.offset, entries)


def partner(which: TransitionKind | str) -> TransitionKind:
    """The matrix that inverts ``which``."""
    return _PARTNERS[TransitionKind(which)]


# Verifications

def _expect_matrix(report: CheckReport, label: str, expected, got) -> None:
    report.tick()
    miss = first_mismatch(expected, got)
    if miss is not None:
        i, j, want, have = miss
        report.fail(f"{label} entry ({i},{j})", want, have)


def _expect_laurent(report: CheckReport, label: str, expected: LaurentPoly, got: LaurentPoly) -> None:
    report.tick()
    if expected != got:
        for e in sorted(set(expected.exponents()) | set(got.exponents())):
            if expected.coeff(e) != got.coeff(e):
                report.fail(f"{label} at z^{e}", expected.coeff(e), got.coeff(e))
                return


def kappa_power_nu_rows(offset: int, size: int) -> List[List[Fraction]]:
    """Row j holds the coordinates of kappa^(2j+offset) on nu_offset, nu_(offset+2), ...

    Read off the Laurent expansion alone: nu_m = z^m + z^(m-2) + ... + z^-m,
    so the coordinate on nu_m of a symmetric Laurent polynomial is
    [z^m] - [z^(m+2)].
    """
    if offset not in (0, 1):
        raise ValueError(f"offset must be 0 or 1, got {offset}")
    rows = []
    for j in range(size):
        power = laurent_expand(BasisElement(TrigBasis.KAPPA_POWER, 2 * j + offset))
        where = f"kappa^{2 * j + offset}"
        rows.append([
            _real(power.coeff(2 * i + offset), where) - _real(power.coeff(2 * i + offset + 2), where)
            for i in range(size)
        ])
    return rows


def verify_mutual_inverse(which: TransitionKind | str, size: int) -> CheckReport:
    """Exact products of a matrix and its partner are the identity.

    For the Catalan pairs, the closed-form triangle and the transposed
    Catalan matrix are both compared with the nu-coordinates of the kappa
    powers read off their Laurent expansions (pyrcat1^T = B^odd,
    pyrcat3^T = B^even), and the transposed signed matrix must invert them.
    """
    first = TransitionKind(which)
    second = partner(first)
    report = CheckReport(
        "verify_mutual_inverse",
        anchor=f"{first.value} and {second.value} are mutually inverse",
    )
    a = transition_matrix(first, size).rows()
    b = transition_matrix(second, size).rows()
    unit = identity(size)
    _expect_matrix(report, f"{first.value}*{second.value}", unit, mat_mul(a, b))
    _expect_matrix(report, f"{second.value}*{first.value}", unit, mat_mul(b, a))

    if first in (TransitionKind.PYRCAT1, TransitionKind.PYRCAT2):
        label, triangle = "B^odd", catalan_triangle_odd_matrix(size)
        catalan, signed = TransitionKind.PYRCAT1, TransitionKind.PYRCAT2
    elif first in (TransitionKind.PYRCAT3, TransitionKind.PYRCAT4):
        label, triangle = "B^even", catalan_triangle_even_matrix(size)
        catalan, signed = TransitionKind.PYRCAT3, TransitionKind.PYRCAT4
    else:
        return report.finish()
    laurent_rows = kappa_power_nu_rows(_LAYOUTS[catalan].offset, size)
    catalan_rows = transition_matrix(catalan, size).rows()
    signed_rows = transition_matrix(signed, size).rows()
    _expect_matrix(report, f"{label} vs Laurent", laurent_rows, triangle)
    _expect_matrix(report, f"{catalan.value}^T vs Laurent", laurent_rows, transpose(catalan_rows))
    _expect_matrix(report, f"{signed.value}^T * {label}", unit, mat_mul(transpose(signed_rows), laurent_rows))
    return report.finish()


def transition_laurent_check(which: TransitionKind | str, size: int) -> CheckReport:
    """Every column of a transition matrix is a Laurent identity between the two bases."""
    matrix = transition_matrix(which, size)
    report = CheckReport(
        "transition_laurent_check",
        anchor=f"{matrix.which.value}: target_j = sum_i M_ij source_i",
    )
    for j in range(size):
        combination = LaurentPoly()
        for i in range(j + 1):
            c = matrix.entries[i][j]
            if c:
                combination = combination + laurent_expand(matrix.source_element(i)) * c
        _expect_laurent(report, f"{matrix.which.value} column {j} ({matrix.target_element(j)})",
                        laurent_expand(matrix.target_element(j)), combination)
    return report.finish()


def sine_transition_check(size: int) -> CheckReport:
    """inv1 and inv3 with sigma in place of kappa give the signed multiple angles.

    sum_i inv1_ij sigma^(2i) = (-1)^j kappa(2jt) and
    sum_i inv3_ij sigma^(2i+1) = (-1)^j sigma((2j+1)t).
    """
    report = CheckReport("sine_transition_check", anchor="T_2n(sin t) = (-1)^n cos 2nt in the sigma basis")
    for which, target in ((TransitionKind.INV1, TrigBasis.KAPPA_MULTIPLE),
                          (TransitionKind.INV3, TrigBasis.SIGMA_MULTIPLE)):
        matrix = transition_matrix(which, size)
        for j in range(size):
            combination = LaurentPoly()
            for i in range(j + 1):
                c = matrix.entries[i][j]
                if c:
                    combination = combination + laurent_expand(
                        BasisElement(TrigBasis.SIGMA_POWER, 2 * i + matrix.offset)) * c
            expected = laurent_expand(BasisElement(target, 2 * j + matrix.offset)) * (-1) ** j
            _expect_laurent(report, f"{which.value} column {j} in sigma", expected, combination)
    return report.finish()


def oracle_equivalence_check(max_n: int) -> CheckReport:
    """power_reduce agrees with the Laurent expansion of the power, all four kinds."""
    report = CheckReport(
        "oracle_equivalence_check",
        anchor="2^(2n-1) cos^2n t = binom(2n,n)/2 + sum binom(2n,n-k) cos 2kt and its three companions",
    )
    for kind in PowerKind:
        start = 1 if kind.is_even else 0
        for n in range(start, max_n + 1):
            coeffs = power_reduce(kind, n)
            _expect_laurent(report, f"{kind.value} n={n}", _power_laurent(kind, n),
                            multiple_angle_laurent(kind, coeffs))
            report.expect_equal(f"{kind.value} n={n} read back", coeffs,
                                power_reduce_from_laurent(kind, n))
    return report.finish()


def nu_expansion_check(max_n: int) -> CheckReport:
    """kappa^2n = sum B^odd_nk nu_2k and kappa^(2n-1) = sum B^even_nk nu_(2k-1)."""
    report = CheckReport("nu_expansion_check", anchor="2^2n cos^2n t = sum B^odd_nk sin((2k+1)t)/sin t")
    for n in range(max_n + 1):
        combination = LaurentPoly()
        for k, c in enumerate(cos_power_to_nu(Parity.EVEN, n)):
            combination = combination + laurent_expand(BasisElement(TrigBasis.NU, 2 * k)) * c
        _expect_laurent(report, f"kappa^{2 * n}", _KAPPA ** (2 * n), combination)
    for n in range(1, max_n + 1):
        combination = LaurentPoly()
        for k, c in enumerate(cos_power_to_nu(Parity.ODD, n), start=1):
            combination = combination + laurent_expand(BasisElement(TrigBasis.NU, 2 * k - 1)) * c
        _expect_laurent(report, f"kappa^{2 * n - 1}", _KAPPA ** (2 * n - 1), combination)
    return report.finish()


def orthogonality_check(size: int) -> CheckReport:
    """Constant term of kappa(mt) kappa(nt) is 2 delta_mn; against the constant 1 it vanishes unless m = n = 0."""
    report = CheckReport("orthogonality_check", anchor="kappa(mt) and kappa(nt) are orthogonal for m != n")
    for m in range(size + 1):
        left = laurent_expand(BasisElement(TrigBasis.KAPPA_MULTIPLE, m))
        for n in range(size + 1):
            right = laurent_expand(BasisElement(TrigBasis.KAPPA_MULTIPLE, n))
            if m == 0 or n == 0:
                expected = 1 if m == n else 0
            else:
                expected = 2 if m == n else 0
            report.expect_equal(f"<kappa({m}t), kappa({n}t)>", expected, (left * right).constant_term())
    return report.finish()


def round_trip_check(size: int) -> CheckReport:
    """kappa^2n through inv2 and back through inv1 is the unit vector e_n."""
    report = CheckReport("round_trip_check", anchor="inv1 undoes inv2 column by column")
    inv1 = transition_matrix(TransitionKind.INV1, size).rows()
    inv2 = transition_matrix(TransitionKind.INV2, size).rows()
    for n in range(size):
        multiples = [row[n] for row in inv2]
        powers = [sum(inv1[i][j] * multiples[j] for j in range(size)) for i in range(size)]
        unit = [1 if i == n else 0 for i in range(size)]
        report.expect_equal(f"kappa^{2 * n}", unit, powers)
    return report.finish()


def riordan_transpose_check(size: int) -> CheckReport:
    """All eight transition matrices are transposes of Riordan arrays.

    inv1, inv3 <- ((1-x)/(1+x), x/(1+x)^2), ((1-x)/(1+x)^2, x/(1+x)^2);
    inv2, inv4 <- (B, xC^2), (BC, xC^2); pyrcat1, pyrcat3 <- (C, xC^2),
    (C^2, xC^2); pyrcat2, pyrcat4 <- (1/(1+x), x/(1+x)^2), (1/(1+x)^2, x/(1+x)^2).
    """
    report = CheckReport("riordan_transpose_check", anchor="the transition matrices are transposed Riordan arrays")
    order = size - 1
    pairs = inversion_pairs(order)
    arrays = {
        TransitionKind.INV1: named_array(NamedArray.PYRAMIDAL_EVEN, order),
        TransitionKind.INV2: named_array(NamedArray.CENTRAL, order),
        TransitionKind.INV3: named_array(NamedArray.PYRAMIDAL_ODD, order),
        TransitionKind.INV4: named_array(NamedArray.CENTRAL_ODD, order),
        TransitionKind.PYRCAT1: named_array(NamedArray.CATALAN_ODD, order),
        TransitionKind.PYRCAT2: pairs[0][2],
        TransitionKind.PYRCAT3: named_array(NamedArray.CATALAN_EVEN, order),
        TransitionKind.PYRCAT4: pairs[1][2],
    }
    for which, array in arrays.items():
        _expect_matrix(report, which.value, transition_matrix(which, size).rows(),
                       transpose(riordan_matrix(array, size)))
    return report.finish()


_SAMPLE_KAPPAS = (Fraction(0), Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-5, 3))


def riordan_series_check(order: int) -> CheckReport:
    """The transposed arrays applied to sum (kappa^2 x)^n give the multiple-angle series.

    Checked at sample values of kappa: the pyramidal arrays produce
    sum P_2n(kappa) x^n and sum P_(2n+1)(kappa) x^n, the arrays of
    pyrcat2, pyrcat4 produce sum V_2n(kappa) x^n and sum V_(2n+1)(kappa) x^n.
    """
    report = CheckReport(
        "riordan_series_check",
        anchor="((1-x)/(1+x), x/(1+x)^2) applied to 1/(1-kappa^2 x) is (1-x^2)/((1+x)^2 - kappa^2 x)",
    )
    pairs = inversion_pairs(order)
    cases: List[Tuple[str, RiordanArray, bool, Callable[[int], IntPoly]]] = [
        ("pyramidal_even", named_array(NamedArray.PYRAMIDAL_EVEN, order), False,
         lambda n: p_poly(2 * n)),
        ("pyramidal_odd", named_array(NamedArray.PYRAMIDAL_ODD, order), True,
         lambda n: p_poly(2 * n + 1)),
        ("(1/(1+x), x/(1+x)^2)", pairs[0][2], False, lambda n: v_poly(2 * n)),
        ("(1/(1+x)^2, x/(1+x)^2)", pairs[1][2], True, lambda n: v_poly(2 * n + 1)),
    ]
    for label, array, odd, poly in cases:
        for kappa in _SAMPLE_KAPPAS:
            h = TruncSeries.geometric(order, kappa * kappa)
            if odd:
                h = h * kappa
            got = array.apply(h)
            expected = TruncSeries.from_function(lambda n: poly(n).evaluate(kappa), order)
            report.tick()
            n = expected.first_difference(got)
            if n is not None:
                report.fail(f"{label} at kappa={kappa}, x^{n}", expected[n], got[n])
    return report.finish()


_C = IntPoly.x()


def _closed_series_denominator(order: int) -> PolySeries:
    """(1+x)^2 - 4c^2 x as a series in x over Z[c]."""
    return PolySeries([1, IntPoly((2, 0, -4)), 1], order)


def _closed_series_items(order: int) -> List[Tuple[int, PolySeries, PolySeries]]:
    """(item, numerator, claimed series) for the four closed cosine series."""
    two_t_even = [IntPoly.one()] + [chebyshev_t(2 * n) * 2 for n in range(1, order + 1)]
    return [
        (1, PolySeries([1, 0, -1], order), PolySeries(two_t_even, order)),
        (2, PolySeries([_C, -_C], order),
         PolySeries([chebyshev_t(2 * n + 1) for n in range(order + 1)], order)),
        (3, PolySeries([1, 1], order),
         PolySeries([chebyshev_u(2 * n) for n in range(order + 1)], order)),
        (4, PolySeries([_C * 2], order),
         PolySeries([chebyshev_u(2 * n + 1) for n in range(order + 1)], order)),
    ]


def closed_series_checks(order: int) -> CheckReport:
    """The four closed cosine series as identities in Q[c][[x]], c = cos t.

    1. (1-x^2)/D = 1 + 2 sum_{n>=1} T_2n(c) x^n
    2. (1-x) c/D = sum T_(2n+1)(c) x^n
    3. (1+x)/D = sum U_2n(c) x^n
    4. 2c/D = sum U_(2n+1)(c) x^n

    with D = (1+x)^2 - 4c^2 x. Each is checked by multiplying the claimed
    series by D and comparing with the numerator.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    report = CheckReport("closed_series_checks", anchor="1 + 2 sum cos(2nt) x^n = (1-x^2)/((1+x)^2 - 4x cos^2 t)")
    denominator = _closed_series_denominator(order)
    for item, numerator, claimed in _closed_series_items(order):
        product = denominator * claimed
        report.tick()
        n = numerator.first_difference(product)
        if n is not None:
            report.fail(f"item {item} at x^{n}", str(numerator[n]), str(product[n]))
    return report.finish()


def suite_checks(order: int) -> List[Tuple[str, Callable[[], CheckReport]]]:
    """Named checks making up the basechange suite."""
    size = min(order, 30)
    small = min(order, 25)
    checks: List[Tuple[str, Callable[[], CheckReport]]] = []
    for which in (TransitionKind.INV1, TransitionKind.INV3, TransitionKind.PYRCAT1, TransitionKind.PYRCAT3):
        checks.append((f"verify_mutual_inverse({which.value})",
                       lambda which=which: verify_mutual_inverse(which, size)))
    for which in TransitionKind:
        checks.append((f"transition_laurent_check({which.value})",
                       lambda which=which: transition_laurent_check(which, small)))
    checks.extend([
        ("sine_transition_check", lambda: sine_transition_check(small)),
        ("oracle_equivalence_check", lambda: oracle_equivalence_check(small)),
        ("nu_expansion_check", lambda: nu_expansion_check(small)),
        ("orthogonality_check", lambda: orthogonality_check(size)),
        ("round_trip_check", lambda: round_trip_check(small)),
        ("riordan_transpose_check", lambda: riordan_transpose_check(size + 1)),
        ("riordan_series_check", lambda: riordan_series_check(size)),
        ("closed_series_checks", lambda: closed_series_checks(size)),
    ])
    return checks
