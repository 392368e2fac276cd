"""Factor system of the zpread polynomials.

Z_n is split as a product of Φ_d over the divisors d of n by exact
division in divisor order; for d >= 3 each Φ_d is expected to be a
perfect square ψ_d². The battery below checks the numerical claims
made about these factors and the golden-ratio fixed points of Z_n.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .combinatorics import a014963, a014963_product, a053139, divisors, is_prime, moebius, pyramidal_column, totient
from .errors import ConjectureViolation, NotASquare, NotDivisible
from .numbers import QuadInt
from .polynomial import IntPoly, poly_exact_div, poly_mul, poly_sqrt
from .report import CheckReport, CheckStatus
from .spread import zpread_poly, zpread_values

logger = logging.getLogger(__name__)

# Known ψ_d for d <= 17. Note ψ_16 has 20x² and ψ_17 has 119x⁶.
KNOWN_PSI: Dict[int, Tuple[int, ...]] = {
    3: (3, -1),
    4: (2, -1),
    5: (5, -5, 1),
    6: (1, -1),
    7: (7, -14, 7, -1),
    8: (2, -4, 1),
    9: (3, -9, 6, -1),
    10: (1, -3, 1),
    11: (11, -55, 77, -44, 11, -1),
    12: (1, -4, 1),
    13: (13, -91, 182, -156, 65, -13, 1),
    14: (1, -6, 5, -1),
    15: (1, -8, 14, -7, 1),
    16: (2, -16, 20, -8, 1),
    17: (17, -204, 714, -1122, 935, -442, 119, -17, 1),
}

_FOUR_MINUS_X = IntPoly((4, -1))
_TWO_MINUS_X = IntPoly((2, -1))


@dataclass
class FactorTable:
    """Φ_d for 1 <= d <= max_n and ψ_d for 3 <= d <= max_n."""

    max_n: int
    phi: Dict[int, IntPoly] = field(default_factory=dict)
    psi: Dict[int, IntPoly] = field(default_factory=dict)

    def phi_of(self, d: int) -> IntPoly:
        if d not in self.phi:
            raise KeyError(f"Φ_{d} is outside the table (max_n={self.max_n})")
        return self.phi[d]

    def product_over_divisors(self, n: int) -> IntPoly:
        result = IntPoly.one()
        for d in divisors(n):
            result = poly_mul(result, self.phi_of(d))
        return result

    def rows(self) -> List[Tuple[int, str]]:
        """(d, display) pairs, ψ_d² for d >= 3 when ψ is known."""
        rows = []
        for d in sorted(self.phi):
            if d in self.psi:
                rows.append((d, f"({self.psi[d]})^2"))
            else:
                rows.append((d, str(self.phi[d])))
        return rows


def build_factor_table(max_n: int) -> FactorTable:
    """Φ_n = Z_n / prod_{d | n, d < n} Φ_d for n = 1..max_n.

    Raises:
        ValueError: if max_n < 1
        ConjectureViolation: if some division is not exact over Z
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    table = FactorTable(max_n)
    logger.info(f"Building factor table through n={max_n}")
    for n in range(1, max_n + 1):
        known = IntPoly.one()
        for d in divisors(n)[:-1]:
            known = poly_mul(known, table.phi[d])
        try:
            table.phi[n] = poly_exact_div(zpread_poly(n), known)
        except NotDivisible as exc:
            logger.error(f"Z_{n} is not divisible by its lower factors: {exc}")
            raise ConjectureViolation(n, "not divisible") from exc
        logger.debug(f"Φ_{n} has degree {table.phi[n].degree}")
    return table


def extract_psi(table: FactorTable) -> FactorTable:
    """Fill table.psi with ψ_d = sqrt(Φ_d), ψ_d(0) > 0, for d >= 3.

    Raises:
        ConjectureViolation: if some Φ_d is not a perfect square or ψ_d(0) is not positive
    """
    for d in sorted(table.phi):
        if d < 3:
            continue
        try:
            root = poly_sqrt(table.phi[d])
        except NotASquare as exc:
            raise ConjectureViolation(d, "not a perfect square") from exc
        if root.coeff(0) <= 0:
            raise ConjectureViolation(d, f"ψ_{d}(0) = {root.coeff(0)} is not positive")
        table.psi[d] = root
    return table


def factor_table(max_n: int) -> FactorTable:
    """build_factor_table followed by extract_psi."""
    return extract_psi(build_factor_table(max_n))


@dataclass
class BatteryReport:
    """Outcome of the conjecture battery over a factor table."""

    max_n: int
    checks: List[CheckReport] = field(default_factory=list)
    reflection_2x: Dict[int, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status is not CheckStatus.FAILED for c in self.checks)

    @property
    def violations(self) -> List[str]:
        return [f"{c.name}: {f}" for c in self.checks for f in c.failures]

    def summary_lines(self) -> List[str]:
        lines = [c.summary() for c in self.checks]
        held = sorted(p for p, ok in self.reflection_2x.items() if ok)
        failed = sorted(p for p, ok in self.reflection_2x.items() if not ok)
        lines.append(f"reflection Φ_p(x) = Φ_2p(2-x): holds for {held or 'none'}, fails for {failed or 'none'}")
        return lines


def reconstruction_check(table: FactorTable) -> CheckReport:
    report = CheckReport("reconstruction", anchor="Z_n = prod_{d|n} Φ_d")
    for n in range(1, table.max_n + 1):
        report.expect_equal(f"n={n}", zpread_poly(n), table.product_over_divisors(n))
        report.expect_equal(f"n={n} degree sum", n, sum(table.phi[d].degree for d in divisors(n)))
    return report


def degree_check(table: FactorTable) -> CheckReport:
    report = CheckReport("degree", anchor="deg Φ_d = totient(d)")
    for d, phi in sorted(table.phi.items()):
        report.expect_equal(f"d={d}", totient(d), phi.degree)
    return report


def constant_term_check(table: FactorTable) -> CheckReport:
    report = CheckReport("constant_term", anchor="ψ_d(0) = A014963(d) = prod_{k|d} (d/k)^mu(k)")
    for d, psi in sorted(table.psi.items()):
        report.expect_equal(f"d={d}", a014963(d), psi.coeff(0))
        report.expect_equal(f"d={d} product form", a014963_product(d), psi.coeff(0))
    return report


def prime_sign_check(table: FactorTable) -> CheckReport:
    report = CheckReport("prime_sign", anchor="ψ_p(1) = (-1)^(totient(p)/2) for primes p >= 5")
    for p, psi in sorted(table.psi.items()):
        if p >= 5 and is_prime(p):
            report.expect_equal(f"p={p}", (-1) ** (totient(p) // 2), psi.evaluate(1))
    return report


def reflection_check(table: FactorTable) -> Tuple[CheckReport, Dict[int, bool]]:
    """Assert Φ_2p(x) = Φ_p(4-x); record whether Φ_p(x) = Φ_2p(2-x) also holds."""
    report = CheckReport("reflection", anchor="Φ_2p(x) = Φ_p(4-x) for primes p > 2")
    via_two_minus_x: Dict[int, bool] = {}
    for p in range(3, table.max_n // 2 + 1):
        if not is_prime(p):
            continue
        report.expect_equal(f"p={p}", table.phi[2 * p], table.phi[p].compose(_FOUR_MINUS_X))
        via_two_minus_x[p] = table.phi[p] == table.phi[2 * p].compose(_TWO_MINUS_X)
    return report, via_two_minus_x


def known_table_check(table: FactorTable) -> CheckReport:
    report = CheckReport("known_table", anchor="ψ_d for d <= 17 as tabulated")
    for d, coeffs in KNOWN_PSI.items():
        if d in table.psi:
            report.expect_equal(f"ψ_{d}", IntPoly(coeffs), table.psi[d])
    return report


def irreducibility_check() -> CheckReport:
    return CheckReport("irreducibility", anchor="ψ_d irreducible over Z", status=CheckStatus.NOT_TESTED)


def run_conjecture_battery(table: FactorTable) -> BatteryReport:
    """Run every check on a table built by factor_table.

    Violations are collected in the report rather than raised.
    """
    if not table.psi and table.max_n >= 3:
        raise ValueError("table has no ψ entries; run extract_psi first")
    battery = BatteryReport(table.max_n)
    reflection, via_two_minus_x = reflection_check(table)
    battery.checks = [
        reconstruction_check(table),
        degree_check(table),
        constant_term_check(table),
        prime_sign_check(table),
        reflection,
        known_table_check(table),
        irreducibility_check(),
    ]
    battery.reflection_2x = via_two_minus_x
    for line in battery.violations:
        logger.warning(f"battery violation: {line}")
    logger.info(f"Battery through n={table.max_n}: {'pass' if battery.passed else 'FAIL'}")
    return battery


# Golden-ratio fixed points

@dataclass(frozen=True)
class FixedPointItem:
    """Z_n(point) == target  iff  n mod modulus in residues."""

    label: str
    point: QuadInt
    target: QuadInt
    modulus: int
    residues: Tuple[int, ...]


FIXED_POINT_ITEMS: Tuple[FixedPointItem, ...] = (
    FixedPointItem("Z_n(2) = 2", QuadInt(2), QuadInt(2), 2, (1,)),
    FixedPointItem("Z_n(3) = 3", QuadInt(3), QuadInt(3), 3, (1, 2)),
    FixedPointItem("Z_n(2+φ) = 2+φ", QuadInt(2, 1), QuadInt(2, 1), 5, (1, 4)),
    FixedPointItem("Z_n(2+φ) = 3-φ", QuadInt(2, 1), QuadInt(3, -1), 5, (2, 3)),
)


@dataclass
class FixedPointReport:
    """Per-item hit counts by residue class and the violations found."""

    max_n: int
    hits: Dict[str, Dict[int, int]] = field(default_factory=dict)
    violations: List[ConjectureViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def golden_fixed_points(max_n: int, items: Sequence[FixedPointItem] = FIXED_POINT_ITEMS) -> FixedPointReport:
    """Check each item for 1 <= n <= max_n in exact Z[φ] arithmetic."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    report = FixedPointReport(max_n)
    values_at: Dict[QuadInt, List[QuadInt]] = {}
    for item in items:
        if item.point not in values_at:
            values_at[item.point] = zpread_values(item.point, max_n + 1)
        values = values_at[item.point]
        hits = {r: 0 for r in range(item.modulus)}
        for n in range(1, max_n + 1):
            hit = values[n] == item.target
            expected = n % item.modulus in item.residues
            if hit:
                hits[n % item.modulus] += 1
            if hit != expected:
                report.violations.append(
                    ConjectureViolation(n, f"{item.label}: got Z_{n} = {values[n]}")
                )
        report.hits[item.label] = hits
    logger.info(f"Fixed points through n={max_n}: {len(report.violations)} violations")
    return report


# Exploratory reports

@dataclass(frozen=True)
class ColumnComparison:
    d: int
    column_index: int
    psi_coeffs: Tuple[int, ...]
    column: Tuple[int, ...]
    mismatches: Tuple[int, ...]


def pyramidal_column_report(table: FactorTable) -> List[ColumnComparison]:
    """Compare |ψ_d| (leading coefficient first) with pyramidal column totient(d) - moebius(d).

    Positions are aligned from the leading coefficient; nothing is asserted.
    """
    comparisons = []
    for d, psi in sorted(table.psi.items()):
        index = a053139(d)
        coeffs = tuple(abs(c) for c in reversed(psi.coeffs))
        column = tuple(pyramidal_column(index))
        width = min(len(coeffs), len(column))
        mismatches = tuple(k for k in range(width) if coeffs[k] != column[k])
        comparisons.append(ColumnComparison(d, index, coeffs, column[:len(coeffs)], mismatches))
        logger.debug(f"ψ_{d} vs column {index}: mismatches at {list(mismatches)} (moebius {moebius(d)})")
    return comparisons


def phi_evaluations(table: FactorTable, points: Sequence[int] = (0, 1, 2, 3, 4)) -> Dict[int, List[int]]:
    """Φ_n(x) at the given integer points, keyed by n."""
    return {n: [phi.evaluate(x) for x in points] for n, phi in sorted(table.phi.items())}
