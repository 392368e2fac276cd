"""Unit tests for the zpread factor system and the conjecture battery."""

import pytest

from trigbase.core import factor
from trigbase.core.errors import ConjectureViolation, NotDivisible
from trigbase.core.factor import (
    FIXED_POINT_ITEMS,
    KNOWN_PSI,
    FactorTable,
    FixedPointItem,
    build_factor_table,
    extract_psi,
    factor_table,
    golden_fixed_points,
    phi_evaluations,
    pyramidal_column_report,
    reflection_check,
    run_conjecture_battery,
)
from trigbase.core.numbers import QuadInt
from trigbase.core.polynomial import IntPoly
from trigbase.core.report import CheckStatus
from trigbase.core.spread import zpread_poly


@pytest.fixture(scope="module")
def table_60():
    return factor_table(60)


class TestFactorTable:
    """Tests for Φ_d and ψ_d."""

    def test_first_factors(self, table_60):
        assert table_60.phi[1] == IntPoly((0, 1))
        assert table_60.phi[2] == IntPoly((4, -1))
        assert table_60.phi[6] == IntPoly((1, -1)) ** 2
        assert table_60.phi[12] == IntPoly((1, -4, 1)) ** 2

    @pytest.mark.parametrize("d", [5, 9, 14])
    def test_known_psi(self, table_60, d):
        assert table_60.psi[d] == IntPoly(KNOWN_PSI[d])

    def test_no_psi_below_three(self, table_60):
        assert 1 not in table_60.psi
        assert 2 not in table_60.psi

    def test_psi_11_at_one(self, table_60):
        assert table_60.psi[11].evaluate(1) == -1

    def test_product_over_divisors(self, table_60):
        assert table_60.product_over_divisors(12) == zpread_poly(12)

    def test_phi_of_outside_table(self, table_60):
        with pytest.raises(KeyError):
            table_60.phi_of(61)

    def test_rows(self):
        rows = factor_table(4).rows()
        assert rows == [(1, "x"), (2, "4-x"), (3, "(3-x)^2"), (4, "(2-x)^2")]

    def test_bad_max_n(self):
        with pytest.raises(ValueError):
            build_factor_table(0)

    def test_division_failure_is_a_violation(self, mocker):
        mocker.patch.object(factor, "poly_exact_div", side_effect=NotDivisible("remainder x"))
        with pytest.raises(ConjectureViolation) as exc:
            build_factor_table(3)
        assert exc.value.n == 1

    def test_non_square_is_a_violation(self):
        table = FactorTable(3, phi={1: IntPoly((0, 1)), 2: IntPoly((4, -1)), 3: IntPoly((9, -6, 2))})
        with pytest.raises(ConjectureViolation) as exc:
            extract_psi(table)
        assert exc.value.n == 3
        assert exc.value.reason == "not a perfect square"


class TestBattery:
    """Tests for the conjecture battery."""

    def test_passes_through_60(self, table_60):
        battery = run_conjecture_battery(table_60)
        assert battery.passed, battery.violations
        assert battery.violations == []

    @pytest.mark.slow
    def test_passes_through_300(self):
        battery = run_conjecture_battery(factor_table(300))
        assert battery.passed, battery.violations
        assert battery.max_n == 300

    def test_irreducibility_not_tested(self, table_60):
        battery = run_conjecture_battery(table_60)
        statuses = {c.name: c.status for c in battery.checks}
        assert statuses["irreducibility"] is CheckStatus.NOT_TESTED
        assert statuses["reconstruction"] is CheckStatus.PASSED

    def test_reflection(self, table_60):
        report, via_two_minus_x = reflection_check(table_60)
        assert report.passed
        # Φ_6 = Φ_3(4-x) but Φ_3 != Φ_6(2-x)
        assert via_two_minus_x[3] is False

    def test_reflection_summary_line(self, table_60):
        lines = run_conjecture_battery(table_60).summary_lines()
        assert lines[-1].startswith("reflection Φ_p(x) = Φ_2p(2-x)")

    def test_requires_psi(self):
        with pytest.raises(ValueError):
            run_conjecture_battery(build_factor_table(5))

    def test_violation_is_collected(self, table_60, mocker):
        mocker.patch.dict(factor.KNOWN_PSI, {5: (5, -5, 2)})
        battery = run_conjecture_battery(table_60)
        assert not battery.passed
        assert battery.violations[0].startswith("known_table: ψ_5")


class TestFixedPoints:
    """Tests for the golden-ratio fixed points."""

    def test_through_200(self):
        report = golden_fixed_points(200)
        assert report.passed
        assert report.hits["Z_n(2) = 2"] == {0: 0, 1: 100}
        assert report.hits["Z_n(2+φ) = 3-φ"][2] == 40

    @pytest.mark.slow
    def test_through_1000(self):
        assert golden_fixed_points(1000).passed

    def test_wrong_residues_are_violations(self):
        item = FixedPointItem("Z_n(3) = 3", QuadInt(3), QuadInt(3), 3, (1,))
        report = golden_fixed_points(6, items=[item])
        assert [v.n for v in report.violations] == [2, 5]

    def test_items(self):
        assert len(FIXED_POINT_ITEMS) == 4

    def test_bad_max_n(self):
        with pytest.raises(ValueError):
            golden_fixed_points(0)


class TestReports:
    """Tests for the exploratory reports."""

    def test_pyramidal_column_psi_9(self, table_60):
        rows = {row.d: row for row in pyramidal_column_report(table_60)}
        assert rows[9].column_index == 6
        assert rows[9].psi_coeffs == (1, 6, 9, 3)
        assert rows[9].column == (1, 6, 9, 2)
        assert rows[9].mismatches == (3,)

    def test_phi_evaluations(self):
        evals = phi_evaluations(factor_table(4))
        assert evals[1] == [0, 1, 2, 3, 4]
        assert evals[2] == [4, 3, 2, 1, 0]
        assert evals[3] == [9, 4, 1, 0, 1]
