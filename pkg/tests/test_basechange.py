"""Unit tests for trigonometric base changes."""

from fractions import Fraction

import pytest

from trigbase.core import basechange, combinatorics
from trigbase.core.basechange import (
    BasisElement,
    PowerKind,
    TransitionKind,
    TrigBasis,
    closed_series_checks,
    cos_power_to_nu,
    kappa_power_nu_rows,
    laurent_expand,
    leading_exponent,
    multiple_angle_laurent,
    nu_expansion_check,
    oracle_equivalence_check,
    orthogonality_check,
    partner,
    power_reduce,
    power_reduce_from_laurent,
    riordan_series_check,
    riordan_transpose_check,
    round_trip_check,
    sine_transition_check,
    suite_checks,
    transition_laurent_check,
    transition_matrix,
    verify_mutual_inverse,
)
from trigbase.core.errors import CheckFailed
from trigbase.core.laurent import Z, Z_INV, LaurentPoly
from trigbase.core.polynomial import IntPoly
from trigbase.core.series import PolySeries

SIZE = 12


class TestBasisElements:
    """Tests for the Laurent representatives."""

    def test_constant_one(self):
        assert laurent_expand(BasisElement(TrigBasis.KAPPA_MULTIPLE, 0)) == LaurentPoly.constant(1)

    def test_nu(self):
        assert laurent_expand(BasisElement(TrigBasis.NU, 2)) == Z * Z + 1 + Z_INV * Z_INV

    def test_sigma_squared_is_shuffle(self):
        sigma2 = laurent_expand(BasisElement(TrigBasis.SIGMA_POWER, 2))
        assert sigma2 == laurent_expand(BasisElement(TrigBasis.SHUFFLE_MULTIPLE, 1))
        assert sigma2 == laurent_expand(BasisElement(TrigBasis.SHUFFLE_POWER, 1))

    def test_leading_exponent(self):
        assert leading_exponent(BasisElement(TrigBasis.KAPPA_POWER, 5)) == 5
        assert leading_exponent(BasisElement(TrigBasis.SHUFFLE_MULTIPLE, 3)) == 6

    def test_str(self):
        assert str(BasisElement(TrigBasis.NU, 4)) == "nu_4"

    def test_negative_index(self):
        with pytest.raises(ValueError):
            BasisElement(TrigBasis.NU, -1)


class TestPowerReduction:
    """Tests for powers of cos and sin as multiple angles."""

    @pytest.mark.parametrize("kind,n,expected", [
        ("cos-even", 1, [1, 1]),
        ("cos-odd", 1, [3, 1]),
        ("sin-odd", 1, [3, -1]),
        ("sin-even", 1, [1, -1]),
        ("cos-even", 2, [3, 4, 1]),
        ("cos-odd", 0, [1]),
    ])
    def test_small_cases(self, kind, n, expected):
        assert power_reduce(kind, n) == expected

    def test_center_is_half_central_binomial(self):
        assert power_reduce(PowerKind.COS_EVEN, 3)[0] == Fraction(20, 2)

    def test_even_kinds_need_positive_n(self):
        with pytest.raises(ValueError):
            power_reduce("cos-even", 0)
        with pytest.raises(ValueError):
            power_reduce_from_laurent("sin-even", 0)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            power_reduce("tan-odd", 1)

    @pytest.mark.parametrize("kind", list(PowerKind))
    def test_laurent_reading_agrees(self, kind):
        for n in range(1, 10):
            assert power_reduce_from_laurent(kind, n) == power_reduce(kind, n)

    def test_multiple_angle_laurent(self):
        # 4 cos^3 t = 3 cos t + cos 3t, with kappa = 2cos
        kappa = Z + Z_INV
        assert multiple_angle_laurent("cos-odd", [3, 1]) * 2 == kappa**3

    def test_cos_power_to_nu(self):
        assert cos_power_to_nu("even", 2) == [2, 3, 1]
        assert cos_power_to_nu("odd", 1) == [1]
        with pytest.raises(ValueError):
            cos_power_to_nu("odd", 0)


class TestTransitionMatrices:
    """Tests for the eight transition matrices."""

    def test_inv2_block(self):
        assert transition_matrix("inv2", 3).rows() == [[1, 2, 6], [0, 1, 4], [0, 0, 1]]

    def test_inv1_block(self):
        assert transition_matrix("inv1", 3).rows() == [[1, -2, 2], [0, 1, -4], [0, 0, 1]]

    @pytest.mark.parametrize("which", list(TransitionKind))
    def test_unitriangular(self, which):
        rows = transition_matrix(which, 8).rows()
        for i, row in enumerate(rows):
            assert row[i] == 1
            assert all(v == 0 for v in row[:i])

    def test_partners_pair_up(self):
        for which in TransitionKind:
            assert partner(partner(which)) is which

    def test_bad_size(self):
        with pytest.raises(ValueError):
            transition_matrix("inv1", 0)

    def test_elements(self):
        matrix = transition_matrix("inv3", 4)
        assert matrix.source_element(2) == BasisElement(TrigBasis.KAPPA_POWER, 5)
        assert matrix.target_element(0) == BasisElement(TrigBasis.KAPPA_MULTIPLE, 1)


class TestChecks:
    """The basechange suite passes at moderate order."""

    @pytest.mark.parametrize("which", list(TransitionKind))
    def test_mutual_inverse(self, which):
        assert verify_mutual_inverse(which, SIZE).passed

    @pytest.mark.parametrize("which", list(TransitionKind))
    def test_laurent_columns(self, which):
        assert transition_laurent_check(which, SIZE).passed

    @pytest.mark.parametrize("check", [
        lambda: sine_transition_check(SIZE),
        lambda: oracle_equivalence_check(SIZE),
        lambda: nu_expansion_check(SIZE),
        lambda: orthogonality_check(SIZE),
        lambda: round_trip_check(SIZE),
        lambda: riordan_transpose_check(SIZE),
        lambda: riordan_series_check(SIZE),
        lambda: closed_series_checks(SIZE),
    ])
    def test_passes(self, check):
        assert check().passed

    def test_suite_names_unique(self):
        names = [name for name, _ in suite_checks(6)]
        assert len(names) == len(set(names))
        assert "closed_series_checks" in names

    def test_closed_series_rejects_wrong_denominator(self, mocker):
        mocker.patch.object(
            basechange, "_closed_series_denominator",
            side_effect=lambda order: PolySeries([1, IntPoly((-2, 0, -4)), 1], order),
        )
        with pytest.raises(CheckFailed) as exc:
            closed_series_checks(5)
        assert exc.value.report.failures[0].where == "item 1 at x^1"

    def test_closed_series_order(self):
        with pytest.raises(ValueError):
            closed_series_checks(0)

    def test_kappa_power_nu_rows(self):
        # kappa^2 = nu_0 + nu_2, kappa^3 = 2 nu_1 + nu_3
        assert kappa_power_nu_rows(0, 3)[1] == [1, 1, 0]
        assert kappa_power_nu_rows(1, 3)[1] == [2, 1, 0]
        assert kappa_power_nu_rows(0, 4)[3] == [5, 9, 5, 1]

    def test_kappa_power_nu_rows_offset(self):
        with pytest.raises(ValueError):
            kappa_power_nu_rows(2, 3)

    def test_mutual_inverse_rejects_wrong_triangle(self, mocker):
        real = combinatorics.catalan_triangle_odd

        def broken(i, j):
            return real(i, j) + (1 if (i, j) == (3, 1) else 0)

        mocker.patch.object(combinatorics, "catalan_triangle_odd", side_effect=broken)
        mocker.patch.object(basechange, "catalan_triangle_odd", side_effect=broken)
        with pytest.raises(CheckFailed) as exc:
            verify_mutual_inverse(TransitionKind.PYRCAT1, 6)
        wheres = [f.where for f in exc.value.report.failures]
        assert any(w.startswith("B^odd vs Laurent") for w in wheres)
        assert any(w.startswith("pyrcat1^T vs Laurent") for w in wheres)
