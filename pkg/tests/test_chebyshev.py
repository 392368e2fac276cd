"""Unit tests for the Chebyshev families."""

from fractions import Fraction

import pytest

from trigbase.core import chebyshev
from trigbase.core.chebyshev import (
    ChebKind,
    brace,
    brace_check,
    brace_doubled,
    chebyshev_matrix,
    chebyshev_t,
    chebyshev_u,
    closed_form_check,
    depowering_check,
    gf_check_chebyshev,
    mnemonic_check,
    mnemonic_p_matrix,
    p_gf_sign_cleansed_check,
    p_poly,
    parity_check,
    recursion_identity_check,
    suite_checks,
    t_closed_form,
    trig_values_check,
    u_closed_form,
    v_poly,
    verify_trig_values,
)
from trigbase.core.errors import CheckFailed
from trigbase.core.polynomial import IntPoly


class TestFamilies:
    """Tests for T, U, P and V."""

    def test_t(self):
        assert chebyshev_t(0) == IntPoly((1,))
        assert chebyshev_t(2) == IntPoly((-1, 0, 2))
        assert chebyshev_t(3) == IntPoly((0, -3, 0, 4))
        assert chebyshev_t(6) == IntPoly((-1, 0, 18, 0, -48, 0, 32))

    def test_u(self):
        assert chebyshev_u(1) == IntPoly((0, 2))
        assert chebyshev_u(2) == IntPoly((-1, 0, 4))

    def test_p_and_v(self):
        assert p_poly(0) == IntPoly((1,))
        assert p_poly(2) == IntPoly((-2, 0, 1))
        assert p_poly(3) == IntPoly((0, -3, 0, 1))
        assert v_poly(2) == IntPoly((-1, 0, 1))

    def test_negative_index(self):
        with pytest.raises(ValueError):
            chebyshev_t(-1)

    @pytest.mark.parametrize("n", range(30))
    def test_closed_forms(self, n):
        assert t_closed_form(n) == chebyshev_t(n)
        assert u_closed_form(n) == chebyshev_u(n)

    def test_values_at_one(self):
        for n in range(20):
            assert chebyshev_t(n).evaluate(1) == 1
            assert chebyshev_u(n).evaluate(1) == n + 1


class TestMatrices:
    """Tests for coefficient matrices and the mnemonic construction."""

    def test_t_matrix_block(self):
        rows = chebyshev_matrix(ChebKind.T, 5).rows()
        assert rows == [
            [1, 0, -1, 0, 1],
            [0, 1, 0, -3, 0],
            [0, 0, 2, 0, -8],
            [0, 0, 0, 4, 0],
            [0, 0, 0, 0, 8],
        ]

    def test_mnemonic_p_matches(self):
        assert mnemonic_p_matrix(12).rows() == chebyshev_matrix("P", 12).rows()


class TestBrace:
    """Tests for brace numbers."""

    def test_corner(self):
        assert brace(0, 0) == Fraction(1, 2)

    def test_entry_of_t(self):
        # {n;k} = [x^n] T_(n+2k)
        assert brace(4, 1) == -48
        assert brace_doubled(4, 1) == -96
        assert brace(2, 1) == chebyshev_t(4).coeff(2)

    def test_negative(self):
        with pytest.raises(ValueError):
            brace(-1, 0)


class TestTrigValues:
    """Tests for T_n(cos t) = cos nt and the sine companions."""

    @pytest.mark.parametrize("n", range(0, 10))
    def test_verify_trig_values(self, n):
        assert verify_trig_values(n).passed


class TestChecks:
    """The suite checks pass at moderate order."""

    @pytest.mark.parametrize("check", [
        lambda: gf_check_chebyshev(20),
        lambda: p_gf_sign_cleansed_check(20),
        lambda: closed_form_check(20),
        lambda: parity_check(20),
        lambda: depowering_check(20),
        lambda: recursion_identity_check(20),
        lambda: mnemonic_check(15),
        lambda: brace_check(8, 8),
        lambda: trig_values_check(8),
    ])
    def test_passes(self, check):
        assert check().passed

    def test_suite_names(self):
        names = [name for name, _ in suite_checks(5)]
        assert "gf_check_chebyshev" in names
        assert len(names) == len(set(names))

    def test_gf_check_rejects_sign_bug(self, mocker):
        real_t = chebyshev.chebyshev_t
        mocker.patch.object(chebyshev, "chebyshev_t", side_effect=lambda n: -real_t(n) if n == 3 else real_t(n))
        with pytest.raises(CheckFailed) as exc:
            gf_check_chebyshev(5)
        assert exc.value.report.name == "gf_check_chebyshev"
        assert exc.value.report.failures[0].where == "T generating function at t^3"

    def test_order_must_be_positive(self):
        with pytest.raises(ValueError):
            gf_check_chebyshev(0)


class TestLongRanges:
    """The recurrence, closed forms and trig values agree far out."""

    @pytest.mark.slow
    def test_closed_forms_through_200(self):
        report = closed_form_check(200)
        assert report.passed
        assert report.checked == 2 * 201

    @pytest.mark.slow
    def test_parity_through_200(self):
        report = parity_check(200)
        assert report.passed
        assert report.checked == len(ChebKind) * 201

    @pytest.mark.slow
    def test_trig_values_through_100(self):
        assert trig_values_check(100).passed
