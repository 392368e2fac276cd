"""Unit tests for spread and zpread polynomials."""

from fractions import Fraction

import pytest

from trigbase.core import spread
from trigbase.core.errors import CheckFailed
from trigbase.core.numbers import QuadInt
from trigbase.core.polynomial import IntPoly
from trigbase.core.spread import (
    SpreadFamily,
    cigler_check,
    composition_check,
    fixed_ends_check,
    hirschhorn_gf_check,
    mnemonic_spread_check,
    mnemonic_spread_matrix,
    proposition_check,
    rescaling_check,
    shuffle_inverse_check,
    shuffle_laurent_check,
    shuffle_matrix,
    spread_matrix,
    spread_poly,
    spread_riordan_check,
    spreadometric_check,
    sqsin_reduction_check,
    suite_checks,
    zpread_from_spread,
    zpread_matrix,
    zpread_matrix_check,
    zpread_poly,
    zpread_values,
)


class TestPolynomials:
    """Tests for S_n and Z_n."""

    def test_spread(self):
        assert spread_poly(0) == IntPoly.zero()
        assert spread_poly(1) == IntPoly((0, 1))
        assert spread_poly(2) == IntPoly((0, 4, -4))
        assert spread_poly(3) == IntPoly((0, 9, -24, 16))

    def test_zpread(self):
        assert zpread_poly(2) == IntPoly((0, 4, -1))
        assert zpread_poly(3) == IntPoly((0, 9, -6, 1))

    def test_rescaling(self):
        for n in range(12):
            assert zpread_from_spread(n) == zpread_poly(n)

    def test_spread_at_quarter_angles(self):
        # sin^2(n pi/6) with sin^2(pi/6) = 1/4
        values = [spread_poly(n).evaluate(Fraction(1, 4)) for n in range(7)]
        assert values == [0, Fraction(1, 4), Fraction(3, 4), 1, Fraction(3, 4), Fraction(1, 4), 0]

    def test_negative(self):
        with pytest.raises(ValueError):
            zpread_poly(-1)


class TestValues:
    """Tests for the value recursion."""

    def test_integer_point(self):
        assert zpread_values(2, 4) == [0, 2, 4, 2]

    def test_golden_point(self):
        values = zpread_values(QuadInt(2, 1), 6)
        assert values[2] == QuadInt(3, -1)
        assert values[5] == 0

    def test_agrees_with_polynomials(self):
        point = Fraction(3, 7)
        values = zpread_values(point, 10)
        assert values == [zpread_poly(n).evaluate(point) for n in range(10)]

    def test_empty(self):
        assert zpread_values(1, 0) == []


class TestMatrices:
    """Tests for the S, Z and shuffle matrices."""

    def test_zpread_matrix(self):
        assert zpread_matrix(3) == [[1, 4, 9], [0, -1, -6], [0, 0, 1]]

    def test_spread_matrix(self):
        assert spread_matrix(2) == [[1, 4], [0, -4]]

    def test_family_matrix(self):
        assert SpreadFamily.build("Z", 4).matrix(3) == zpread_matrix(3)

    def test_shuffle_matrix(self):
        assert shuffle_matrix(2) == [[1, 4], [0, -1]]

    @pytest.mark.parametrize("size", [1, 4, 9])
    def test_mnemonic(self, size):
        assert mnemonic_spread_matrix(size) == spread_matrix(size)
        assert mnemonic_spread_matrix(size, row_sign=-1) == zpread_matrix(size)

    def test_bad_size(self):
        with pytest.raises(ValueError):
            spread_matrix(0)


class TestChecks:
    """The spread suite passes at moderate order."""

    @pytest.mark.parametrize("check", [
        lambda: zpread_matrix_check(10),
        lambda: rescaling_check(20),
        lambda: proposition_check(20),
        lambda: hirschhorn_gf_check(15),
        lambda: shuffle_inverse_check(10),
        lambda: shuffle_laurent_check(8),
        lambda: spreadometric_check(10),
        lambda: spread_riordan_check(10),
        lambda: mnemonic_spread_check(10),
        lambda: composition_check(6),
        lambda: fixed_ends_check(30),
    ])
    def test_passes(self, check):
        assert check().passed

    @pytest.mark.parametrize("n", range(1, 12))
    def test_per_n_checks(self, n):
        assert sqsin_reduction_check(n).passed
        assert cigler_check(n).passed

    def test_spread_riordan_needs_size(self):
        with pytest.raises(ValueError):
            spread_riordan_check(1)

    def test_suite_runs(self):
        for name, check in suite_checks(6):
            assert check().passed, name

    def test_gf_check_rejects_perturbed_s4(self, mocker):
        real = spread.spread_poly
        mocker.patch.object(
            spread, "spread_poly",
            side_effect=lambda n: real(n) + IntPoly.one() if n == 4 else real(n),
        )
        with pytest.raises(CheckFailed) as exc:
            hirschhorn_gf_check(8)
        assert exc.value.report.failures[0].where == "generating function at t^4"
