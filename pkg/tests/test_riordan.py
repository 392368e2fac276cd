"""Unit tests for the Riordan group."""

from fractions import Fraction

import pytest

from trigbase.core import riordan
from trigbase.core.combinatorics import catalan_triangle_even_matrix, catalan_triangle_odd_matrix
from trigbase.core.errors import CheckFailed, NotInvertible, NotProper, OrderMismatch
from trigbase.core.riordan import (
    NamedArray,
    RiordanArray,
    binomial_series_identity,
    bc2_derivative_check,
    catalan_triangle_view_check,
    corollary_check,
    inversion_theorem_check,
    lagrange_invert,
    lagrange_oracle_check,
    named_array,
    named_series,
    product_lemma_check,
    reversion_by_iteration,
    riordan_inverse,
    riordan_matrix,
    suite_checks,
    zpread_riordan_check,
)
from trigbase.core.series import TruncSeries

ORDER = 12


def _pascal(order: int) -> RiordanArray:
    geometric = TruncSeries.geometric(order)
    return RiordanArray(geometric, TruncSeries.x(order) * geometric)


class TestRiordanArray:
    """Tests for construction and the group law."""

    def test_f_must_vanish_at_zero(self):
        with pytest.raises(NotInvertible):
            RiordanArray(TruncSeries.one(4), TruncSeries((1, 1), 4))

    def test_orders_must_agree(self):
        with pytest.raises(OrderMismatch):
            RiordanArray(TruncSeries.one(4), TruncSeries.x(5))

    def test_pascal_matrix(self):
        rows = riordan_matrix(_pascal(6), 5)
        assert rows[4] == [1, 4, 6, 4, 1]
        assert rows[2] == [1, 2, 1, 0, 0]

    def test_pascal_inverse_alternates(self):
        inverse = riordan_inverse(_pascal(6))
        assert riordan_matrix(inverse, 4)[3] == [-1, 3, -3, 1]

    def test_identity_is_neutral(self):
        pascal = _pascal(ORDER)
        assert pascal * RiordanArray.identity(ORDER) == pascal
        assert RiordanArray.identity(ORDER) * pascal == pascal

    def test_fundamental_theorem(self):
        # (1/(1-x), x) sums partial sums
        partial_sums = RiordanArray(TruncSeries.geometric(6), TruncSeries.x(6))
        got = partial_sums.apply(TruncSeries((1, 2, 3), 6))
        assert list(got.coeffs[:5]) == [1, 3, 6, 6, 6]

    def test_not_proper(self):
        improper = RiordanArray(TruncSeries.x(4), TruncSeries.x(4))
        with pytest.raises(NotProper):
            riordan_inverse(improper)

    def test_matrix_needs_enough_order(self):
        with pytest.raises(OrderMismatch):
            riordan_matrix(_pascal(3), 6)


class TestLagrangeInversion:
    """Tests for compositional inverses."""

    def test_x_over_one_plus_x_squared(self):
        x = TruncSeries.x(8)
        plus = TruncSeries((1, 1), 8)
        inverse = lagrange_invert(x / (plus * plus))
        assert list(inverse.coeffs[:5]) == [0, 1, 2, 5, 14]

    def test_agrees_with_iteration(self):
        f = TruncSeries((0, 1, -1), 10)
        assert lagrange_invert(f) == reversion_by_iteration(f)

    def test_rejects_zero_linear_term(self):
        with pytest.raises(NotInvertible):
            lagrange_invert(TruncSeries((0, 0, 1), 6))

    def test_rejects_constant_term(self):
        with pytest.raises(NotInvertible):
            reversion_by_iteration(TruncSeries((1, 1), 6))


class TestNamedArrays:
    """Tests for the named series and arrays."""

    def test_named_series(self):
        series = named_series(6)
        assert list(series["C"].series.coeffs[:5]) == [1, 1, 2, 5, 14]
        assert list(series["B"].series.coeffs[:5]) == [1, 2, 6, 20, 70]
        assert list(series["BC"].series.coeffs[:3]) == [1, 3, 10]

    def test_catalan_odd_is_b_odd(self):
        assert riordan_matrix(named_array(NamedArray.CATALAN_ODD, 9), 10) == catalan_triangle_odd_matrix(10)

    def test_catalan_even_is_b_even(self):
        assert riordan_matrix(named_array("catalan_even", 9), 10) == catalan_triangle_even_matrix(10)

    def test_pyramidal_even_inverts_catalan_odd(self):
        # (1-x)/(1+x) paired with x/(1+x)^2 undoes (B, xC^2)
        product = named_array(NamedArray.CENTRAL, ORDER) * named_array(NamedArray.PYRAMIDAL_EVEN, ORDER)
        assert product == RiordanArray.identity(ORDER)

    def test_spread_t_first_column(self):
        column = [row[0] for row in riordan_matrix(named_array(NamedArray.SPREAD_T, 6), 5)]
        assert column == [1, 4, 9, 16, 25]

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            named_array("nope", 4)


class TestChecks:
    """The riordan suite passes at moderate order."""

    @pytest.mark.parametrize("check", [
        lambda: inversion_theorem_check(ORDER),
        lambda: product_lemma_check(ORDER),
        lambda: corollary_check(10),
        lambda: catalan_triangle_view_check(10),
        lambda: bc2_derivative_check(ORDER),
        lambda: lagrange_oracle_check(10),
        lambda: zpread_riordan_check(ORDER),
    ])
    def test_passes(self, check):
        assert check().passed

    @pytest.mark.parametrize("n", [-1, 0, 1, 2, 3])
    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_binomial_series_identity(self, n, m):
        assert binomial_series_identity(n, m, ORDER).passed

    def test_binomial_series_identity_bad_m(self):
        with pytest.raises(ValueError):
            binomial_series_identity(0, -1, ORDER)

    def test_suite_runs_every_check(self):
        for name, check in suite_checks(8):
            assert check().passed, name

    def test_wrong_inverse_is_reported(self, mocker):
        real = riordan.inversion_pairs

        def broken(order):
            pairs = real(order)
            label, array, claimed = pairs[0]
            pairs[0] = (label, array, RiordanArray(claimed.g * Fraction(2), claimed.f))
            return pairs

        mocker.patch.object(riordan, "inversion_pairs", side_effect=broken)
        with pytest.raises(CheckFailed) as exc:
            inversion_theorem_check(6)
        assert exc.value.report.failures[0].where.startswith("(C, xC^2) * claimed inverse g")

    def test_product_lemma_covers_every_pair(self):
        report = product_lemma_check(ORDER)
        # 4 arrays give 10 unordered pairs, each compared on g and f
        assert report.checked == 20

    def test_product_lemma_sees_each_array(self, mocker):
        real = riordan.inversion_pairs

        def broken(order):
            pairs = real(order)
            label, array, claimed = pairs[3]
            pairs[3] = (label, array, RiordanArray(claimed.g * Fraction(2), claimed.f))
            return pairs

        mocker.patch.object(riordan, "inversion_pairs", side_effect=broken)
        with pytest.raises(CheckFailed) as exc:
            product_lemma_check(6)
        failures = [f.where for f in exc.value.report.failures]
        assert failures[0].startswith("(C, xC^2)x(BC, xC^2) g")
        assert any(w.startswith("(BC, xC^2)x(BC, xC^2) g") for w in failures)
