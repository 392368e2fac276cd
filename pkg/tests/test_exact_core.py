"""Unit tests for the exact arithmetic core."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigbase.core.errors import (
    CheckFailed,
    ConstantTermZero,
    InnerConstantNonzero,
    NotASquare,
    NotDivisible,
    NonIntegerCoefficient,
)
from trigbase.core.laurent import Z, Z_INV, LaurentPoly, laurent_constant_term
from trigbase.core.numbers import GaussianRational, QuadInt
from trigbase.core.polynomial import IntPoly, RatPoly, poly_exact_div, poly_sqrt
from trigbase.core.report import CheckReport, CheckStatus
from trigbase.core.series import PolySeries, TruncSeries, series_mul_inverse
from trigbase.utils.cache import RecurrenceCache
from trigbase.utils.matrix import bareiss_det, first_mismatch, identity, mat_mul, transpose

quad_ints = st.builds(QuadInt, st.integers(-60, 60), st.integers(-60, 60))
small_polys = st.lists(st.integers(-20, 20), min_size=1, max_size=6).map(IntPoly)


class TestGaussianRational:
    """Tests for Q(i)."""

    def test_i_squared(self):
        i = GaussianRational.i()
        assert i * i == -1

    def test_division(self):
        z = GaussianRational(1, 1)
        assert z / z == 1
        assert z * z.conjugate() == 2

    def test_real_detection(self):
        assert GaussianRational(Fraction(3, 2)).is_real()
        assert not GaussianRational(0, 1).is_real()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)


class TestQuadInt:
    """Tests for Z[phi]."""

    def test_golden_identity(self):
        phi = QuadInt.phi()
        assert phi * phi == phi + 1

    def test_square_of_two_plus_phi(self):
        assert QuadInt(2, 1) ** 2 == QuadInt(5, 5)

    def test_norm(self):
        assert QuadInt(2, 1).norm() == 5
        assert QuadInt.phi().norm() == -1

    def test_integer_comparison(self):
        assert QuadInt(3, 0) == 3
        assert QuadInt(3, 1) != 3

    @given(quad_ints, quad_ints, quad_ints)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @given(quad_ints, quad_ints)
    def test_norm_is_multiplicative(self, a, b):
        assert (a * b).norm() == a.norm() * b.norm()


class TestIntPoly:
    """Tests for dense integer polynomials."""

    def test_multiplication(self):
        assert IntPoly((1, 2)) * IntPoly((1, 2)) == IntPoly((1, 4, 4))

    def test_trailing_zeros_trimmed(self):
        assert IntPoly((1, 0, 0)).degree == 0
        assert IntPoly(()).is_zero()

    def test_evaluate(self):
        assert IntPoly((1, 2, 3)).evaluate(2) == 17
        assert IntPoly((1, 2, 3))(Fraction(1, 2)) == Fraction(11, 4)

    def test_compose(self):
        assert IntPoly((0, 0, 1)).compose(IntPoly((1, 1))) == IntPoly((1, 2, 1))

    def test_scale_variable(self):
        scaled = IntPoly((0, 0, 4)).scale_variable(Fraction(1, 2))
        assert isinstance(scaled, RatPoly)
        assert scaled == IntPoly((0, 0, 1))

    def test_to_int_rejects_fractions(self):
        with pytest.raises(NonIntegerCoefficient):
            RatPoly((Fraction(1, 2),)).to_int()

    def test_format(self):
        assert str(IntPoly((5, -5, 1))) == "5-5x+x^2"
        assert str(IntPoly((0, 1))) == "x"
        assert str(IntPoly(())) == "0"

    @given(small_polys, small_polys)
    def test_exact_division_inverts_multiplication(self, p, q):
        if q.is_zero():
            return
        assert poly_exact_div(p * q, q) == p


class TestExactDivision:
    """Tests for poly_exact_div."""

    def test_divides(self):
        assert poly_exact_div(IntPoly((1, 4, 4)), IntPoly((1, 2))) == IntPoly((1, 2))

    def test_remainder(self):
        with pytest.raises(NotDivisible):
            poly_exact_div(IntPoly((1, 0, 1)), IntPoly((1, 1)))

    def test_non_integer_quotient(self):
        with pytest.raises(NotDivisible):
            poly_exact_div(IntPoly((1, 1)), IntPoly((0, 2)))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_exact_div(IntPoly((1,)), IntPoly(()))


class TestPolySqrt:
    """Tests for poly_sqrt."""

    def test_square(self):
        assert poly_sqrt(IntPoly((9, -6, 1))) == IntPoly((3, -1))

    def test_positive_constant_term(self):
        root = poly_sqrt(IntPoly((3, -1)) * IntPoly((3, -1)))
        assert root.coeff(0) == 3

    @pytest.mark.parametrize("coeffs", [(2, 0, 1), (0, 1), (1, 1, 1), (-1, 0, 1)])
    def test_not_a_square(self, coeffs):
        with pytest.raises(NotASquare):
            poly_sqrt(IntPoly(coeffs))

    @given(small_polys)
    def test_round_trip(self, p):
        if p.is_zero():
            return
        root = poly_sqrt(p * p)
        assert root * root == p * p


class TestLaurentPoly:
    """Tests for Laurent polynomials in z."""

    def test_kappa_squared(self):
        assert (Z + Z_INV) ** 2 == LaurentPoly({2: 1, 0: 2, -2: 1})

    def test_constant_term(self):
        assert laurent_constant_term((Z + Z_INV) ** 4) == 6

    def test_sine_expansion_is_real_after_squaring(self):
        sigma = (Z - Z_INV) * GaussianRational(0, -1)
        assert (sigma * sigma).is_real()
        assert not sigma.is_real()

    def test_zero_coefficients_dropped(self):
        assert (Z - Z).is_zero()

    def test_invert_variable(self):
        assert (Z * 2 + 1).invert_variable() == Z_INV * 2 + 1


class TestTruncSeries:
    """Tests for truncated power series."""

    def test_geometric_inverse(self):
        assert TruncSeries.geometric(6) * TruncSeries((1, -1), 6) == TruncSeries.one(6)

    def test_multiplicative_inverse(self):
        assert series_mul_inverse(TruncSeries((1, -1), 6)) == TruncSeries.geometric(6)

    def test_inverse_needs_constant_term(self):
        with pytest.raises(ConstantTermZero):
            series_mul_inverse(TruncSeries((0, 1), 4))

    def test_compose_needs_zero_inner_constant(self):
        with pytest.raises(InnerConstantNonzero):
            TruncSeries.geometric(4).compose(TruncSeries((1, 1), 4))

    def test_compose(self):
        # 1/(1-x) at 2x
        got = TruncSeries.geometric(5).compose(TruncSeries((0, 2), 5))
        assert got == TruncSeries.geometric(5, 2)

    def test_orders_combine_to_minimum(self):
        assert (TruncSeries.one(3) + TruncSeries.one(7)).order == 3

    def test_first_difference(self):
        a = TruncSeries((1, 2, 3), 4)
        b = TruncSeries((1, 2, 4), 4)
        assert a.first_difference(b) == 2
        assert a.first_difference(a) is None


class TestPolySeries:
    """Tests for series with polynomial coefficients."""

    def test_chebyshev_u_generating_function(self):
        order = 6
        denom = PolySeries([1, IntPoly((0, -2)), 1], order)
        u = [IntPoly((1,)), IntPoly((0, 2))]
        while len(u) <= order:
            u.append(IntPoly((0, 2)) * u[-1] - u[-2])
        assert (denom * PolySeries(u, order)).first_difference(PolySeries([1], order)) is None


class TestCheckReport:
    """Tests for CheckReport bookkeeping."""

    def test_pass(self):
        report = CheckReport("demo")
        report.expect_equal("a", 1, 1)
        assert report.finish() is report
        assert report.checked == 1

    def test_failure_raises_with_report(self):
        report = CheckReport("demo")
        report.expect_equal("a", 1, 2)
        with pytest.raises(CheckFailed) as exc:
            report.finish()
        assert exc.value.report.failures[0].where == "a"
        assert "expected 1, got 2" in str(exc.value)

    def test_merge_prefixes_names(self):
        outer, inner = CheckReport("outer"), CheckReport("inner")
        inner.fail("x")
        outer.merge(inner)
        assert outer.status is CheckStatus.FAILED
        assert outer.failures[0].where == "inner: x"


class TestRecurrenceCache:
    """Tests for the memoized recurrence."""

    def test_fibonacci(self):
        cache = RecurrenceCache("fib", [0, 1], lambda n, known: known[n - 1] + known[n - 2])
        assert cache.get(30) == 832040
        assert cache.prefix(5) == [0, 1, 1, 2, 3]

    def test_negative_index(self):
        cache = RecurrenceCache("fib", [0, 1], lambda n, known: known[n - 1] + known[n - 2])
        with pytest.raises(IndexError):
            cache.get(-1)


class TestMatrixHelpers:
    """Tests for the small exact matrix helpers."""

    def test_mat_mul_identity(self):
        a = [[1, 2], [3, 4]]
        assert mat_mul(a, identity(2)) == a
        assert transpose(a) == [[1, 3], [2, 4]]

    def test_first_mismatch(self):
        assert first_mismatch([[1, 2]], [[1, 3]]) == (0, 1, 2, 3)
        assert first_mismatch([[1]], [[1]]) is None

    def test_bareiss(self):
        assert bareiss_det([[1, 2, 6], [2, 2, 4], [6, 4, 6]]) == -4
