"""Truncated formal power series.

``TruncSeries`` carries rational coefficients up to an explicit inclusive
order. Binary operations between series of different orders truncate to
the smaller order, so no result ever claims coefficients it does not know.

``PolySeries`` is a series in one variable whose coefficients are
polynomials in another; it carries the bivariate generating functions.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .errors import ConstantTermZero, InnerConstantNonzero, OrderMismatch
from .polynomial import IntPoly, RatPoly, _DensePoly

logger = logging.getLogger(__name__)


class TruncSeries:
    """Power series known exactly through x**order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Any], order: int | None = None):
        values = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise ValueError(f"series order must be >= 0, got {order}")
        values = values[: order + 1]
        values.extend([Fraction(0)] * (order + 1 - len(values)))
        self.order = order
        self.coeffs = tuple(values)

    # construction

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls((1,), order)

    @classmethod
    def x(cls, order: int) -> TruncSeries:
        return cls((0, 1), order)

    @classmethod
    def from_function(cls, fn: Callable[[int], Any], order: int) -> TruncSeries:
        """Series whose n-th coefficient is fn(n)."""
        return cls((fn(n) for n in range(order + 1)), order)

    @classmethod
    def geometric(cls, order: int, ratio: Any = 1) -> TruncSeries:
        """1 / (1 - ratio*x)."""
        r = Fraction(ratio)
        return cls((r**n for n in range(order + 1)), order)

    # inspection

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient x^{n} outside order {self.order}")
        return self.coeffs[n]

    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncSeries([{shown}{more}], order={self.order})"

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return TruncSeries(self.coeffs, order)

    def first_difference(self, other: TruncSeries) -> int | None:
        """Lowest index where the two series differ, up to the common order."""
        for n in range(min(self.order, other.order) + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    # arithmetic

    def _align(self, other: Any) -> tuple[TruncSeries, int]:
        if isinstance(other, TruncSeries):
            return other, min(self.order, other.order)
        if isinstance(other, (int, Fraction)):
            return TruncSeries((other,), self.order), self.order
        raise TypeError(f"cannot combine TruncSeries with {type(other).__name__}")

    def __neg__(self) -> TruncSeries:
        return TruncSeries((-c for c in self.coeffs), self.order)

    def __add__(self, other: Any) -> TruncSeries:
        o, n = self._align(other)
        return TruncSeries((self.coeffs[k] + o.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __sub__(self, other: Any) -> TruncSeries:
        o, n = self._align(other)
        return TruncSeries((self.coeffs[k] - o.coeffs[k] for k in range(n + 1)), n)

    def __rsub__(self, other: Any) -> TruncSeries:
        return (-self) + other

    def __mul__(self, other: Any) -> TruncSeries:
        if isinstance(other, (int, Fraction)):
            return TruncSeries((c * other for c in self.coeffs), self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> TruncSeries:
        if isinstance(other, (int, Fraction)):
            return TruncSeries((c / Fraction(other) for c in self.coeffs), self.order)
        return series_mul(self, series_mul_inverse(other))

    def __rtruediv__(self, other: Any) -> TruncSeries:
        return series_mul_inverse(self) * other

    def __pow__(self, k: int) -> TruncSeries:
        return self.power(k)

    def power(self, k: int) -> TruncSeries:
        """Integer power; negative exponents go through the multiplicative inverse."""
        base = self if k >= 0 else series_mul_inverse(self)
        k = abs(k)
        result = TruncSeries.one(self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose(self, inner: TruncSeries) -> TruncSeries:
        return series_compose(self, inner)

    def derivative(self) -> TruncSeries:
        """Formal derivative; the result is known one order less."""
        if self.order == 0:
            return TruncSeries.zero(0)
        return TruncSeries((k * self.coeffs[k] for k in range(1, self.order + 1)), self.order - 1)

    def shift(self, k: int = 1) -> TruncSeries:
        """Multiply by x**k keeping the order."""
        return TruncSeries([0] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def divide_by_x(self) -> TruncSeries:
        """Exact division by x; requires a zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("series is not divisible by x")
        if self.order == 0:
            raise OrderMismatch("no coefficients left after dividing by x")
        return TruncSeries(self.coeffs[1:], self.order - 1)

    def to_poly(self) -> RatPoly:
        return RatPoly(self.coeffs)


def series_from_poly(p: _DensePoly, order: int) -> TruncSeries:
    return TruncSeries(p.coeffs, order)


def series_mul(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    n = min(s.order, t.order)
    a, b = s.coeffs, t.coeffs
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b[j]
    return TruncSeries(out, n)


def series_mul_inverse(s: TruncSeries) -> TruncSeries:
    """1/s; requires s(0) != 0."""
    a0 = s.coeffs[0]
    if a0 == 0:
        raise ConstantTermZero("series with zero constant term has no multiplicative inverse")
    inv = [Fraction(0)] * (s.order + 1)
    inv[0] = 1 / a0
    for n in range(1, s.order + 1):
        acc = sum((s.coeffs[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
        inv[n] = -acc / a0
    return TruncSeries(inv, s.order)


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner(x)); requires inner(0) == 0."""
    if inner.coeffs[0] != 0:
        raise InnerConstantNonzero("inner series of a composition must vanish at 0")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncSeries.zero(n)
    for c in reversed(outer.coeffs[: n + 1]):
        acc = acc * inner + c
    return acc


class PolySeries:
    """Series sum_k c_k t^k with polynomial coefficients c_k, truncated at order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[_DensePoly | int | Fraction], order: int | None = None):
        polys = [_as_poly(c) for c in coeffs]
        if order is None:
            order = len(polys) - 1
        if order < 0:
            raise ValueError(f"series order must be >= 0, got {order}")
        polys = polys[: order + 1]
        polys.extend([IntPoly.zero()] * (order + 1 - len(polys)))
        self.order = order
        self.coeffs = tuple(polys)

    @classmethod
    def from_polynomial(cls, terms: Sequence[_DensePoly | int | Fraction], order: int) -> PolySeries:
        """Finite sum of terms[k] * t**k viewed as a truncated series."""
        return cls(terms, order)

    def __getitem__(self, k: int) -> _DensePoly:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"PolySeries({[str(c) for c in self.coeffs]!r}, order={self.order})"

    def __add__(self, other: PolySeries) -> PolySeries:
        n = min(self.order, other.order)
        return PolySeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    def __sub__(self, other: PolySeries) -> PolySeries:
        n = min(self.order, other.order)
        return PolySeries([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)], n)

    def __mul__(self, other: PolySeries) -> PolySeries:
        if not isinstance(other, PolySeries):
            return NotImplemented
        n = min(self.order, other.order)
        out: list[_DensePoly] = [IntPoly.zero() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PolySeries(out, n)

    def first_difference(self, other: PolySeries) -> int | None:
        for k in range(min(self.order, other.order) + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None


def _as_poly(value: _DensePoly | int | Fraction) -> _DensePoly:
    if isinstance(value, _DensePoly):
        return value
    if isinstance(value, int):
        return IntPoly.constant(value)
    if isinstance(value, Fraction):
        return RatPoly.constant(value)
    raise TypeError(f"PolySeries coefficient must be a polynomial, got {type(value).__name__}")
