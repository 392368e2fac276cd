"""Dense univariate polynomials over the integers and the rationals.

Coefficients are stored lowest degree first in a tuple with no trailing
zeros; the zero polynomial has an empty tuple and degree -1.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import isqrt
from typing import Any, Iterable, Sequence, TypeVar

from .errors import NonIntegerCoefficient, NotASquare, NotDivisible

logger = logging.getLogger(__name__)

P = TypeVar("P", bound="_DensePoly")


def _trim(coeffs: Iterable[Any]) -> tuple:
    values = list(coeffs)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class _DensePoly:
    """Shared dense arithmetic; subclasses fix the coefficient ring."""

    __slots__ = ("coeffs",)

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Any] = ()):
        object.__setattr__(self, "coeffs", _trim(self._coerce(c) for c in coeffs))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    @staticmethod
    def _coerce(value: Any) -> Any:
        raise NotImplementedError

    # construction

    @classmethod
    def zero(cls: type[P]) -> P:
        return cls(())

    @classmethod
    def one(cls: type[P]) -> P:
        return cls((1,))

    @classmethod
    def x(cls: type[P]) -> P:
        return cls((0, 1))

    @classmethod
    def constant(cls: type[P], value: Any) -> P:
        return cls((value,))

    @classmethod
    def monomial(cls: type[P], degree: int, coeff: Any = 1) -> P:
        return cls([0] * degree + [coeff])

    # inspection

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Any:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x") -> str:
        """Render lowest degree first, e.g. ``5-5x+x^2``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    # arithmetic

    def _promote(self, other: Any) -> _DensePoly | None:
        if isinstance(other, _DensePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)((other,)) if isinstance(other, int) else RatPoly((other,))
        return None

    def _result_type(self, other: _DensePoly) -> type[_DensePoly]:
        if isinstance(self, RatPoly) or isinstance(other, RatPoly):
            return RatPoly
        return type(self)

    def __neg__(self: P) -> P:
        return type(self)(-c for c in self.coeffs)

    def __add__(self, other: Any) -> Any:
        o = self._promote(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return self._result_type(o)(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other: Any) -> Any:
        o = self._promote(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return self._result_type(o)(self.coeff(k) - o.coeff(k) for k in range(n))

    def __rsub__(self, other: Any) -> Any:
        return (-self) + other

    def __mul__(self, other: Any) -> Any:
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return self._result_type(o)(_convolve(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self: P, k: int) -> P:
        if k < 0:
            raise ValueError("negative polynomial power")
        result = type(self).one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value: Any) -> Any:
        return self.evaluate(value)

    def evaluate(self, value: Any) -> Any:
        """Horner evaluation in whatever ring ``value`` lives in."""
        if not self.coeffs:
            return value * 0
        acc = value * 0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def compose(self, inner: _DensePoly) -> _DensePoly:
        return poly_compose(self, inner)

    def derivative(self: P) -> P:
        return type(self)(k * c for k, c in enumerate(self.coeffs) if k)

    def reflect(self: P) -> P:
        """p(-x)."""
        return type(self)(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def scale_variable(self, factor: int | Fraction) -> RatPoly:
        """p(factor * x) over the rationals."""
        factor = Fraction(factor)
        return RatPoly(c * factor**k for k, c in enumerate(self.coeffs))

    def shift_degree(self: P, k: int) -> P:
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return type(self)([0] * k + list(self.coeffs))


class IntPoly(_DensePoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(value: Any) -> int:
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise NonIntegerCoefficient(f"coefficient {value} is not an integer")
            return value.numerator
        raise TypeError(f"IntPoly coefficient must be integral, got {type(value).__name__}")

    def to_rat(self) -> RatPoly:
        return RatPoly(self.coeffs)


class RatPoly(_DensePoly):
    """Polynomial with exact rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"RatPoly coefficient must be rational, got {type(value).__name__}")

    def to_int(self) -> IntPoly:
        """Convert, raising NonIntegerCoefficient on any fraction."""
        return IntPoly(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def _convolve(a: Sequence[Any], b: Sequence[Any]) -> list[Any]:
    if not a or not b:
        return []
    out: list[Any] = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Schoolbook product of two integer polynomials."""
    return IntPoly(_convolve(p.coeffs, q.coeffs))


def poly_compose(p: _DensePoly, q: _DensePoly) -> _DensePoly:
    """Return p(q(x)) by Horner's rule over polynomials."""
    result_type = RatPoly if isinstance(p, RatPoly) or isinstance(q, RatPoly) else IntPoly
    acc = result_type.zero()
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return result_type(acc.coeffs)


def poly_exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    """Divide exactly over Z.

    Args:
        p: Dividend
        q: Nonzero divisor

    Returns:
        r with q * r == p

    Raises:
        ZeroDivisionError: if q is zero
        NotDivisible: if long division leaves a remainder or a fraction
    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return IntPoly.zero()
    if p.degree < q.degree:
        raise NotDivisible(f"deg {p.degree} < deg {q.degree}: ({p}) / ({q})")

    rem = list(p.coeffs)
    lead = q.lead()
    dq = q.degree
    quotient = [0] * (p.degree - dq + 1)
    for k in range(p.degree - dq, -1, -1):
        top = rem[k + dq]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise NotDivisible(f"non-integer quotient coefficient at x^{k}: ({p}) / ({q})")
        quotient[k] = c
        for i, qi in enumerate(q.coeffs):
            rem[k + i] -= c * qi
    if any(rem):
        raise NotDivisible(f"nonzero remainder: ({p}) / ({q})")
    return IntPoly(quotient)


def poly_sqrt(p: IntPoly) -> IntPoly:
    """Integer square root of a polynomial by coefficient matching.

    The root is normalized so that its lowest nonzero coefficient is
    positive (so q(0) > 0 whenever p(0) > 0).

    Raises:
        NotASquare: if no integer polynomial q with q*q == p exists
    """
    if p.is_zero():
        raise NotASquare("zero polynomial has no normalized square root")
    if p.degree % 2:
        raise NotASquare(f"odd degree {p.degree}")

    low = next(k for k, c in enumerate(p.coeffs) if c)
    if low % 2:
        raise NotASquare(f"lowest exponent {low} is odd")
    c0 = p.coeffs[low]
    if c0 < 0 or isqrt(c0) ** 2 != c0:
        raise NotASquare(f"lowest coefficient {c0} is not a perfect square")

    body = p.coeffs[low:]
    n = (len(body) - 1) // 2
    q0 = isqrt(c0)
    q = [q0]
    for k in range(1, n + 1):
        acc = body[k] - sum(q[i] * q[k - i] for i in range(1, k))
        c, r = divmod(acc, 2 * q0)
        if r:
            raise NotASquare(f"coefficient matching fails at x^{low // 2 + k}")
        q.append(c)

    root = IntPoly([0] * (low // 2) + q)
    if poly_mul(root, root) != p:
        raise NotASquare("square of the matched root differs from the input")
    return root
