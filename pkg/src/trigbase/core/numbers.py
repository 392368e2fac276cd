"""Exact scalar rings: Gaussian rationals and the golden integers Z[phi]."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]


def as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact element re + im*i of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @classmethod
    def coerce(cls, value: GaussianRational | Scalar) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        return cls(as_fraction(value), Fraction(0))

    @classmethod
    def i(cls) -> GaussianRational:
        return cls(Fraction(0), Fraction(1))

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other: GaussianRational | Scalar) -> GaussianRational:
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: GaussianRational | Scalar) -> GaussianRational:
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> GaussianRational:
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: GaussianRational | Scalar) -> GaussianRational:
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: GaussianRational | Scalar) -> GaussianRational:
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.coerce(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other: Scalar) -> GaussianRational:
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int) -> GaussianRational:
        if k < 0:
            return GaussianRational(1) / (self ** -k)
        result = GaussianRational(Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True)
class QuadInt:
    """Element a + b*phi of Z[phi], phi**2 = phi + 1."""

    a: int = 0
    b: int = 0

    @classmethod
    def coerce(cls, value: QuadInt | int) -> QuadInt:
        if isinstance(value, QuadInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} into Z[phi]")

    @classmethod
    def phi(cls) -> QuadInt:
        return cls(0, 1)

    def conjugate(self) -> QuadInt:
        # phi -> 1 - phi
        return QuadInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def is_integer(self) -> bool:
        return self.b == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __add__(self, other: QuadInt | int) -> QuadInt:
        if not isinstance(other, (QuadInt, int)):
            return NotImplemented
        o = QuadInt.coerce(other)
        return QuadInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: QuadInt | int) -> QuadInt:
        if not isinstance(other, (QuadInt, int)):
            return NotImplemented
        o = QuadInt.coerce(other)
        return QuadInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: int) -> QuadInt:
        return QuadInt.coerce(other) - self

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        if not isinstance(other, (QuadInt, int)):
            return NotImplemented
        o = QuadInt.coerce(other)
        bd = self.b * o.b
        return QuadInt(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadInt:
        if k < 0:
            raise ValueError("negative powers leave Z[phi] unless the norm is a unit")
        result = QuadInt(1, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}φ"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}φ"
