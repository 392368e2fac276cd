"""Laurent polynomials in z = e^{i theta}.

A trigonometric polynomial is represented by its finitely supported
coefficient map exponent -> coefficient. Coefficients are Fractions or,
for sine expansions, GaussianRationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping, Union

from .numbers import GaussianRational

Coeff = Union[Fraction, GaussianRational]


def _normalize(value: Any) -> Coeff:
    if isinstance(value, GaussianRational):
        return value.re if value.is_real() else value
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"unsupported Laurent coefficient {type(value).__name__}")


class LaurentPoly:
    """Immutable Laurent polynomial; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Any] | Iterable[tuple[int, Any]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Any] = {}
        for exp, c in items:
            acc[exp] = acc.get(exp, 0) + c
        self._terms = {e: _normalize(c) for e, c in acc.items() if c != 0}

    @classmethod
    def monomial(cls, exponent: int, coeff: Any = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, value: Any) -> LaurentPoly:
        return cls({0: value})

    @property
    def terms(self) -> dict[int, Coeff]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> Coeff:
        return self._terms.get(exponent, Fraction(0))

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        return not any(isinstance(c, GaussianRational) for c in self._terms.values())

    def constant_term(self) -> Coeff:
        return self.coeff(0)

    def invert_variable(self) -> LaurentPoly:
        """Substitute z -> 1/z."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def conjugate(self) -> LaurentPoly:
        """Conjugate coefficients only."""
        return LaurentPoly({
            e: c.conjugate() if isinstance(c, GaussianRational) else c
            for e, c in self._terms.items()
        })

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in sorted(self._terms.items()))
        return f"LaurentPoly({{{body}}})"

    def _promote(self, other: Any) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return LaurentPoly.constant(other)
        return None

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other: Any) -> LaurentPoly:
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return LaurentPoly(list(self._terms.items()) + list(o._terms.items()))

    __radd__ = __add__

    def __sub__(self, other: Any) -> LaurentPoly:
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> LaurentPoly:
        o = self._promote(other)
        if o is None:
            return NotImplemented
        acc: dict[int, Any] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers of a Laurent polynomial are not supported")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def laurent_constant_term(p: LaurentPoly) -> Coeff:
    """Coefficient of z^0 (zero if absent)."""
    return p.constant_term()


Z = LaurentPoly.monomial(1)
Z_INV = LaurentPoly.monomial(-1)
