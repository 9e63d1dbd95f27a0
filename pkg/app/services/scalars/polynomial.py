# ============================================================================
# Univariate Polynomials over Q
# ============================================================================
"""
Dense univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending order (index i is the coefficient of
x^i). Evaluation is Horner's rule on Fractions; multiplication and root
finding go through sympy's `Poly` over QQ.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Tuple, Union

from sympy import Poly, Rational as SympyRational, Symbol
from sympy.polys.domains import QQ

from app.services.scalars.rational import RationalLike, parse_rational

_X = Symbol("x")


def _to_fraction(value) -> Fraction:
    value = SympyRational(value)
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with ascending coefficient tuple; the zero polynomial is ()."""
    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [parse_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    # ==================== Constructors ====================
    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls((parse_rational(value),))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def linear_factor(cls, root: RationalLike) -> "Polynomial":
        """x - root"""
        return cls((-parse_rational(root), Fraction(1)))

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "Polynomial":
        return reduce(lambda acc, r: acc * cls.linear_factor(r), roots, cls.constant(1))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "Polynomial":
        return cls(tuple(_to_fraction(c) for c in reversed(poly.all_coeffs())))

    def to_sympy(self) -> Poly:
        coeffs = [SympyRational(c.numerator, c.denominator) for c in reversed(self.coefficients)]
        return Poly(coeffs or [0], _X, domain=QQ)

    # ==================== Properties ====================
    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    # ==================== Arithmetic ====================
    def __add__(self, other: Union["Polynomial", RationalLike]) -> "Polynomial":
        other = other if isinstance(other, Polynomial) else Polynomial.constant(other)
        return Polynomial.from_sympy(self.to_sympy() + other.to_sympy())

    def __sub__(self, other: Union["Polynomial", RationalLike]) -> "Polynomial":
        other = other if isinstance(other, Polynomial) else Polynomial.constant(other)
        return Polynomial.from_sympy(self.to_sympy() - other.to_sympy())

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __mul__(self, other: Union["Polynomial", RationalLike]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            factor = parse_rational(other)
            return Polynomial(tuple(factor * c for c in self.coefficients))
        return Polynomial.from_sympy(self.to_sympy() * other.to_sympy())

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    # ==================== Roots ====================
    def rational_roots(self) -> List[Fraction]:
        """Distinct rational roots, ascending. The zero polynomial has none by convention."""
        if self.degree < 1:
            return []
        roots = self.to_sympy().ground_roots()
        return sorted(_to_fraction(r) for r in roots)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"({c})x")
            else:
                terms.append(f"({c})x^{i}")
        return " + ".join(terms)


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    x = parse_rational(x)
    result = Fraction(0)
    for c in reversed(p.coefficients):
        result = result * x + c
    return result
