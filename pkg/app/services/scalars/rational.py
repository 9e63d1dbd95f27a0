# ============================================================================
# Exact Rational Scalars & q-Combinatorics
# ============================================================================
"""
Rational scalars and the q-analogues used throughout the library.

Every scalar is a `fractions.Fraction`: arbitrary-precision, always kept in
lowest terms with a positive denominator. The only other scalar datum is the
`QContext`, which fixes q and the diameter d for a computation.

    ctx = QContext(q=Fraction(2), d=2)
    q_int(ctx, 3)        # 21/4
    q_factorial(ctx, 2)  # 5/2
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from app.core.exceptions import InvalidQ, InvalidRational

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


# ============================================================================
# The "p/q" codec
# ============================================================================
def parse_rational(value: RationalLike) -> Fraction:
    """Parse "p/q" or "p" (or an int / Fraction) into a canonical Fraction."""
    if isinstance(value, bool):
        raise InvalidRational(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_PATTERN.match(text):
            raise InvalidRational(value)
        numerator, _, denominator = text.partition("/")
        if denominator and int(denominator) == 0:
            raise InvalidRational(value)
        return Fraction(int(numerator), int(denominator) if denominator else 1)
    raise InvalidRational(value)


def format_rational(value: RationalLike) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(parse_rational(value))


# ============================================================================
# q context
# ============================================================================
@dataclass(frozen=True)
class QContext:
    """The scalar q together with the diameter d."""
    q: Fraction
    d: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", parse_rational(self.q))
        if self.q == 0 or abs(self.q) == 1:
            raise InvalidQ(self.q)
        if self.d < 0:
            raise ValueError(f"diameter must be nonnegative, got {self.d}")

    def power(self, k: int) -> Fraction:
        return self.q ** k

    @property
    def q_minus_q_inverse(self) -> Fraction:
        return self.q - 1 / self.q

    def with_diameter(self, d: int) -> "QContext":
        return QContext(q=self.q, d=d)


def q_int(ctx: QContext, i: int) -> Fraction:
    """[i]_q = (q^i - q^-i) / (q - q^-1)"""
    return (ctx.power(i) - ctx.power(-i)) / ctx.q_minus_q_inverse


def q_factorial(ctx: QContext, i: int) -> Fraction:
    """[i]^!_q = [1]_q [2]_q ... [i]_q, with [0]^!_q = 1."""
    if i < 0:
        raise ValueError(f"q-factorial needs i >= 0, got {i}")
    result = Fraction(1)
    for n in range(1, i + 1):
        result *= q_int(ctx, n)
    return result
