# ============================================================================
# Exact Scalars - Public API
# ============================================================================
from app.services.scalars.rational import (
    Rational,
    RationalLike,
    QContext,
    parse_rational,
    format_rational,
    q_int,
    q_factorial,
)
from app.services.scalars.polynomial import Polynomial, poly_eval

__all__ = [
    "Rational",
    "RationalLike",
    "QContext",
    "parse_rational",
    "format_rational",
    "q_int",
    "q_factorial",
    "Polynomial",
    "poly_eval",
]
