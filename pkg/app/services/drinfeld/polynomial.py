# ============================================================================
# Drinfel'd Polynomial
# ============================================================================
"""
P(x) = Σ (−1)ⁱ ζᵢ xⁱ / ([i]!_q)², the predicate of the perturbation theorem,
and the rational bad-t enumeration.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from app.core.exceptions import InvalidParameterArray, NonGeometricSpectrum
from app.services.scalars import Polynomial, QContext, RationalLike, parse_rational, q_factorial
from app.services.tridiagonal import ParameterArray, eta_polys, has_normalized_spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DrinfeldPolynomial:
    underlying: Polynomial
    source_zeta: Tuple[Fraction, ...]
    q_ctx: QContext

    def __call__(self, x: RationalLike) -> Fraction:
        return self.underlying(x)

    @property
    def degree(self) -> int:
        return self.underlying.degree

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self.underlying.coefficients

    def rescaled(self, t: RationalLike) -> "DrinfeldPolynomial":
        """Polynomial of the split sequence tⁱζᵢ, i.e. x ↦ P(tx)."""
        t = parse_rational(t)
        return drinfeld_poly([t ** i * z for i, z in enumerate(self.source_zeta)], self.q_ctx)

    def to_dict(self) -> Dict:
        return {"coeffs": [str(c) for c in self.coefficients]}

    def __str__(self) -> str:
        return str(self.underlying)


def drinfeld_poly(zeta: Sequence[RationalLike], ctx: QContext) -> DrinfeldPolynomial:
    zeta = tuple(parse_rational(z) for z in zeta)
    if not zeta or zeta[0] != 1:
        raise InvalidParameterArray(f"zeta_0 must be 1, got {zeta[0] if zeta else 'nothing'}")
    coeffs = tuple(
        (-1) ** i * z / q_factorial(ctx, i) ** 2 for i, z in enumerate(zeta)
    )
    return DrinfeldPolynomial(underlying=Polynomial(coeffs), source_zeta=zeta, q_ctx=ctx)


def _theorem_scale(ctx: QContext) -> Fraction:
    """(q − q⁻¹)²"""
    return ctx.q_minus_q_inverse ** 2


def predict_td(P: DrinfeldPolynomial, t: RationalLike) -> bool:
    """t ≠ 0 and P(t/(q − q⁻¹)²) ≠ 0"""
    t = parse_rational(t)
    if t == 0:
        return False
    return P(t / _theorem_scale(P.q_ctx)) != 0


def rational_bad_t(P: DrinfeldPolynomial) -> List[Fraction]:
    """(q − q⁻¹)²·x₀ for every rational root x₀ of P, ascending; 0 never appears."""
    scale = _theorem_scale(P.q_ctx)
    return sorted({scale * root for root in P.underlying.rational_roots() if root != 0})


# ============================================================================
# The nz4 identity
# ============================================================================
def ccond_sides(pa: ParameterArray, ctx: QContext) -> Tuple[Fraction, Fraction]:
    """
    left  = Σ η_{d−i}(θ₀) η*_{d−i}(θ*₀) ζᵢ
    right = (−1)^d ([d]!_q)² (q − q⁻¹)^{2d} P(1/(q − q⁻¹)²)
    """
    ctx = ctx.with_diameter(pa.d)
    if not has_normalized_spectrum(pa.theta, pa.theta_star, ctx):
        raise NonGeometricSpectrum()
    d = pa.d
    eta = eta_polys(pa.theta)
    eta_star = eta_polys(pa.theta_star)
    left = sum(
        (eta[d - i](pa.theta[0]) * eta_star[d - i](pa.theta_star[0]) * pa.zeta[i] for i in range(d + 1)),
        Fraction(0),
    )
    scale = _theorem_scale(ctx)
    P = drinfeld_poly(pa.zeta, ctx)
    right = (-1) ** d * q_factorial(ctx, d) ** 2 * scale ** d * P(1 / scale)
    return left, right


def check_ccond_identity(pa: ParameterArray, ctx: QContext) -> bool:
    left, right = ccond_sides(pa, ctx)
    return left == right
