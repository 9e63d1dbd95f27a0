# ============================================================================
# Parameter Arrays & the η / τ Polynomial Families
# ============================================================================
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from app.core.exceptions import InvalidParameterArray
from app.services.scalars import Polynomial, QContext, RationalLike, parse_rational

logger = logging.getLogger(__name__)


def _as_fractions(values: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def _check_distinct(values: Sequence[Fraction], name: str):
    if len(set(values)) != len(values):
        raise InvalidParameterArray(f"{name} values must be mutually distinct, got {[str(v) for v in values]}")


@dataclass(frozen=True)
class ParameterArray:
    """(θ, θ*, ζ) for a sharp system of diameter d."""
    d: int
    theta: Tuple[Fraction, ...]
    theta_star: Tuple[Fraction, ...]
    zeta: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 0:
            raise InvalidParameterArray(f"diameter must be nonnegative, got {self.d}")
        for name in ("theta", "theta_star", "zeta"):
            values = _as_fractions(getattr(self, name))
            if len(values) != self.d + 1:
                raise InvalidParameterArray(
                    f"{name} must have d + 1 = {self.d + 1} entries, got {len(values)}"
                )
            object.__setattr__(self, name, values)
        _check_distinct(self.theta, "theta")
        _check_distinct(self.theta_star, "theta_star")
        if self.zeta[0] != 1:
            raise InvalidParameterArray(f"zeta_0 must be 1, got {self.zeta[0]}")

    def with_zeta(self, zeta: Sequence[RationalLike]) -> "ParameterArray":
        return ParameterArray(self.d, self.theta, self.theta_star, _as_fractions(zeta))

    def first_zeta_difference(self, other: "ParameterArray") -> int:
        """Index of the first differing ζ, or -1."""
        for i, (a, b) in enumerate(zip(self.zeta, other.zeta)):
            if a != b:
                return i
        return -1

    def to_dict(self) -> Dict:
        return {
            "d": self.d,
            "theta": [str(v) for v in self.theta],
            "theta_star": [str(v) for v in self.theta_star],
            "zeta": [str(v) for v in self.zeta],
        }


# ============================================================================
# η / τ families
# ============================================================================
class PolynomialFamilies(NamedTuple):
    eta: Tuple[Polynomial, ...]
    eta_star: Tuple[Polynomial, ...]
    tau: Tuple[Polynomial, ...]
    tau_star: Tuple[Polynomial, ...]


def tau_polys(theta: Sequence[Fraction]) -> Tuple[Polynomial, ...]:
    """τᵢ = (x − θ₀)⋯(x − θᵢ₋₁), i = 0..d"""
    return tuple(Polynomial.from_roots(theta[:i]) for i in range(len(theta)))


def eta_polys(theta: Sequence[Fraction]) -> Tuple[Polynomial, ...]:
    """ηᵢ = (x − θ_d)⋯(x − θ_{d−i+1}), i = 0..d"""
    reversed_theta = list(reversed(theta))
    return tuple(Polynomial.from_roots(reversed_theta[:i]) for i in range(len(theta)))


def eta_tau_polys(pa: ParameterArray) -> PolynomialFamilies:
    return PolynomialFamilies(
        eta=eta_polys(pa.theta),
        eta_star=eta_polys(pa.theta_star),
        tau=tau_polys(pa.theta),
        tau_star=tau_polys(pa.theta_star),
    )


def _polysum_holds(eta: Sequence[Polynomial], tau: Sequence[Polynomial], theta_0: Fraction) -> bool:
    d = len(eta) - 1
    total = Polynomial()
    for i in range(d + 1):
        total = total + tau[i] * eta[d - i](theta_0)
    return total == eta[d]


def check_polysum(pa: ParameterArray) -> bool:
    """η_d = Σ η_{d−i}(θ₀) τᵢ, and the same for the starred families."""
    fam = eta_tau_polys(pa)
    return (
        _polysum_holds(fam.eta, fam.tau, pa.theta[0])
        and _polysum_holds(fam.eta_star, fam.tau_star, pa.theta_star[0])
    )


# ============================================================================
# Geometric (q-Serre) spectra
# ============================================================================
def geometric_eigenvalues(ctx: QContext) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    d = ctx.d
    theta = tuple(ctx.power(2 * i - d) for i in range(d + 1))
    theta_star = tuple(ctx.power(d - 2 * i) for i in range(d + 1))
    return theta, theta_star


def has_normalized_spectrum(theta: Sequence[Fraction], theta_star: Sequence[Fraction], ctx: QContext) -> bool:
    expected = geometric_eigenvalues(ctx.with_diameter(len(theta) - 1))
    return (tuple(theta), tuple(theta_star)) == expected


def is_qserre_spectrum(pa: ParameterArray, ctx: QContext) -> bool:
    """θᵢ = q^{2i}θ₀ and θ*_{d−i} = q^{2i}θ*_d for every i."""
    d = pa.d
    for i in range(d + 1):
        step = ctx.power(2 * i)
        if pa.theta[i] != step * pa.theta[0]:
            return False
        if pa.theta_star[d - i] != step * pa.theta_star[d]:
            return False
    return True


def ladder_products(zeta: Sequence[Fraction]) -> List[Fraction]:
    """φᵢ = ζᵢ/ζᵢ₋₁, i = 1..d"""
    return [zeta[i] / zeta[i - 1] for i in range(1, len(zeta))]
