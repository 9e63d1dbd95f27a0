# ============================================================================
# Split Sequence via Traces
# ============================================================================
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from app.core.exceptions import NotSharp
from app.services.linalg import mat_poly_eval
from app.services.tridiagonal.parameter_array import ParameterArray, eta_polys, tau_polys
from app.services.tridiagonal.system import ParallelSystem

logger = logging.getLogger(__name__)


def require_sharp(ps: ParallelSystem):
    rank = ps.E_star[0].rank()
    if rank != 1:
        logger.warning(f"System is not sharp: rank(E*_0) = {rank}")
        raise NotSharp(rank)


def chi(ps: ParallelSystem, i: int) -> Fraction:
    """χᵢ = tr(τᵢ(A) E*₀)"""
    require_sharp(ps)
    tau_i = tau_polys(ps.theta)[i]
    return (mat_poly_eval(tau_i, ps.A) @ ps.E_star[0]).trace()


def split_sequence(ps: ParallelSystem) -> Tuple[Fraction, ...]:
    """ζᵢ = (θ*₀ − θ*₁)⋯(θ*₀ − θ*ᵢ) χᵢ"""
    require_sharp(ps)
    E0s = ps.E_star[0]
    taus = tau_polys(ps.theta)
    zeta = []
    factor = Fraction(1)
    for i in range(ps.d + 1):
        if i > 0:
            factor *= ps.theta_star[0] - ps.theta_star[i]
        zeta.append(factor * (mat_poly_eval(taus[i], ps.A) @ E0s).trace())
    return tuple(zeta)


def parameter_array(ps: ParallelSystem) -> ParameterArray:
    return ParameterArray(ps.d, ps.theta, ps.theta_star, split_sequence(ps))


# ============================================================================
# Trace identities
# ============================================================================
@dataclass(frozen=True)
class TraceIdentityReport:
    big1: bool
    big2: bool
    nz1: bool
    nz2: bool
    nz3: bool
    nz4: bool
    tr_Ed_E0s: Fraction
    tr_E0_E0s: Fraction
    sum_value: Fraction

    @property
    def all_hold(self) -> bool:
        return all((self.big1, self.big2, self.nz1, self.nz2, self.nz3, self.nz4))

    def to_dict(self) -> Dict:
        return {
            "big1": self.big1,
            "big2": self.big2,
            "nz1": self.nz1,
            "nz2": self.nz2,
            "nz3": self.nz3,
            "nz4": self.nz4,
            "tr_Ed_E0s": str(self.tr_Ed_E0s),
            "tr_E0_E0s": str(self.tr_E0_E0s),
            "sum": str(self.sum_value),
        }


def trace_identities(ps: ParallelSystem) -> TraceIdentityReport:
    """
    big1: ζ_d = η*_d(θ*₀) τ_d(θ_d) tr(E_d E*₀)
    big2: Σ η_{d−i}(θ₀) η*_{d−i}(θ*₀) ζᵢ = η_d(θ₀) η*_d(θ*₀) tr(E₀ E*₀)
    nz1..nz4: tr(E_d E*₀) ≠ 0, ζ_d ≠ 0, tr(E₀ E*₀) ≠ 0, the big2 sum ≠ 0
    """
    require_sharp(ps)
    d = ps.d
    zeta = split_sequence(ps)
    eta = eta_polys(ps.theta)
    eta_star = eta_polys(ps.theta_star)
    tau = tau_polys(ps.theta)
    E0s = ps.E_star[0]

    tr_d = (ps.E[d] @ E0s).trace()
    tr_0 = (ps.E[0] @ E0s).trace()

    big1 = zeta[d] == eta_star[d](ps.theta_star[0]) * tau[d](ps.theta[d]) * tr_d
    total = sum(
        (eta[d - i](ps.theta[0]) * eta_star[d - i](ps.theta_star[0]) * zeta[i] for i in range(d + 1)),
        Fraction(0),
    )
    big2 = total == eta[d](ps.theta[0]) * eta_star[d](ps.theta_star[0]) * tr_0

    return TraceIdentityReport(
        big1=big1,
        big2=big2,
        nz1=tr_d != 0,
        nz2=zeta[d] != 0,
        nz3=tr_0 != 0,
        nz4=total != 0,
        tr_Ed_E0s=tr_d,
        tr_E0_E0s=tr_0,
        sum_value=total,
    )
