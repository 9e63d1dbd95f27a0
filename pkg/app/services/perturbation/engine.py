# ============================================================================
# t-linear Perturbation Engine
# ============================================================================
"""
Given a normalized tridiagonal system Φ and a rational t, build

    B = A,    B* = t·A* + (1 − t)·K

together with the idempotents E′ᵢ of B*, and check every structural lemma
about the perturbed pair exactly.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from app.core.exceptions import PerturbationStructureError, SpectrumMismatch
from app.services.linalg import Matrix, Subspace, column_space, maps_into, subspace_sum
from app.services.scalars import RationalLike, parse_rational
from app.services.split import split_decomposition
from app.services.tridiagonal import (
    ParallelSystem,
    ParameterArray,
    find_isomorphism,
    from_parameter_array_thin,
    parameter_array,
    primitive_idempotents,
    qserre_residuals,
    require_sharp,
    split_sequence,
    verify_system,
)
from app.services.perturbation.k_map import k_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerturbedSystem:
    t: Fraction
    K: Matrix
    B: Matrix
    B_star: Matrix
    E_prime: Tuple[Matrix, ...]
    base: ParallelSystem
    U: Tuple[Subspace, ...]

    @property
    def system(self) -> ParallelSystem:
        """The parallel system (B; E; B*; E′)."""
        return ParallelSystem(
            q_ctx=self.base.q_ctx,
            A=self.B,
            A_star=self.B_star,
            E=self.base.E,
            E_star=self.E_prime,
            theta=self.base.theta,
            theta_star=self.base.theta_star,
        )


def perturb(ps: ParallelSystem, t: RationalLike) -> PerturbedSystem:
    t = parse_rational(t)
    U = split_decomposition(ps)
    K = k_map(ps, U)
    B = ps.A
    B_star = ps.A_star * t + K * (1 - t)

    try:
        E_prime = primitive_idempotents(B_star, ps.theta_star)
    except SpectrumMismatch as e:
        logger.warning(f"B* at t={t} is not diagonalizable with the dual spectrum: {e.detail}")
        raise PerturbationStructureError(f"B* at t = {t} fails diagonalization: {e.detail}")

    for i, (E, u) in enumerate(zip(E_prime, U)):
        if E.rank() != u.dim:
            raise PerturbationStructureError(
                f"rank E'_{i} = {E.rank()} but dim U_{i} = {u.dim} at t = {t}"
            )
    if column_space(E_prime[0]) != U[0]:
        raise PerturbationStructureError(f"U_0 ≠ E'_0 V at t = {t}")

    logger.debug(f"Perturbed system built at t={t}")
    return PerturbedSystem(t=t, K=K, B=B, B_star=B_star, E_prime=E_prime, base=ps, U=U)


# ============================================================================
# Lemma checks
# ============================================================================
@dataclass(frozen=True)
class PerturbationLemmaReport:
    tscale: bool
    blikea: bool
    pwrt: bool
    diag: bool
    qser: bool
    ord_inc1: bool
    ord_inc2: bool

    @property
    def all_hold(self) -> bool:
        return all(self.to_dict().values())

    def to_dict(self) -> Dict[str, bool]:
        return {
            "tscale": self.tscale,
            "blikea": self.blikea,
            "pwrt": self.pwrt,
            "diag": self.diag,
            "qser": self.qser,
            "ord_inc1": self.ord_inc1,
            "ord_inc2": self.ord_inc2,
        }


def _three_term(spaces: Sequence[Subspace], i: int, n: int) -> Subspace:
    total = Subspace.zero(n)
    for j in (i - 1, i, i + 1):
        if 0 <= j < len(spaces):
            total = subspace_sum(total, spaces[j])
    return total


def _inclusions_ok(M: Matrix, idempotents: Sequence[Matrix]) -> bool:
    n = M.rows
    spaces = [column_space(E) for E in idempotents]
    return all(maps_into(M, spaces[i], _three_term(spaces, i, n)) for i in range(len(spaces)))


def verify_perturbation_lemmas(pert: PerturbedSystem) -> PerturbationLemmaReport:
    ps = pert.base
    n = ps.n
    t = pert.t
    U = pert.U

    tscale = True
    for i, u in enumerate(U):
        shifted_B = pert.B_star.shift(ps.theta_star[i])
        shifted_A = ps.A_star.shift(ps.theta_star[i])
        for v in u.vectors:
            if shifted_B.apply(v) != tuple(t * x for x in shifted_A.apply(v)):
                tscale = False

    blikea = all(
        maps_into(pert.B_star.shift(ps.theta_star[i]), U[i], U[i - 1] if i > 0 else Subspace.zero(n))
        for i in range(len(U))
    )

    pwrt = True
    for i, u in enumerate(U):
        lower_A = Matrix.identity(n)
        lower_B = Matrix.identity(n)
        for h in range(1, i + 1):
            lower_A = lower_A @ ps.A_star.shift(ps.theta_star[h])
            lower_B = lower_B @ pert.B_star.shift(ps.theta_star[h])
        lower_A = lower_A * (t ** i)
        for v in u.vectors:
            if lower_A.apply(v) != lower_B.apply(v):
                pwrt = False

    diag = all(E.rank() == u.dim for E, u in zip(pert.E_prime, U))

    r1, r2 = qserre_residuals(pert.B, pert.B_star, ps.q_ctx)
    qser = r1.is_zero and r2.is_zero

    report = PerturbationLemmaReport(
        tscale=tscale,
        blikea=blikea,
        pwrt=pwrt,
        diag=diag,
        qser=qser,
        ord_inc1=_inclusions_ok(pert.B_star, ps.E),
        ord_inc2=_inclusions_ok(pert.B, pert.E_prime),
    )
    logger.debug(f"Perturbation lemmas at t={t}: {report.to_dict()}")
    return report


def perturbed_split_sequence(pert: PerturbedSystem) -> Tuple[Fraction, ...]:
    """ζ′ from the trace formula on (B, E′₀); must equal tⁱζᵢ."""
    system = pert.system
    require_sharp(system)
    zeta_prime = split_sequence(system)
    expected = tuple(pert.t ** i * z for i, z in enumerate(split_sequence(pert.base)))
    if zeta_prime != expected:
        raise PerturbationStructureError(
            f"perturbed split sequence {[str(z) for z in zeta_prime]} ≠ t^i ζ_i {[str(z) for z in expected]}"
        )
    return zeta_prime


# ============================================================================
# Partner & dual round trip
# ============================================================================
def perturbation_partner(ps: ParallelSystem, t: RationalLike) -> Optional[ParallelSystem]:
    """Thin system with parameter array (θ, θ*, tⁱζᵢ), or None if it is not a TD system."""
    t = parse_rational(t)
    if ps.n != ps.d + 1:
        raise PerturbationStructureError("partner construction needs a thin system")
    if t == 0:
        return None
    pa = parameter_array(ps)
    partner_pa = pa.with_zeta([t ** i * z for i, z in enumerate(pa.zeta)])
    partner = from_parameter_array_thin(partner_pa, ps.q_ctx)
    if not verify_system(partner).is_td_system:
        return None
    return partner


@dataclass(frozen=True)
class RoundTripResult:
    t: Fraction
    parameter_arrays_equal: bool
    intertwiner: Optional[Matrix]
    returned: ParallelSystem


def dual_round_trip(ps: ParallelSystem, t: RationalLike) -> RoundTripResult:
    """Perturb by t, then the result by 1/t, and compare with the start."""
    t = parse_rational(t)
    if t == 0:
        raise PerturbationStructureError("the round trip needs t ≠ 0")
    forward = perturb(ps, t)
    back = perturb(forward.system, 1 / t)
    original: ParameterArray = parameter_array(ps)
    returned = back.system
    return RoundTripResult(
        t=t,
        parameter_arrays_equal=parameter_array(returned) == original,
        intertwiner=find_isomorphism(ps, returned),
        returned=returned,
    )
