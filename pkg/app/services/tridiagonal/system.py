# ============================================================================
# Parallel Systems
# ============================================================================
"""
A parallel system is a pair of diagonalizable maps (A, A*) together with
orderings of their primitive idempotents and eigenvalues. Idempotents are
always recomputed from the maps; they are never accepted from outside.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import reduce
from typing import List, Sequence, Tuple

from app.core.exceptions import (
    DimensionMismatch,
    NonGeometricSpectrum,
    SpectrumMismatch,
    ThinConstructionError,
)
from app.services.linalg import Matrix, mat_poly_eval
from app.services.scalars import QContext, RationalLike, parse_rational
from app.services.tridiagonal.parameter_array import (
    ParameterArray,
    eta_polys,
    ladder_products,
    tau_polys,
)

logger = logging.getLogger(__name__)


# ============================================================================
# Primitive idempotents
# ============================================================================
def primitive_idempotents(A: Matrix, theta: Sequence[RationalLike]) -> Tuple[Matrix, ...]:
    """Eᵢ = ∏_{j≠i} (A − θⱼI)/(θᵢ − θⱼ)"""
    if not A.is_square:
        raise DimensionMismatch(f"primitive idempotents need a square matrix, got {A.shape}")
    theta = [parse_rational(v) for v in theta]
    if not theta:
        raise SpectrumMismatch("eigenvalue list is empty")
    if len(set(theta)) != len(theta):
        raise SpectrumMismatch(f"repeated eigenvalue in {[str(v) for v in theta]}")

    n = A.rows
    factors = [A.shift(value) for value in theta]
    annihilator = reduce(lambda acc, f: acc @ f, factors, Matrix.identity(n))
    if not annihilator.is_zero:
        raise SpectrumMismatch(
            "∏(A − θᵢI) ≠ 0: A is not diagonalizable with spectrum in "
            f"{[str(v) for v in theta]}"
        )

    idempotents = []
    for i, value in enumerate(theta):
        E = Matrix.identity(n)
        for j, other in enumerate(theta):
            if j != i:
                E = (E @ factors[j]) * (1 / (value - other))
        if E.is_zero:
            raise SpectrumMismatch(f"θ_{i} = {value} is not an eigenvalue of A")
        idempotents.append(E)
    return tuple(idempotents)


# ============================================================================
# ParallelSystem
# ============================================================================
@dataclass(frozen=True)
class ParallelSystem:
    q_ctx: QContext
    A: Matrix
    A_star: Matrix
    E: Tuple[Matrix, ...]
    E_star: Tuple[Matrix, ...]
    theta: Tuple[Fraction, ...]
    theta_star: Tuple[Fraction, ...]

    @classmethod
    def from_matrices(
        cls,
        A: Matrix,
        A_star: Matrix,
        theta: Sequence[RationalLike],
        theta_star: Sequence[RationalLike],
        ctx: QContext,
    ) -> "ParallelSystem":
        theta = tuple(parse_rational(v) for v in theta)
        theta_star = tuple(parse_rational(v) for v in theta_star)
        if A.shape != A_star.shape or not A.is_square:
            raise DimensionMismatch(f"A is {A.shape} but A* is {A_star.shape}")
        if len(theta) != len(theta_star):
            raise DimensionMismatch(
                f"{len(theta)} eigenvalues for A but {len(theta_star)} for A*"
            )
        E = primitive_idempotents(A, theta)
        E_star = primitive_idempotents(A_star, theta_star)
        return cls(
            q_ctx=ctx.with_diameter(len(theta) - 1),
            A=A,
            A_star=A_star,
            E=E,
            E_star=E_star,
            theta=theta,
            theta_star=theta_star,
        )

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def d(self) -> int:
        return len(self.theta) - 1

    def parallel_violations(self) -> List[str]:
        """Failed parallel-system identities, as short labels."""
        problems = []
        n = self.n
        identity = Matrix.identity(n)
        zero = Matrix.zeros(n, n)
        for label, M, family, values in (
            ("E", self.A, self.E, self.theta),
            ("E*", self.A_star, self.E_star, self.theta_star),
        ):
            total = reduce(lambda acc, e: acc + e, family, zero)
            if total != identity:
                problems.append(f"sum of {label} is not I")
            for i, Ei in enumerate(family):
                for j, Ej in enumerate(family):
                    expected = Ei if i == j else zero
                    if Ei @ Ej != expected:
                        problems.append(f"{label}_{i}{label}_{j} wrong")
                scaled = Ei * values[i]
                if M @ Ei != scaled or Ei @ M != scaled:
                    problems.append(f"{label}_{i} does not carry eigenvalue {values[i]}")
        return problems

    def reverse_E(self) -> "ParallelSystem":
        return replace(self, E=self.E[::-1], theta=self.theta[::-1])

    def reverse_E_star(self) -> "ParallelSystem":
        return replace(self, E_star=self.E_star[::-1], theta_star=self.theta_star[::-1])

    def rescaled(self, a: RationalLike, a_star: RationalLike) -> "ParallelSystem":
        """(aA, a*A*) with the same idempotents and rescaled eigenvalues."""
        a, a_star = parse_rational(a), parse_rational(a_star)
        return replace(
            self,
            A=self.A * a,
            A_star=self.A_star * a_star,
            theta=tuple(a * v for v in self.theta),
            theta_star=tuple(a_star * v for v in self.theta_star),
        )


def relatives(ps: ParallelSystem) -> Tuple[ParallelSystem, ParallelSystem, ParallelSystem, ParallelSystem]:
    """(ps, E reversed, E* reversed, both reversed)"""
    return (ps, ps.reverse_E(), ps.reverse_E_star(), ps.reverse_E().reverse_E_star())


# ============================================================================
# Thin constructor
# ============================================================================
def from_parameter_array_thin(pa: ParameterArray, ctx: QContext) -> ParallelSystem:
    """
    Candidate pair in the split basis: A lower bidiagonal with subdiagonal 1,
    A* upper bidiagonal with superdiagonal φᵢ = ζᵢ/ζᵢ₋₁. Callers must still
    run verify_system; for d >= 2 the candidate need not be a TD system.
    """
    if any(z == 0 for z in pa.zeta[1:]):
        raise ThinConstructionError()
    n = pa.d + 1
    phi = ladder_products(pa.zeta)
    A_rows = [[Fraction(0)] * n for _ in range(n)]
    A_star_rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        A_rows[i][i] = pa.theta[i]
        A_star_rows[i][i] = pa.theta_star[i]
        if i + 1 < n:
            A_rows[i + 1][i] = Fraction(1)
            A_star_rows[i][i + 1] = phi[i]
    logger.debug(f"Thin candidate d={pa.d}, phi={[str(p) for p in phi]}")
    return ParallelSystem.from_matrices(
        Matrix.from_rows(A_rows),
        Matrix.from_rows(A_star_rows),
        pa.theta,
        pa.theta_star,
        ctx.with_diameter(pa.d),
    )


# ============================================================================
# Normalization to the geometric spectra q^{2i-d}, q^{d-2i}
# ============================================================================
def _geometric_ratio(values: Sequence[Fraction]) -> Fraction:
    if len(values) < 2:
        return Fraction(1)
    if values[0] == 0:
        return Fraction(0)
    ratio = values[1] / values[0]
    for i, v in enumerate(values):
        if v != values[0] * ratio ** i:
            return Fraction(0)
    return ratio


def normalize_geometric(ps: ParallelSystem) -> ParallelSystem:
    """Reorder and rescale so that θᵢ = q^{2i−d} and θ*ᵢ = q^{d−2i}."""
    ctx = ps.q_ctx
    q2 = ctx.power(2)
    d = ps.d
    if d > 0:
        ratio = _geometric_ratio(ps.theta)
        if ratio == 1 / q2:
            ps = ps.reverse_E()
        elif ratio != q2:
            raise NonGeometricSpectrum(
                f"eigenvalues {[str(v) for v in ps.theta]} are not a q^2-progression"
            )
        ratio_star = _geometric_ratio(ps.theta_star)
        if ratio_star == q2:
            ps = ps.reverse_E_star()
        elif ratio_star != 1 / q2:
            raise NonGeometricSpectrum(
                f"dual eigenvalues {[str(v) for v in ps.theta_star]} are not a q^-2-progression"
            )
    if ps.theta[0] == 0 or ps.theta_star[0] == 0:
        raise NonGeometricSpectrum("cannot normalize a zero eigenvalue")
    a = 1 / (ctx.power(d) * ps.theta[0])
    a_star = ctx.power(d) / ps.theta_star[0]
    logger.info(f"Normalizing with A -> ({a})A, A* -> ({a_star})A*")
    return ps.rescaled(a, a_star)


# ============================================================================
# Projector formulas & the rank-one trace lemma
# ============================================================================
def check_projector_formulas(ps: ParallelSystem) -> bool:
    """E₀ = η_d(A)/η_d(θ₀), E_d = τ_d(A)/τ_d(θ_d), and the starred pair."""
    d = ps.d
    for M, E, theta in ((ps.A, ps.E, ps.theta), (ps.A_star, ps.E_star, ps.theta_star)):
        eta_d = eta_polys(theta)[d]
        tau_d = tau_polys(theta)[d]
        if mat_poly_eval(eta_d, M) * (1 / eta_d(theta[0])) != E[0]:
            return False
        if mat_poly_eval(tau_d, M) * (1 / tau_d(theta[d])) != E[d]:
            return False
    return True


def rank_one_trace_lemma(E: Matrix, F: Matrix) -> Tuple[bool, bool]:
    """(EFE = tr(FE)·E, tr(FE) ≠ 0 ⟺ EFE ≠ 0) for a rank-one idempotent E."""
    c = (F @ E).trace()
    sandwich = E @ F @ E
    return sandwich == E * c, (c != 0) == (not sandwich.is_zero)
