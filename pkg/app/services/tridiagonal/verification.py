# ============================================================================
# Axiom Verification & Relation Residuals
# ============================================================================
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from app.config import get_settings
from app.core.exceptions import DimensionMismatch
from app.services.linalg import Matrix, Subspace, generated_algebra_dim, invariant_subspace_witness
from app.services.scalars import QContext, RationalLike, parse_rational, q_int
from app.services.tridiagonal.system import ParallelSystem

logger = logging.getLogger(__name__)

PARALLEL = "parallel"
BAND = "band"
IRREDUCIBILITY = "irreducibility"


@dataclass(frozen=True)
class AxiomReport:
    is_parallel: bool
    is_sharp: bool
    td_band_ok: bool
    irreducible: bool
    mock_vi_ok: bool
    qserre_ok: bool
    algebra_dim: int
    witness: Optional[Subspace] = None

    @property
    def is_td_system(self) -> bool:
        return self.is_parallel and self.td_band_ok and self.irreducible

    @property
    def is_mock_td_system(self) -> bool:
        return self.is_parallel and self.td_band_ok and self.mock_vi_ok

    @property
    def failing_axiom(self) -> Optional[str]:
        if not self.is_parallel:
            return PARALLEL
        if not self.td_band_ok:
            return BAND
        if not self.irreducible:
            return IRREDUCIBILITY
        return None

    def to_dict(self) -> Dict:
        return {
            "is_parallel": self.is_parallel,
            "is_sharp": self.is_sharp,
            "td_band_ok": self.td_band_ok,
            "irreducible": self.irreducible,
            "mock_vi_ok": self.mock_vi_ok,
            "qserre_ok": self.qserre_ok,
            "is_td_system": self.is_td_system,
            "is_mock_td_system": self.is_mock_td_system,
            "algebra_dim": self.algebra_dim,
            "failing_axiom": self.failing_axiom,
        }


def _check_shapes(ps: ParallelSystem):
    n = ps.n
    if ps.A.shape != (n, n) or ps.A_star.shape != (n, n):
        raise DimensionMismatch(f"A is {ps.A.shape}, A* is {ps.A_star.shape}")
    if len(ps.E) != len(ps.theta) or len(ps.E_star) != len(ps.theta_star):
        raise DimensionMismatch("idempotent and eigenvalue lists differ in length")
    if len(ps.E) != len(ps.E_star):
        raise DimensionMismatch(f"{len(ps.E)} idempotents for A but {len(ps.E_star)} for A*")
    for E in ps.E + ps.E_star:
        if E.shape != (n, n):
            raise DimensionMismatch(f"idempotent of shape {E.shape} in a system on Q^{n}")


def _band_ok(E, M) -> bool:
    d = len(E) - 1
    for i in range(d + 1):
        for j in range(d + 1):
            if abs(i - j) > 1 and not (E[i] @ M @ E[j]).is_zero:
                logger.debug(f"Band condition fails at ({i}, {j})")
                return False
    return True


def verify_system(ps: ParallelSystem) -> AxiomReport:
    """Check every tridiagonal / mock tridiagonal axiom and report flags."""
    _check_shapes(ps)
    settings = get_settings()
    n = ps.n

    violations = ps.parallel_violations()
    for v in violations:
        logger.debug(f"Parallel-system violation: {v}")

    td_band_ok = _band_ok(ps.E, ps.A_star) and _band_ok(ps.E_star, ps.A)

    algebra_dim = generated_algebra_dim([ps.A, ps.A_star])
    irreducible = algebra_dim == n * n

    E0s = ps.E_star[0]
    mock_vi_ok = not (E0s @ ps.E[0] @ E0s).is_zero and not (E0s @ ps.E[-1] @ E0s).is_zero
    is_sharp = E0s.rank() == 1

    r1, r2 = qserre_residuals(ps.A, ps.A_star, ps.q_ctx)
    qserre_ok = r1.is_zero and r2.is_zero

    witness = None
    if not irreducible:
        witness = invariant_subspace_witness(ps.A, ps.A_star, settings.WITNESS_COEFF_BOUND)

    report = AxiomReport(
        is_parallel=not violations,
        is_sharp=is_sharp,
        td_band_ok=td_band_ok,
        irreducible=irreducible,
        mock_vi_ok=mock_vi_ok,
        qserre_ok=qserre_ok,
        algebra_dim=algebra_dim,
        witness=witness,
    )
    logger.debug(f"Verified system on Q^{n}: {report.to_dict()}")
    return report


# ============================================================================
# Residuals
# ============================================================================
def _square_pair(A: Matrix, A_star: Matrix):
    if not A.is_square or A.shape != A_star.shape:
        raise DimensionMismatch(f"need two square matrices of one size, got {A.shape} and {A_star.shape}")


def qserre_residuals(A: Matrix, A_star: Matrix, ctx: QContext) -> Tuple[Matrix, Matrix]:
    """Left-hand sides of both cubic q-Serre relations."""
    _square_pair(A, A_star)
    c = q_int(ctx, 3)

    def cubic(X: Matrix, Y: Matrix) -> Matrix:
        X2 = X @ X
        X3 = X2 @ X
        return X3 @ Y - (X2 @ Y @ X) * c + (X @ Y @ X2) * c - Y @ X3

    return cubic(A, A_star), cubic(A_star, A)


def tridiagonal_relation_residuals(
    A: Matrix,
    A_star: Matrix,
    beta: RationalLike,
    gamma: RationalLike,
    gamma_star: RationalLike,
    rho: RationalLike,
    rho_star: RationalLike,
) -> Tuple[Matrix, Matrix]:
    """Both commutator expressions of the tridiagonal relations."""
    _square_pair(A, A_star)
    beta, gamma, gamma_star = parse_rational(beta), parse_rational(gamma), parse_rational(gamma_star)
    rho, rho_star = parse_rational(rho), parse_rational(rho_star)

    def inner(X: Matrix, Y: Matrix, g, r) -> Matrix:
        return (
            X @ X @ Y
            - (X @ Y @ X) * beta
            + Y @ X @ X
            - (X @ Y + Y @ X) * g
            - Y * r
        )

    first = inner(A, A_star, gamma, rho)
    second = inner(A_star, A, gamma_star, rho_star)
    return A @ first - first @ A, A_star @ second - second @ A_star
