# ============================================================================
# The Map K
# ============================================================================
from __future__ import annotations

import logging
from typing import Sequence, Tuple

from app.core.exceptions import DimensionMismatch, NonGeometricSpectrum, NotADecomposition
from app.services.linalg import Matrix, Subspace, direct_sum_check
from app.services.scalars import QContext
from app.services.split import split_basis
from app.services.tridiagonal import ParallelSystem, has_normalized_spectrum

logger = logging.getLogger(__name__)


def k_map(ps: ParallelSystem, U: Sequence[Subspace]) -> Matrix:
    """K acts on Uᵢ as q^{d−2i}: K = P·diag(…)·P⁻¹ with P the split basis."""
    ctx = ps.q_ctx
    if not has_normalized_spectrum(ps.theta, ps.theta_star, ctx):
        logger.warning(f"Spectra {[str(v) for v in ps.theta]} / {[str(v) for v in ps.theta_star]} are not normalized")
        raise NonGeometricSpectrum()
    if len(U) != ps.d + 1 or not direct_sum_check(U, ps.n):
        raise NotADecomposition("K needs the split decomposition of the system")
    P = split_basis(U)
    core = Matrix.diagonal([ctx.power(ps.d - 2 * i) for i, u in enumerate(U) for _ in range(u.dim)])
    return P @ core @ P.inverse()


def k_relation_residuals(
    K: Matrix, A: Matrix, A_star: Matrix, ctx: QContext
) -> Tuple[Matrix, Matrix]:
    """
    (qKA − q⁻¹AK)/(q − q⁻¹) − I and (qK⁻¹A* − q⁻¹A*K⁻¹)/(q − q⁻¹) − I.
    Raises SingularMatrix when K is not invertible.
    """
    if not (K.shape == A.shape == A_star.shape) or not K.is_square:
        raise DimensionMismatch(f"K {K.shape}, A {A.shape}, A* {A_star.shape} must be square of one size")
    q = ctx.q
    scale = 1 / ctx.q_minus_q_inverse
    identity = Matrix.identity(K.rows)
    K_inv = K.inverse()
    first = ((K @ A) * q - (A @ K) * (1 / q)) * scale - identity
    second = ((K_inv @ A_star) * q - (A_star @ K_inv) * (1 / q)) * scale - identity
    return first, second


def verify_k_relations(K: Matrix, A: Matrix, A_star: Matrix, ctx: QContext) -> bool:
    first, second = k_relation_residuals(K, A, A_star, ctx)
    return first.is_zero and second.is_zero
