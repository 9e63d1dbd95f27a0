# ============================================================================
# Isomorphism Search
# ============================================================================
from __future__ import annotations

import itertools
import logging
from typing import Iterator, List, Optional, Tuple

from app.config import get_settings
from app.core.exceptions import DimensionMismatch
from app.services.linalg import Matrix
from app.services.tridiagonal.system import ParallelSystem

logger = logging.getLogger(__name__)

# Full coefficient grids are only enumerated up to this many solution directions.
MAX_GRID_DIRECTIONS = 4


def _unit(n: int, r: int, c: int) -> Matrix:
    rows = [[1 if (i, j) == (r, c) else 0 for j in range(n)] for i in range(n)]
    return Matrix.from_rows(rows)


def intertwiner_space(ps1: ParallelSystem, ps2: ParallelSystem) -> List[Matrix]:
    """Basis of {S : S A₁ = A₂ S, S A*₁ = A*₂ S}."""
    n = ps1.n
    columns = []
    for r in range(n):
        for c in range(n):
            U = _unit(n, r, c)
            columns.append(
                (U @ ps1.A - ps2.A @ U).flat() + (U @ ps1.A_star - ps2.A_star @ U).flat()
            )
    coefficients = Matrix.from_columns(columns)
    return [Matrix.from_flat(v, n) for v in coefficients.kernel_basis()]


def _coefficient_vectors(k: int, bound: int) -> Iterator[Tuple[int, ...]]:
    for i in range(k):
        yield tuple(1 if j == i else 0 for j in range(k))
    if k > MAX_GRID_DIRECTIONS:
        yield (1,) * k
        return
    values = range(-bound, bound + 1)
    for combo in itertools.product(values, repeat=k):
        if sum(1 for c in combo if c) > 1:
            yield combo


def _normalized(S: Matrix) -> Matrix:
    for v in S.flat():
        if v != 0:
            return S * (1 / v)
    return S


def find_isomorphism(
    ps1: ParallelSystem, ps2: ParallelSystem, bound: Optional[int] = None
) -> Optional[Matrix]:
    """An invertible S with S A₁ = A₂ S and S A*₁ = A*₂ S, or None."""
    if ps1.n != ps2.n:
        raise DimensionMismatch(f"systems live on Q^{ps1.n} and Q^{ps2.n}")
    if ps1.theta != ps2.theta or ps1.theta_star != ps2.theta_star:
        logger.info("Eigenvalue sequences differ; no isomorphism of parallel systems")
        return None
    bound = bound if bound is not None else get_settings().ISO_SEARCH_BOUND

    solutions = intertwiner_space(ps1, ps2)
    logger.debug(f"Intertwiner space has dimension {len(solutions)}")
    if not solutions:
        return None

    n = ps1.n
    for coeffs in _coefficient_vectors(len(solutions), bound):
        S = Matrix.zeros(n, n)
        for c, basis in zip(coeffs, solutions):
            if c:
                S = S + basis * c
        if S.determinant() != 0:
            return _normalized(S)
    logger.info("No invertible intertwiner found within the search bound")
    return None


def conjugate(ps: ParallelSystem, S: Matrix) -> ParallelSystem:
    """The system (S A S⁻¹, S A* S⁻¹) with the same eigenvalue orderings."""
    S_inv = S.inverse()
    return ParallelSystem.from_matrices(
        S @ ps.A @ S_inv, S @ ps.A_star @ S_inv, ps.theta, ps.theta_star, ps.q_ctx
    )
