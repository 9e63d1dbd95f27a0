# ============================================================================
# Split Decomposition
# ============================================================================
"""
Uᵢ = (E*₀V + ⋯ + E*ᵢV) ∩ (EᵢV + ⋯ + E_dV), its defining inclusions, and the
ladder map whose eigenvalue on U₀ is ζᵢ.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from app.core.exceptions import DimensionMismatch, NotADecomposition, SplitStructureError
from app.services.linalg import (
    Matrix,
    Subspace,
    column_space,
    direct_sum_check,
    maps_into,
    subspace_intersect,
    subspace_sum,
)
from app.services.tridiagonal import ParallelSystem

logger = logging.getLogger(__name__)


def _partial_sums(spaces: Sequence[Subspace], n: int) -> List[Subspace]:
    """S_i = spaces[0] + ... + spaces[i]"""
    sums = []
    running = Subspace.zero(n)
    for s in spaces:
        running = subspace_sum(running, s)
        sums.append(running)
    return sums


def split_decomposition(ps: ParallelSystem) -> Tuple[Subspace, ...]:
    n = ps.n
    d = ps.d
    EV = [column_space(E) for E in ps.E]
    EsV = [column_space(E) for E in ps.E_star]
    lower = _partial_sums(EsV, n)
    upper = list(reversed(_partial_sums(list(reversed(EV)), n)))
    U = tuple(subspace_intersect(lower[i], upper[i]) for i in range(d + 1))
    if not direct_sum_check(U, n):
        dims = [u.dim for u in U]
        logger.warning(f"Split formula gives dims {dims} on Q^{n}; not a decomposition")
        raise NotADecomposition(f"split formula gives subspaces of dimensions {dims}, not a decomposition of Q^{n}")
    return U


def _neighbour(U: Sequence[Subspace], i: int, n: int) -> Subspace:
    if 0 <= i < len(U):
        return U[i]
    return Subspace.zero(n)


def verify_split(ps: ParallelSystem, U: Sequence[Subspace]) -> bool:
    """
    (A − θᵢ)Uᵢ ⊆ Uᵢ₊₁, (A* − θ*ᵢ)Uᵢ ⊆ Uᵢ₋₁, and the partial-sum equalities
    U₀+⋯+Uᵢ = E*₀V+⋯+E*ᵢV, Uᵢ+⋯+U_d = EᵢV+⋯+E_dV.
    """
    n = ps.n
    d = ps.d
    if len(U) != d + 1:
        raise DimensionMismatch(f"expected {d + 1} subspaces, got {len(U)}")
    for u in U:
        if u.ambient_dim != n:
            raise DimensionMismatch(f"subspace of Q^{u.ambient_dim} in a system on Q^{n}")

    for i in range(d + 1):
        if not maps_into(ps.A.shift(ps.theta[i]), U[i], _neighbour(U, i + 1, n)):
            logger.debug(f"Inclusion (A - θ_{i})U_{i} ⊆ U_{i + 1} fails")
            return False
        if not maps_into(ps.A_star.shift(ps.theta_star[i]), U[i], _neighbour(U, i - 1, n)):
            logger.debug(f"Inclusion (A* - θ*_{i})U_{i} ⊆ U_{i - 1} fails")
            return False

    EV = [column_space(E) for E in ps.E]
    EsV = [column_space(E) for E in ps.E_star]
    if _partial_sums(U, n) != _partial_sums(EsV, n):
        logger.debug("Partial sums of U do not match those of E*V")
        return False
    if _partial_sums(list(reversed(U)), n) != _partial_sums(list(reversed(EV)), n):
        logger.debug("Tail sums of U do not match those of EV")
        return False
    return True


def _raising(ps: ParallelSystem, i: int) -> Matrix:
    """(A − θᵢ₋₁I)⋯(A − θ₀I)"""
    M = Matrix.identity(ps.n)
    for h in range(i):
        M = ps.A.shift(ps.theta[h]) @ M
    return M


def _lowering(ps: ParallelSystem, i: int) -> Matrix:
    """(A* − θ*₁I)⋯(A* − θ*ᵢI)"""
    M = Matrix.identity(ps.n)
    for h in range(1, i + 1):
        M = M @ ps.A_star.shift(ps.theta_star[h])
    return M


def ladder_eigenvalue(ps: ParallelSystem, U: Sequence[Subspace], i: int) -> Fraction:
    """Scalar by which the lowering-after-raising ladder acts on U₀."""
    if U[0].dim != 1:
        raise SplitStructureError(f"ladder needs dim U_0 = 1, got {U[0].dim}")
    v = U[0].vectors[0]
    w = (_lowering(ps, i) @ _raising(ps, i)).apply(v)
    pivot = next(k for k, x in enumerate(v) if x != 0)
    scalar = w[pivot] / v[pivot]
    if any(wk != scalar * vk for wk, vk in zip(w, v)):
        logger.warning(f"Ladder map at i={i} does not act as a scalar on U_0")
        raise SplitStructureError(f"ladder map at i = {i} is not scalar on U_0")
    return scalar


def check_ladder_inclusions(ps: ParallelSystem, U: Sequence[Subspace]) -> bool:
    """τᵢ(A)U₀ ⊆ Uᵢ and (A*−θ*₁)⋯(A*−θ*ᵢ)Uᵢ ⊆ U₀ for every i."""
    for i in range(ps.d + 1):
        if not maps_into(_raising(ps, i), U[0], U[i]):
            return False
        if not maps_into(_lowering(ps, i), U[i], U[0]):
            return False
    return True


def check_dimension_equalities(ps: ParallelSystem, U: Sequence[Subspace]) -> bool:
    """dim EᵢV = dim E*ᵢV = dim Uᵢ"""
    for E, Es, u in zip(ps.E, ps.E_star, U):
        if not (E.rank() == Es.rank() == u.dim):
            return False
    return True


def split_basis(U: Sequence[Subspace]) -> Matrix:
    """Columns: the canonical bases of U₀, …, U_d in order."""
    return Matrix.from_columns([v for u in U for v in u.vectors])
