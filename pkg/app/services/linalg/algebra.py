# ============================================================================
# Generated Algebras & Invariant Subspaces
# ============================================================================
"""
Irreducibility tools: the dimension of the algebra generated by a set of
matrices, and a search for a proper nonzero subspace invariant under a pair.
"""
from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

from app.core.exceptions import DimensionMismatch
from app.services.linalg.matrix import Matrix, Vector
from app.services.linalg.subspace import Subspace

logger = logging.getLogger(__name__)


def _check_square_family(gens: Sequence[Matrix]) -> int:
    if not gens:
        raise DimensionMismatch("need at least one generator")
    n = gens[0].rows
    for g in gens:
        if g.shape != (n, n):
            raise DimensionMismatch(f"generators must all be {n}x{n}, got {g.shape}")
    return n


def generated_algebra_dim(gens: Sequence[Matrix]) -> int:
    """Dimension of the unital algebra generated by gens (n^2 means irreducible over Q)."""
    n = _check_square_family(gens)
    current = Subspace(n * n, (Matrix.identity(n).flat(),))
    rounds = 0
    while True:
        rounds += 1
        products = tuple(
            (g @ Matrix.from_flat(v, n)).flat() for v in current.vectors for g in gens
        )
        grown = Subspace(n * n, current.vectors + products)
        if grown.dim == current.dim:
            logger.debug(f"Algebra closed after {rounds} rounds, dim {grown.dim}")
            return grown.dim
        current = grown


def rational_eigenvalues(M: Matrix) -> List[Fraction]:
    return M.charpoly().rational_roots()


def invariant_closure(vectors: Sequence[Vector], gens: Sequence[Matrix]) -> Subspace:
    """Smallest subspace containing vectors and stable under every generator."""
    n = _check_square_family(gens)
    current = Subspace(n, tuple(vectors))
    while True:
        images = tuple(g.apply(v) for v in current.vectors for g in gens)
        grown = Subspace(n, current.vectors + images)
        if grown.dim == current.dim:
            return grown
        current = grown


def _candidates(A: Matrix, B: Matrix, coeff_bound: int) -> Iterator[Vector]:
    eigenvectors: List[Vector] = []
    for M in (A, B):
        for value in sorted(rational_eigenvalues(M), reverse=True):
            for v in M.shift(value).kernel_basis():
                eigenvectors.append(v)
                yield v
    coeffs = [c for c in range(-coeff_bound, coeff_bound + 1) if c != 0]
    for v, w in itertools.combinations(eigenvectors, 2):
        for c in coeffs:
            yield tuple(a + c * b for a, b in zip(v, w))


def invariant_subspace_witness(
    A: Matrix, B: Matrix, coeff_bound: int = 2
) -> Optional[Subspace]:
    """
    Search for W with 0 ≠ W ≠ Q^n, AW ⊆ W and BW ⊆ W.

    Candidates are rational eigenvectors of A then of B (eigenvalues in
    descending order), followed by small integer combinations of those.
    Returns None when no candidate closes to a proper subspace.
    """
    n = _check_square_family([A, B])
    if n == 1:
        return None
    for v in _candidates(A, B, coeff_bound):
        if all(x == 0 for x in v):
            continue
        closure = invariant_closure([v], [A, B])
        if 0 < closure.dim < n:
            logger.debug(f"Invariant subspace of dim {closure.dim} found")
            return closure
    return None
