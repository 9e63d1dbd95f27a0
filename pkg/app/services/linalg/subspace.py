# ============================================================================
# Subspaces of Q^n
# ============================================================================
"""
Subspaces carried by a canonical basis: the nonzero rows of the reduced row
echelon form of any spanning set. Two subspaces are equal exactly when their
canonical bases are equal, so `==` and `hash` are structural.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from app.core.exceptions import DimensionMismatch
from app.services.linalg.matrix import Matrix, Vector, from_domain, to_domain
from app.services.scalars import RationalLike

logger = logging.getLogger(__name__)


def _canonical_rows(vectors: Sequence[Sequence[RationalLike]], n: int) -> Tuple[Vector, ...]:
    if not vectors:
        return ()
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in a subspace of Q^{n}")
    dm = DomainMatrix([[to_domain(x) for x in v] for v in vectors], (len(vectors), n), QQ)
    reduced, pivots = dm.rref()
    rows = reduced.to_list()[:len(pivots)]
    return tuple(tuple(from_domain(x) for x in row) for row in rows)


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    vectors: Tuple[Vector, ...] = ()

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise DimensionMismatch(f"ambient dimension must be positive, got {self.ambient_dim}")
        object.__setattr__(self, "vectors", _canonical_rows(list(self.vectors), self.ambient_dim))

    # ==================== Constructors ====================
    @classmethod
    def span(cls, vectors: Iterable[Sequence[RationalLike]], ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(tuple(v) for v in vectors))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(Matrix.identity(n).entries()))

    # ==================== Queries ====================
    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def basis_matrix(self) -> Optional[Matrix]:
        """Basis vectors as columns; None for the zero subspace."""
        if not self.vectors:
            return None
        return Matrix.from_columns(self.vectors)

    def contains(self, vector: Sequence[RationalLike]) -> bool:
        return Subspace(self.ambient_dim, self.vectors + (tuple(vector),)).dim == self.dim

    def is_subspace_of(self, other: "Subspace") -> bool:
        return subspace_sum(self, other).dim == other.dim

    def __str__(self) -> str:
        if not self.vectors:
            return "span{}"
        body = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vectors)
        return f"span{{{body}}}"


# ============================================================================
# Operations
# ============================================================================
def _same_ambient(S: Subspace, T: Subspace):
    if S.ambient_dim != T.ambient_dim:
        raise DimensionMismatch(
            f"subspaces live in Q^{S.ambient_dim} and Q^{T.ambient_dim}"
        )


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    _same_ambient(S, T)
    return Subspace(S.ambient_dim, S.vectors + T.vectors)


def subspace_intersect(S: Subspace, T: Subspace) -> Subspace:
    """S ∩ T from the kernel of [S | -T]."""
    _same_ambient(S, T)
    if S.is_zero or T.is_zero:
        return Subspace.zero(S.ambient_dim)
    stacked = Matrix.from_columns(list(S.vectors) + [tuple(-x for x in v) for v in T.vectors])
    n = S.ambient_dim
    common = []
    for coeffs in stacked.kernel_basis():
        w = [Fraction(0)] * n
        for a, v in zip(coeffs[:S.dim], S.vectors):
            if a:
                w = [wi + a * vi for wi, vi in zip(w, v)]
        common.append(w)
    return Subspace(n, tuple(tuple(w) for w in common))


def image(M: Matrix, S: Subspace) -> Subspace:
    if M.cols != S.ambient_dim:
        raise DimensionMismatch(f"{M.shape} matrix cannot act on Q^{S.ambient_dim}")
    return Subspace(M.rows, tuple(M.apply(v) for v in S.vectors))


def maps_into(M: Matrix, S: Subspace, T: Subspace) -> bool:
    """True when M S ⊆ T."""
    if M.rows != T.ambient_dim:
        raise DimensionMismatch(f"{M.shape} matrix cannot map into Q^{T.ambient_dim}")
    return image(M, S).is_subspace_of(T)


def column_space(M: Matrix) -> Subspace:
    return Subspace(M.rows, tuple(M.columns()))


def direct_sum_check(parts: Sequence[Subspace], n: int) -> bool:
    """True when the parts are independent and together span Q^n."""
    total = sum(p.dim for p in parts)
    if total != n:
        return False
    vectors = tuple(v for p in parts for v in p.vectors)
    return Subspace(n, vectors).dim == n
