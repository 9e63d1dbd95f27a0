# ============================================================================
# Exact Linear Algebra - Public API
# ============================================================================
from app.services.linalg.matrix import (
    Matrix,
    Vector,
    mat_mul,
    mat_add,
    mat_scale,
    mat_poly_eval,
    trace,
    rank,
    inverse,
    kernel_basis,
)
from app.services.linalg.subspace import (
    Subspace,
    subspace_sum,
    subspace_intersect,
    image,
    maps_into,
    column_space,
    direct_sum_check,
)
from app.services.linalg.algebra import (
    generated_algebra_dim,
    invariant_closure,
    invariant_subspace_witness,
    rational_eigenvalues,
)

__all__ = [
    "Matrix",
    "Vector",
    "mat_mul",
    "mat_add",
    "mat_scale",
    "mat_poly_eval",
    "trace",
    "rank",
    "inverse",
    "kernel_basis",
    "Subspace",
    "subspace_sum",
    "subspace_intersect",
    "image",
    "maps_into",
    "column_space",
    "direct_sum_check",
    "generated_algebra_dim",
    "invariant_closure",
    "invariant_subspace_witness",
    "rational_eigenvalues",
]
