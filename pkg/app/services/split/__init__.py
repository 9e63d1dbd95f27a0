# ============================================================================
# Split Decomposition - Public API
# ============================================================================
from app.services.split.decomposition import (
    split_decomposition,
    verify_split,
    ladder_eigenvalue,
    check_ladder_inclusions,
    check_dimension_equalities,
    split_basis,
)

__all__ = [
    "split_decomposition",
    "verify_split",
    "ladder_eigenvalue",
    "check_ladder_inclusions",
    "check_dimension_equalities",
    "split_basis",
]
