# ============================================================================
# Tridiagonal Systems - Public API
# ============================================================================
from app.services.tridiagonal.parameter_array import (
    ParameterArray,
    PolynomialFamilies,
    eta_tau_polys,
    eta_polys,
    tau_polys,
    check_polysum,
    geometric_eigenvalues,
    has_normalized_spectrum,
    is_qserre_spectrum,
)
from app.services.tridiagonal.system import (
    ParallelSystem,
    primitive_idempotents,
    relatives,
    from_parameter_array_thin,
    normalize_geometric,
    check_projector_formulas,
    rank_one_trace_lemma,
)
from app.services.tridiagonal.verification import (
    AxiomReport,
    verify_system,
    qserre_residuals,
    tridiagonal_relation_residuals,
)
from app.services.tridiagonal.split_sequence import (
    TraceIdentityReport,
    chi,
    split_sequence,
    parameter_array,
    trace_identities,
    require_sharp,
)
from app.services.tridiagonal.isomorphism import conjugate, find_isomorphism, intertwiner_space
from app.services.tridiagonal.seeds import SEEDS, build_seed, load_seed, small_rationals, sweep_thin_seed

__all__ = [
    "ParameterArray",
    "PolynomialFamilies",
    "eta_tau_polys",
    "eta_polys",
    "tau_polys",
    "check_polysum",
    "geometric_eigenvalues",
    "has_normalized_spectrum",
    "is_qserre_spectrum",
    "ParallelSystem",
    "primitive_idempotents",
    "relatives",
    "from_parameter_array_thin",
    "normalize_geometric",
    "check_projector_formulas",
    "rank_one_trace_lemma",
    "AxiomReport",
    "verify_system",
    "qserre_residuals",
    "tridiagonal_relation_residuals",
    "TraceIdentityReport",
    "chi",
    "split_sequence",
    "parameter_array",
    "trace_identities",
    "require_sharp",
    "conjugate",
    "find_isomorphism",
    "intertwiner_space",
    "SEEDS",
    "build_seed",
    "load_seed",
    "small_rationals",
    "sweep_thin_seed",
]
