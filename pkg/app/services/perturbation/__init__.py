# ============================================================================
# Perturbation - Public API
# ============================================================================
from app.services.perturbation.k_map import k_map, k_relation_residuals, verify_k_relations
from app.services.perturbation.engine import (
    PerturbedSystem,
    PerturbationLemmaReport,
    RoundTripResult,
    perturb,
    verify_perturbation_lemmas,
    perturbed_split_sequence,
    perturbation_partner,
    dual_round_trip,
)
from app.services.perturbation.verdict import (
    TheoremVerdict,
    base_polynomial,
    random_rationals,
    require_qserre_td,
    scan_points,
    theorem_scan,
    theorem_verdict,
)

__all__ = [
    "k_map",
    "k_relation_residuals",
    "verify_k_relations",
    "PerturbedSystem",
    "PerturbationLemmaReport",
    "RoundTripResult",
    "perturb",
    "verify_perturbation_lemmas",
    "perturbed_split_sequence",
    "perturbation_partner",
    "dual_round_trip",
    "TheoremVerdict",
    "base_polynomial",
    "random_rationals",
    "require_qserre_td",
    "scan_points",
    "theorem_scan",
    "theorem_verdict",
]
