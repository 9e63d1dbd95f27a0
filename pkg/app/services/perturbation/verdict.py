# ============================================================================
# Theorem Verdicts & Scans
# ============================================================================
"""
For each t, compare the prediction read off the Drinfel'd polynomial with the
actual axiom check on the perturbed system. Disagreement is fatal.
"""
from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from app.config import get_settings
from app.core.exceptions import NonGeometricSpectrum, TheoremMismatch, VerificationFailed
from app.services.drinfeld import DrinfeldPolynomial, drinfeld_poly, predict_td, rational_bad_t
from app.services.linalg import Subspace
from app.services.scalars import RationalLike, parse_rational
from app.services.tridiagonal import (
    AxiomReport,
    ParallelSystem,
    has_normalized_spectrum,
    split_sequence,
    verify_system,
)
from app.services.perturbation.engine import perturb

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheoremVerdict:
    t: Fraction
    predicted: bool
    actual: bool
    failing_axiom: Optional[str] = None
    witness: Optional[Subspace] = None

    def to_dict(self) -> Dict:
        return {
            "t": str(self.t),
            "predicted": self.predicted,
            "actual": self.actual,
            "failing_axiom": self.failing_axiom,
            "witness": str(self.witness) if self.witness is not None else None,
        }


def require_qserre_td(ps: ParallelSystem) -> AxiomReport:
    """Verify that ps is a normalized tridiagonal system of q-Serre type."""
    if not has_normalized_spectrum(ps.theta, ps.theta_star, ps.q_ctx):
        raise NonGeometricSpectrum()
    report = verify_system(ps)
    if not report.is_td_system:
        raise VerificationFailed(
            f"base system is not a tridiagonal system ({report.failing_axiom})",
            failing_axiom=report.failing_axiom,
        )
    if not report.qserre_ok:
        raise VerificationFailed("base system does not satisfy the q-Serre relations", failing_axiom="qserre")
    return report


def base_polynomial(ps: ParallelSystem) -> DrinfeldPolynomial:
    return drinfeld_poly(split_sequence(ps), ps.q_ctx)


def theorem_verdict(
    ps: ParallelSystem,
    t: RationalLike,
    P: Optional[DrinfeldPolynomial] = None,
    *,
    base_checked: bool = False,
) -> TheoremVerdict:
    """Predicted and actual verdict at t. The base must be a q-Serre TD system."""
    if not base_checked:
        require_qserre_td(ps)
    t = parse_rational(t)
    P = P or base_polynomial(ps)
    predicted = predict_td(P, t)
    report = verify_system(perturb(ps, t).system)
    actual = report.is_td_system
    if predicted != actual:
        logger.error(f"Theorem mismatch at t={t}: predicted {predicted}, actual {actual}")
        raise TheoremMismatch(t, predicted, actual)
    logger.info(f"t={t}: TD system {actual} (failing: {report.failing_axiom})")
    return TheoremVerdict(
        t=t,
        predicted=predicted,
        actual=actual,
        failing_axiom=report.failing_axiom,
        witness=report.witness,
    )


def _verdict_task(args: Tuple[ParallelSystem, Fraction, DrinfeldPolynomial]) -> TheoremVerdict:
    ps, t, P = args
    return theorem_verdict(ps, t, P, base_checked=True)


def random_rationals(count: int, seed: int, bound: int = 12) -> List[Fraction]:
    """Seeded nonzero rationals p/q with |p| <= bound, 1 <= q <= bound."""
    rng = random.Random(seed)
    values = []
    while len(values) < count:
        p = rng.randint(-bound, bound)
        if p:
            values.append(Fraction(p, rng.randint(1, bound)))
    return values


def scan_points(ts: Iterable[RationalLike], P: DrinfeldPolynomial, auto_bad: bool = False) -> List[Fraction]:
    points = {parse_rational(t) for t in ts}
    if auto_bad:
        points.add(Fraction(0))
        points.update(rational_bad_t(P))
    return sorted(points)


def theorem_scan(
    ps: ParallelSystem,
    ts: Iterable[RationalLike],
    auto_bad: bool = False,
    workers: Optional[int] = None,
) -> List[TheoremVerdict]:
    """One verdict per distinct t, ordered by t."""
    require_qserre_td(ps)
    P = base_polynomial(ps)
    points = scan_points(ts, P, auto_bad)
    workers = workers or get_settings().SCAN_WORKERS
    logger.info(f"Scanning {len(points)} values of t with {workers} worker(s)")

    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(_verdict_task, [(ps, t, P) for t in points]))
    else:
        rows = [theorem_verdict(ps, t, P, base_checked=True) for t in points]
    return sorted(rows, key=lambda row: row.t)
