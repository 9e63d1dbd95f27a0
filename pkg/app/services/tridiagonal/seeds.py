# ============================================================================
# Built-in Seeds & the Thin Sweep Oracle
# ============================================================================
"""
Seeds ship as parameter arrays and go through the thin constructor every time
they are loaded. The d=2 seed was recorded from `sweep_thin_seed` on the
geometric spectra with q = 2 (see scripts/derive_seed.py).
"""
from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from app.core.exceptions import InvalidParameterArray, TDException
from app.services.scalars import QContext, RationalLike, parse_rational
from app.services.tridiagonal.parameter_array import ParameterArray
from app.services.tridiagonal.system import ParallelSystem, from_parameter_array_thin
from app.services.tridiagonal.verification import verify_system

logger = logging.getLogger(__name__)

SWEEP_PROGRESS_EVERY = 1000

SEEDS: Dict[str, Dict] = {
    "d1": {
        "q": "2",
        "d": 1,
        "theta": ["1/2", "2"],
        "theta_star": ["2", "1/2"],
        "zeta": ["1", "1"],
    },
    "d1-phi5": {
        "q": "2",
        "d": 1,
        "theta": ["1/2", "2"],
        "theta_star": ["2", "1/2"],
        "zeta": ["1", "5"],
    },
    "d2": {
        "q": "2",
        "d": 2,
        "theta": ["1/4", "1", "4"],
        "theta_star": ["4", "1", "1/4"],
        "zeta": ["1", "1", "1"],
    },
}


def load_seed(name: str) -> Tuple[ParameterArray, QContext]:
    if name not in SEEDS:
        raise InvalidParameterArray(f"unknown seed {name!r}; choose from {sorted(SEEDS)}")
    raw = SEEDS[name]
    pa = ParameterArray(raw["d"], tuple(raw["theta"]), tuple(raw["theta_star"]), tuple(raw["zeta"]))
    return pa, QContext(q=parse_rational(raw["q"]), d=raw["d"])


def build_seed(name: str) -> ParallelSystem:
    pa, ctx = load_seed(name)
    return from_parameter_array_thin(pa, ctx)


# ============================================================================
# Sweep oracle
# ============================================================================
def small_rationals(bound: int) -> List[Fraction]:
    """Nonzero p/q with |p|, q <= bound, ordered by height, then size, positives first."""
    values = set()
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            if gcd(p, q) == 1:
                values.add(Fraction(p, q))
                values.add(Fraction(-p, q))
    return sorted(
        values,
        key=lambda v: (max(abs(v.numerator), v.denominator), abs(v), v < 0),
    )


def _candidate_zetas(d: int, bound: int) -> Iterator[Tuple[Fraction, ...]]:
    for phis in itertools.product(small_rationals(bound), repeat=d):
        zeta = [Fraction(1)]
        for phi in phis:
            zeta.append(zeta[-1] * phi)
        yield tuple(zeta)


def sweep_thin_seed(
    theta: Sequence[RationalLike],
    theta_star: Sequence[RationalLike],
    ctx: QContext,
    bound: int,
    limit: Optional[int] = None,
) -> Optional[ParameterArray]:
    """
    First parameter array (by height of φ) whose thin candidate is a TD system.

    The candidate count grows like (2·bound²)^d, so for d >= 3 pass a small
    bound or a limit on the number of candidates tried.
    """
    d = len(theta) - 1
    total = len(small_rationals(bound)) ** d
    if limit is not None:
        total = min(total, limit)
    logger.info(f"Sweeping up to {total} thin candidates for d={d}")
    tried = 0
    for zeta in _candidate_zetas(d, bound):
        if limit is not None and tried >= limit:
            logger.warning(f"Sweep stopped at the limit of {limit} candidates")
            return None
        tried += 1
        if tried % SWEEP_PROGRESS_EVERY == 0:
            logger.info(f"Sweep progress: {tried}/{total} candidates")
        pa = ParameterArray(d, tuple(theta), tuple(theta_star), zeta)
        try:
            report = verify_system(from_parameter_array_thin(pa, ctx))
        except TDException as e:
            logger.debug(f"Candidate {pa.to_dict()['zeta']} rejected: {e.detail}")
            continue
        if report.is_td_system:
            logger.info(f"Sweep accepted zeta={pa.to_dict()['zeta']} after {tried} candidates")
            return pa
    logger.warning(f"Sweep exhausted {tried} candidates without a TD system")
    return None
