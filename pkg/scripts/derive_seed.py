# ============================================================================
# Derive a Thin Seed by Sweeping Small Rationals
# ============================================================================
"""
Sweep (φ₁, …, φ_d) over small rationals on the spectra q^(2i-d), q^(d-2i)
and print the first parameter array whose thin system is a tridiagonal
system. This is how the built-in "d2" seed was recorded.

Usage:
    python scripts/derive_seed.py --d 2 --q 2
    python scripts/derive_seed.py --d 3 --q 3 --bound 2 --limit 500 -o pa.json

The candidate count is about (2·bound²)^d; keep --bound small for d >= 3.
"""

import argparse
import logging
import sys
import os

# Ensure the app directory is in the python path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.config import get_settings
from app.core.exceptions import TDException
from app.schemas import ParameterArrayFile
from app.services.scalars import QContext, parse_rational
from app.services.tridiagonal import geometric_eigenvalues, sweep_thin_seed

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s | %(levelname)-8s | %(name)s | %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)
logger = logging.getLogger(__name__)


def main() -> int:
    settings = get_settings()
    parser = argparse.ArgumentParser(description="Sweep thin candidates for a tridiagonal seed")
    parser.add_argument("--d", type=int, required=True, help="diameter")
    parser.add_argument("--q", default=settings.DEFAULT_Q, help="q as p/q")
    parser.add_argument("--bound", type=int, default=settings.SEED_SWEEP_BOUND, help="height bound")
    parser.add_argument("--limit", type=int, default=settings.SEED_SWEEP_LIMIT, help="stop after this many candidates")
    parser.add_argument("-o", "--output", help="write the parameter array JSON here")
    args = parser.parse_args()

    try:
        ctx = QContext(q=parse_rational(args.q), d=args.d)
        theta, theta_star = geometric_eigenvalues(ctx)
        pa = sweep_thin_seed(theta, theta_star, ctx, args.bound, args.limit)
    except TDException as e:
        logger.error(f"❌ {e.detail}")
        return e.exit_code

    if pa is None:
        logger.error(f"❌ No TD system found with height bound {args.bound} within {args.limit} candidates")
        return 2

    document = ParameterArrayFile.from_parameter_array(pa, ctx).model_dump_json(indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(document + "\n")
        logger.info(f"✅ Wrote {args.output}")
    else:
        print(document)
    return 0


if __name__ == "__main__":
    sys.exit(main())
