# ============================================================================
# Command-Line Entry Point
# ============================================================================
"""
q-Serre perturbation lab command line.

    python -m app.main build --seed d1 -o sys.json
    python -m app.main verify --system sys.json
    python -m app.main scan --seed d1 --auto-bad --t 1,2,-1
    python -m app.main iso d1 d1-phi5

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 theorem mismatch.
"""
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

import click

from app.config import get_settings
from app.core.exceptions import InvalidRational, NotSharp, TDException, VerificationFailed
from app.schemas import (
    AxiomReportSchema,
    BaseResponse,
    DrinfeldResponse,
    ErrorResponse,
    IsoResponse,
    MatrixSchema,
    ParameterArrayFile,
    PerturbResponse,
    PolynomialSchema,
    ScanRow,
    SubspaceSchema,
    SystemFile,
    TraceIdentitySchema,
    VerifyResponse,
    load_model,
)
from app.services.drinfeld import ccond_sides, drinfeld_poly, predict_td, rational_bad_t
from app.services.perturbation import (
    perturb,
    perturbed_split_sequence,
    random_rationals,
    require_qserre_td,
    theorem_scan,
    verify_perturbation_lemmas,
)
from app.services.scalars import parse_rational
from app.services.split import ladder_eigenvalue, split_decomposition, verify_split
from app.services.tridiagonal import (
    SEEDS,
    ParallelSystem,
    build_seed,
    check_projector_formulas,
    find_isomorphism,
    from_parameter_array_thin,
    has_normalized_spectrum,
    load_seed,
    normalize_geometric,
    parameter_array,
    require_sharp,
    split_sequence,
    trace_identities,
    verify_system,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s | %(levelname)-8s | %(name)s | %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'


# ============================================================================
# Group with exit-code mapping
# ============================================================================
class LabGroup(click.Group):
    """Maps library exceptions to exit codes and usage errors to exit 1."""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = 1
            raise

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = 1
            raise
        except TDException as e:
            _report_error(ctx, e)
            ctx.exit(e.exit_code)


def _report_error(ctx: click.Context, error: TDException):
    logger.debug(f"{error.error_code}: {error.detail}")
    if (ctx.obj or {}).get("json"):
        response = ErrorResponse(error=error.detail, error_code=error.error_code, details=error.details or None)
        click.echo(response.model_dump_json(indent=2))
    click.echo(f"error: {error.detail}", err=True)


def _configure_logging(verbose: bool, debug: bool):
    settings = get_settings()
    level = logging.DEBUG if debug else logging.INFO if verbose else settings.log_level
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATEFMT, stream=sys.stderr, force=True)


# ============================================================================
# Shared options & helpers
# ============================================================================
def system_options(f):
    f = click.option("--normalize", is_flag=True, help="Rescale to the spectra q^(2i-d), q^(d-2i).")(f)
    f = click.option("--system", "system_path", type=click.Path(exists=True, dir_okay=False), help="System JSON file.")(f)
    f = click.option("--seed", type=click.Choice(sorted(SEEDS)), help="Built-in seed.")(f)
    return f


def json_option(f):
    return click.option("--json", "as_json", is_flag=True, help="Print JSON instead of a summary.")(f)


def _load_system(seed: Optional[str], system_path: Optional[str], normalize: bool = False) -> ParallelSystem:
    if bool(seed) == bool(system_path):
        raise click.UsageError("give exactly one of --seed or --system")
    if seed:
        ps = build_seed(seed)
    else:
        ps = load_model(system_path, SystemFile).to_system()
    if normalize:
        ps = normalize_geometric(ps)
    return ps


def _load_named(source: str) -> ParallelSystem:
    """A seed name or a system file path."""
    if source in SEEDS:
        return build_seed(source)
    if not Path(source).is_file():
        raise click.UsageError(f"{source!r} is neither a seed ({', '.join(sorted(SEEDS))}) nor a file")
    return load_model(source, SystemFile).to_system()


def _fmt(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _yes(flag: Optional[bool]) -> str:
    return "yes" if flag else "NO"


def _parse_t_values(t_lists: List[str], t_range: Optional[str]) -> List[Fraction]:
    values = []
    for item in t_lists:
        for part in item.split(","):
            if part.strip():
                values.append(parse_rational(part))
    if t_range:
        pieces = t_range.split(":")
        if len(pieces) != 3:
            raise click.UsageError("--t-range must look like A:B:STEP")
        start, stop, step = (parse_rational(p) for p in pieces)
        if step <= 0:
            raise click.UsageError("--t-range STEP must be positive")
        t = start
        while t <= stop:
            values.append(t)
            t += step
    return values


# ============================================================================
# CLI
# ============================================================================
@click.group(cls=LabGroup)
@click.option("-v", "--verbose", is_flag=True, help="INFO logging.")
@click.option("--debug", is_flag=True, help="DEBUG logging.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, debug: bool):
    """Exact experiments with q-Serre tridiagonal systems and their t-linear perturbations."""
    ctx.ensure_object(dict)
    _configure_logging(verbose, debug)


# ==================== build ====================
@cli.command()
@click.option("--seed", type=click.Choice(sorted(SEEDS)), help="Built-in seed.")
@click.option("--pa", "pa_path", type=click.Path(exists=True, dir_okay=False), help="Parameter-array JSON file.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write the system JSON here.")
@json_option
@click.pass_context
def build(ctx, seed, pa_path, output, as_json):
    """Build the thin system of a parameter array and check it is a TD system."""
    ctx.obj["json"] = as_json
    if bool(seed) == bool(pa_path):
        raise click.UsageError("give exactly one of --seed or --pa")
    pa, qctx = load_seed(seed) if seed else load_model(pa_path, ParameterArrayFile).to_parameter_array()
    ps = from_parameter_array_thin(pa, qctx)
    report = verify_system(ps)
    if not report.is_td_system:
        raise VerificationFailed(
            f"thin candidate is not a tridiagonal system ({report.failing_axiom})",
            failing_axiom=report.failing_axiom,
        )
    document = SystemFile.from_system(ps).model_dump_json(indent=2)
    if not output:
        click.echo(document)
        return
    Path(output).write_text(document + "\n", encoding="utf-8")
    logger.info(f"Wrote system with n={ps.n}, d={ps.d} to {output}")
    message = f"wrote {output} (n = {ps.n}, d = {ps.d})"
    click.echo(BaseResponse(message=message).model_dump_json(indent=2) if as_json else message)


# ==================== verify ====================
@cli.command()
@system_options
@json_option
@click.pass_context
def verify(ctx, seed, system_path, normalize, as_json):
    """Check the tridiagonal axioms, sharpness, q-Serre relations and split data."""
    ctx.obj["json"] = as_json
    ps = _load_system(seed, system_path, normalize)
    report = verify_system(ps)

    response = VerifyResponse(
        n=ps.n,
        d=ps.d,
        report=AxiomReportSchema(**report.to_dict(), witness=SubspaceSchema.from_subspace(report.witness)),
        projector_formulas_ok=check_projector_formulas(ps),
    )
    if report.is_sharp:
        pa = parameter_array(ps)
        response.zeta = [str(z) for z in pa.zeta]
        response.parameter_array = ParameterArrayFile.from_parameter_array(pa, ps.q_ctx)
        response.trace_identities = TraceIdentitySchema(**trace_identities(ps).to_dict())
    if report.is_td_system and report.is_sharp:
        U = split_decomposition(ps)
        response.split_ok = verify_split(ps, U)
        if U[0].dim == 1:
            response.ladder_zeta = [str(ladder_eigenvalue(ps, U, i)) for i in range(ps.d + 1)]

    if as_json:
        click.echo(response.model_dump_json(indent=2))
    else:
        click.echo(_render_verify(response))
    if not report.is_td_system:
        ctx.exit(2)


def _render_verify(r: VerifyResponse) -> str:
    rep = r.report
    td = "yes" if rep.is_td_system else f"NO ({rep.failing_axiom})"
    lines = [f"TD system: {td}; sharp: {_yes(rep.is_sharp)}; q-Serre: {_yes(rep.qserre_ok)}"
             + (f"; ζ = {_fmt(r.zeta)}" if r.zeta else "")]
    lines.append(f"  n = {r.n}, d = {r.d}, algebra dim = {rep.algebra_dim}, mock TD system: {_yes(rep.is_mock_td_system)}")
    lines.append(f"  projector formulas: {_yes(r.projector_formulas_ok)}")
    if rep.witness is not None:
        lines.append(f"  invariant subspace: {_fmt(_fmt(row) for row in rep.witness.entries)}")
    if r.trace_identities is not None:
        ti = r.trace_identities
        lines.append(
            f"  trace identities: big1 {_yes(ti.big1)}, big2 {_yes(ti.big2)}, "
            f"nz1-nz4 {_yes(ti.nz1 and ti.nz2 and ti.nz3 and ti.nz4)}"
        )
    if r.split_ok is not None:
        lines.append(f"  split decomposition: {_yes(r.split_ok)}")
    if r.ladder_zeta is not None:
        lines.append(f"  ladder ζ = {_fmt(r.ladder_zeta)}")
    return "\n".join(lines)


# ==================== perturb ====================
@cli.command(name="perturb")
@system_options
@click.option("--t", "t_value", required=True, help="Perturbation parameter p/q.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write the perturbed system JSON here.")
@json_option
@click.pass_context
def perturb_cmd(ctx, seed, system_path, normalize, t_value, output, as_json):
    """Build the t-linear perturbation and check its structural lemmas."""
    ctx.obj["json"] = as_json
    ps = _load_system(seed, system_path, normalize)
    require_qserre_td(ps)
    pert = perturb(ps, parse_rational(t_value))
    lemmas = verify_perturbation_lemmas(pert)
    try:
        zeta_prime = [str(z) for z in perturbed_split_sequence(pert)]
    except NotSharp:
        zeta_prime = None

    system_file = SystemFile.from_system(pert.system)
    if output:
        Path(output).write_text(system_file.model_dump_json(indent=2) + "\n", encoding="utf-8")
    response = PerturbResponse(
        t=str(pert.t),
        K=MatrixSchema.from_matrix(pert.K),
        lemmas=lemmas.to_dict(),
        zeta_prime=zeta_prime,
        system=system_file,
    )
    if as_json:
        click.echo(response.model_dump_json(indent=2))
        return
    click.echo(f"t = {response.t}: lemmas {'all hold' if lemmas.all_hold else 'FAIL'}")
    for name, ok in response.lemmas.items():
        click.echo(f"  {name}: {_yes(ok)}")
    if zeta_prime is not None:
        click.echo(f"  ζ' = {_fmt(zeta_prime)}")
    if output:
        click.echo(f"wrote {output}")


# ==================== scan ====================
@cli.command()
@system_options
@click.option("--t", "t_lists", multiple=True, help="Comma-separated t values.")
@click.option("--t-range", help="A:B:STEP, inclusive.")
@click.option("--auto-bad", is_flag=True, help="Add t = 0 and every rational bad t.")
@click.option("--random", "add_random", is_flag=True, help="Add RANDOM_T_COUNT seeded random rationals.")
@click.option("--random-count", type=click.IntRange(min=1), default=None, help="Override RANDOM_T_COUNT.")
@click.option("--workers", type=int, default=None, help="Process pool size.")
@json_option
@click.pass_context
def scan(ctx, seed, system_path, normalize, t_lists, t_range, auto_bad, add_random, random_count, workers, as_json):
    """Compare the Drinfel'd prediction with the axiom check for each t."""
    ctx.obj["json"] = as_json
    try:
        ts = _parse_t_values(list(t_lists), t_range)
    except InvalidRational as e:
        raise click.UsageError(e.detail)
    if add_random:
        settings = get_settings()
        ts.extend(random_rationals(random_count or settings.RANDOM_T_COUNT, settings.RANDOM_SEED))
    if not ts and not auto_bad:
        raise click.UsageError("give --t, --t-range, --random or --auto-bad")

    ps = _load_system(seed, system_path, normalize)
    verdicts = theorem_scan(ps, ts, auto_bad=auto_bad, workers=workers)
    rows = [
        ScanRow(
            t=str(v.t),
            predicted=v.predicted,
            actual=v.actual,
            failing_axiom=v.failing_axiom,
            witness=SubspaceSchema.from_subspace(v.witness),
        )
        for v in verdicts
    ]
    if as_json:
        click.echo("[\n" + ",\n".join(row.model_dump_json(indent=2) for row in rows) + "\n]")
        return
    click.echo(f"{'t':>10}  {'predicted':>9}  {'actual':>6}  failing")
    for row in rows:
        witness = ""
        if row.witness is not None:
            witness = "  " + _fmt(_fmt(r) for r in row.witness.entries)
        click.echo(
            f"{row.t:>10}  {str(row.predicted):>9}  {str(row.actual):>6}  {row.failing_axiom or '-'}{witness}"
        )


# ==================== iso ====================
@cli.command()
@click.argument("first")
@click.argument("second")
@json_option
@click.pass_context
def iso(ctx, first, second, as_json):
    """Search for an isomorphism between two systems (seed names or files)."""
    ctx.obj["json"] = as_json
    ps1, ps2 = _load_named(first), _load_named(second)
    S = find_isomorphism(ps1, ps2)
    response = IsoResponse(isomorphic=S is not None)
    if S is not None:
        response.intertwiner = MatrixSchema.from_matrix(S)
        response.message = "isomorphic"
    elif ps1.theta != ps2.theta or ps1.theta_star != ps2.theta_star:
        response.message = "not isomorphic: eigenvalue sequences differ"
    else:
        response.message = "not isomorphic"
        try:
            index = parameter_array(ps1).first_zeta_difference(parameter_array(ps2))
        except NotSharp:
            index = -1
        if index >= 0:
            response.first_zeta_difference = index
            response.message = f"not isomorphic: ζ differs at i = {index}"

    if as_json:
        click.echo(response.model_dump_json(indent=2))
        return
    click.echo(response.message)
    if response.intertwiner is not None:
        for row in response.intertwiner.entries:
            click.echo("  " + "  ".join(f"{v:>6}" for v in row))


# ==================== drinfeld ====================
@cli.command()
@system_options
@json_option
@click.pass_context
def drinfeld(ctx, seed, system_path, normalize, as_json):
    """Print the Drinfel'd polynomial, its rational bad t and the t = 1 check."""
    ctx.obj["json"] = as_json
    ps = _load_system(seed, system_path, normalize)
    require_sharp(ps)
    zeta = split_sequence(ps)
    P = drinfeld_poly(zeta, ps.q_ctx)
    response = DrinfeldResponse(
        zeta=[str(z) for z in zeta],
        polynomial=PolynomialSchema.from_polynomial(P.underlying),
        degree=P.degree,
        bad_t=[str(t) for t in rational_bad_t(P)],
        ycond_ok=predict_td(P, 1),
    )
    if has_normalized_spectrum(ps.theta, ps.theta_star, ps.q_ctx):
        left, right = ccond_sides(parameter_array(ps), ps.q_ctx)
        response.ccond_left, response.ccond_right = str(left), str(right)

    if as_json:
        click.echo(response.model_dump_json(indent=2))
        return
    click.echo(f"P(x) = {P}")
    click.echo(f"  ζ = {_fmt(response.zeta)}, degree {response.degree}")
    click.echo(f"  rational bad t: {_fmt(response.bad_t) if response.bad_t else 'none'}")
    click.echo(f"  P(1/(q - 1/q)^2) ≠ 0: {_yes(response.ycond_ok)}")
    if response.ccond_left is not None:
        click.echo(f"  sum identity: {response.ccond_left} = {response.ccond_right}")


main = cli

if __name__ == "__main__":
    cli()
