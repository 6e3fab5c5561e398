"""
Calculator Commands

Direct access to the singularity and Reider calculators.
"""

import json

import click

from ..common.rational import canonicalize
from ..common.utils import format_table
from ..errors.exceptions import ValidationError
from ..errors.handlers import error_handler
from ..reider.enumeration import enumerate_destabilizations, exclude_low_genus
from ..singularities.hirzebruch_jung import (
    CyclicSingularity,
    ExceptionalChain,
    Orientation,
    hj_expand,
)


@click.command()
@click.argument("n", type=int)
@click.argument("q", type=int)
@click.option(
    "--orientation",
    type=click.Choice([o.value for o in Orientation]),
    default=Orientation.HJ.value,
    help="Chain order: continued fraction order or reversed",
)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of a table")
@click.pass_context
@error_handler(exit_on_error=True)
def hj(ctx, n, q, orientation, as_json):
    """
    Resolution chain and discrepancies of the singularity 1/N(1,Q).

    Examples:
    \b
        ballq-verify hj 7 3 --orientation reversed
        ballq-verify hj 3 2
    """
    try:
        sing = CyclicSingularity(n, q)
    except ValidationError as e:
        raise click.UsageError(e.message, ctx=ctx)

    chain = ExceptionalChain.from_singularity(sing, Orientation(orientation))
    data = {
        "singularity": str(sing),
        "continued_fraction": hj_expand(sing),
        "orientation": chain.orientation.value,
        "self_intersections": list(chain.self_intersections),
        "discrepancies": list(chain.discrepancies),
        "du_val": chain.is_du_val(),
    }
    if as_json:
        click.echo(json.dumps(canonicalize(data), indent=2))
        return

    click.echo(
        f"{sing}: n/q = [{', '.join(str(b) for b in data['continued_fraction'])}]"
    )
    rows = [
        [f"S{i}", s, a]
        for i, (s, a) in enumerate(
            zip(chain.self_intersections, chain.discrepancies), start=1
        )
    ]
    click.echo(format_table(["Curve", "S^2", "Discrepancy"], rows))


@click.command()
@click.argument("k_sq", type=int)
@click.argument("deg_z", type=int)
@click.option(
    "--hyperbolic-filter/--no-hyperbolic-filter",
    default=None,
    help="Exclude curves of arithmetic genus <= 1 (default from config)",
)
@click.option("--show-rejected", is_flag=True, help="Also list rejected candidates")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of a table")
@click.pass_context
@error_handler(exit_on_error=True)
def reider(ctx, k_sq, deg_z, hyperbolic_filter, show_rejected, as_json):
    """
    Numerical cases of Reider's method for K^2 = K_SQ and deg Z = DEG_Z.

    An empty table means 2K separates every 0-cycle of that degree at the
    numerical level.

    Examples:
    \b
        ballq-verify reider 9 2
        ballq-verify reider 9 1
    """
    if hyperbolic_filter is None:
        hyperbolic_filter = ctx.obj["settings"].verifier.hyperbolic_filter
    try:
        candidates = enumerate_destabilizations(
            k_sq,
            deg_z,
            exclusion=exclude_low_genus if hyperbolic_filter else None,
            include_rejected=show_rejected,
        )
    except ValidationError as e:
        raise click.UsageError(e.message, ctx=ctx)

    if as_json:
        click.echo(
            json.dumps(canonicalize([c.to_dict() for c in candidates]), indent=2)
        )
        return

    if not candidates:
        click.echo("No numerical case survives: Z is separated")
        return

    headers = ["Case", "d1", "d2", "delta", "deg W", "B^2", "p_a", "Reason"]
    rows = [
        [
            c.case_tag.value,
            c.d1,
            c.d2,
            c.delta,
            c.deg_W,
            c.B_sq,
            c.p_a,
            c.reason or "",
        ]
        for c in candidates
    ]
    click.echo(format_table(headers, rows))
