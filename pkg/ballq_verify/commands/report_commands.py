"""
Report Commands

Replay the proof checks of the manifest and explain single checks.
"""

import click

from ..config.settings import VALID_SCOPES
from ..errors.exceptions import UnknownCheckError
from ..errors.handlers import error_handler
from ..verifier.explain import explain as explain_check
from ..verifier.report import exit_code, format_json, format_text
from ..verifier.runner import run_report


@click.command()
@click.option(
    "--scope",
    type=click.Choice(VALID_SCOPES),
    default=None,
    help="Checks to replay (default from config)",
)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of a table")
@click.option(
    "--fail-on-flagged",
    is_flag=True,
    help="Exit nonzero when a disputed step is FLAGGED",
)
@click.option(
    "--sequential", is_flag=True, help="Evaluate checks one at a time"
)
@click.pass_context
@error_handler(exit_on_error=True)
def report(ctx, scope, as_json, fail_on_flagged, sequential):
    """
    Replay every check in scope and print the report.

    Exits 1 when any check is a MISMATCH. FLAGGED checks mark printed values
    that the standard computation does not reproduce; they only fail the
    run with --fail-on-flagged.

    Examples:
    \b
        ballq-verify report
        ballq-verify report --scope appendix2 --json
    """
    settings = ctx.obj["settings"]
    scope = scope or settings.verifier.default_scope
    as_json = as_json or settings.verifier.output_format == "json"
    fail_on_flagged = fail_on_flagged or settings.verifier.fail_on_flagged

    results = run_report(
        scope,
        parallel=False if sequential else None,
        quiet=ctx.obj.get("quiet", False) or as_json,
    )

    click.echo(format_json(results) if as_json else format_text(results))
    ctx.exit(exit_code(results, fail_on_flagged))


@click.command()
@click.argument("check_id")
@click.pass_context
@error_handler(exit_on_error=True)
def explain(ctx, check_id):
    """Show the derivation behind CHECK_ID."""
    try:
        text = explain_check(check_id)
    except UnknownCheckError as e:
        raise click.UsageError(
            f"{e.message}. Valid ids: {', '.join(e.valid_ids)}", ctx=ctx
        )
    click.echo(text)
