"""
Registry Commands

Query the table of fake projective plane lattices.
"""

import click

from ..common.utils import format_table, handle_success
from ..errors.handlers import error_handler
from ..registry.loader import (
    FppCase,
    covering_context,
    load_registry,
    query_by_case,
    records_to_json,
)

CASE_CHOICES = [case.value for case in FppCase]


def _covering(record) -> str:
    context = covering_context(record)
    if context is None:
        return ""
    if isinstance(context, str):
        return context
    return f"X={context.quotient}, M'={context.companion}, deg {context.degree}"


@click.command()
@click.option(
    "--case", "case", type=click.Choice(CASE_CHOICES), help="Only lattices of a case"
)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of a table")
@click.pass_context
@error_handler(exit_on_error=True)
def registry(ctx, case, as_json):
    """
    List the fake projective plane lattices with their case.

    Examples:
    \b
        ballq-verify registry --case min
        ballq-verify registry --json
    """
    settings = ctx.obj["settings"]
    records = load_registry(settings.registry.data_file)
    if case:
        records = query_by_case(records, case)

    if as_json:
        click.echo(records_to_json(records))
        return

    headers = ["Name", "Family", "Place", "Torsion", "Tag", "Case", "Covering"]
    rows = [
        [
            r.raw_name,
            r.family,
            r.prime_or_place,
            r.torsion_set,
            r.subgroup_tag or "",
            r.case.display,
            _covering(r),
        ]
        for r in records
    ]
    click.echo(format_table(headers, rows))
    if not ctx.obj.get("quiet"):
        click.echo()
        handle_success(f"{len(records)} lattices")
