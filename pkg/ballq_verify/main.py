#!/usr/bin/env python3
"""
ballq-verify CLI

Replays the numerical steps of the proof that 2K is very ample on smooth
ball quotients with c2 = 3, and exposes the underlying calculators. This is
the main entry point that coordinates the command modules.
"""

import os
from pathlib import Path

import click

from ballq_verify import __version__
from ballq_verify.commands.calc_commands import hj, reider
from ballq_verify.commands.config_commands import config_commands
from ballq_verify.commands.registry_commands import registry
from ballq_verify.commands.report_commands import explain, report
from ballq_verify.config.settings import initialize_settings
from ballq_verify.errors.exceptions import ConfigurationError
from ballq_verify.errors.handlers import error_handler
from ballq_verify.log_config.logger import disable_logging, get_logger, setup_logging


@click.group()
@click.version_option(version=__version__, prog_name="ballq-verify")
@click.option("--config", "-c", default=None, help="Path to configuration file")
@click.option("--debug", is_flag=True, help="Enable debug mode")
@click.option("--quiet", "-q", is_flag=True, help="Suppress progress output")
@click.option(
    "--log-level",
    default=None,
    help="Set log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
)
@click.option("--log-format", default=None, help="Set log format (json, console)")
@click.pass_context
@error_handler(exit_on_error=True)
def cli(ctx, config, debug, quiet, log_level, log_format):
    """
    ballq-verify - exact replay of the bicanonical embedding proof for ball
    quotients with c2 = 3.

    Every numerical step is recomputed with rational arithmetic and compared
    against the printed value; non-computational inputs are recorded as
    axioms.
    """
    ctx.ensure_object(dict)

    settings_kwargs = {}
    if config:
        if not Path(config).is_file():
            raise ConfigurationError(
                f"Configuration file not found: {config}",
                config_key="config_file",
                config_value=config,
            )
        settings_kwargs["config_file"] = config
    if debug:
        settings_kwargs["debug"] = debug

    settings = initialize_settings(**settings_kwargs)

    if log_level:
        settings.logging.level = log_level.upper()
    if log_format:
        settings.logging.format = log_format.lower()
    if debug:
        settings.debug = debug
        settings.logging.level = "DEBUG"

    # Handle quiet mode from CLI or environment variable
    if not quiet:
        quiet = os.getenv("BALLQ_QUIET", "").lower() in ("true", "1", "yes")

    if settings.logging.enabled:
        setup_logging(settings.logging)
        logger = get_logger(__name__)
        logger.info(
            "Starting ballq-verify CLI", version=__version__, debug=settings.debug
        )
    else:
        disable_logging()
        logger = get_logger(__name__)

    ctx.obj["settings"] = settings
    ctx.obj["debug"] = settings.debug
    ctx.obj["quiet"] = quiet

    logger.debug("CLI initialization completed")


cli.add_command(report)
cli.add_command(explain)
cli.add_command(registry)
cli.add_command(hj)
cli.add_command(reider)
cli.add_command(config_commands, name="config")


if __name__ == "__main__":
    cli()
