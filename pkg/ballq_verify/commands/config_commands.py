"""
Configuration Commands

Show the effective settings of the verifier and where each value came from.
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

import click
import yaml

from ..config.settings import (
    SECTION_NAMES,
    LoggingSettings,
    RegistrySettings,
    Settings,
    VerifierSettings,
    find_config_file,
    get_settings,
)
from ..errors.exceptions import ConfigurationError
from ..errors.handlers import error_handler

ENV_PREFIX = "BALLQ_"

SECTION_ENV_PREFIXES = {
    "logging": LoggingSettings.model_config["env_prefix"],
    "verifier": VerifierSettings.model_config["env_prefix"],
    "registry": RegistrySettings.model_config["env_prefix"],
}

SOURCE_COLORS = {"env": "green", "file": "yellow", "default": "white"}


def env_variable(key_path: str) -> str:
    """BALLQ_* variable that sets ``section.field`` or a top-level field."""
    section, _, field = key_path.rpartition(".")
    prefix = SECTION_ENV_PREFIXES.get(section, ENV_PREFIX)
    return prefix + field.upper()


def _coerce(raw: str, like: Any) -> Any:
    if isinstance(like, bool):
        return raw.lower() in ("true", "1", "yes")
    if isinstance(like, int):
        try:
            return int(raw)
        except ValueError:
            return raw
    return raw


def _file_value(config_file: Optional[str], key_path: str) -> Any:
    if not config_file or not Path(config_file).exists():
        return None
    with open(config_file, "r") as f:
        current = yaml.safe_load(f)
    for part in key_path.split("."):
        if not isinstance(current, dict):
            return None
        current = current.get(part)
    return current


def get_config_source(settings: Settings, key_path: str, value: Any) -> str:
    """env, file or default for one effective value."""
    raw = os.environ.get(env_variable(key_path))
    if raw is not None and str(_coerce(raw, value)) == str(value):
        return "env"

    from_file = _file_value(settings.config_file, key_path)
    if from_file is not None and str(from_file) == str(value):
        return "file"

    return "default"


def _entry(settings: Settings, key_path: str, value: Any, show_source: bool):
    if not show_source:
        return value
    return {"value": value, "source": get_config_source(settings, key_path, value)}


def format_settings_tree(
    settings: Settings, show_source: bool = True
) -> Dict[str, Any]:
    """Sections and top-level fields, each value with its source if asked."""
    result: Dict[str, Any] = {}
    for section_name in SECTION_NAMES:
        section = getattr(settings, section_name).model_dump()
        result[section_name] = {
            name: _entry(settings, f"{section_name}.{name}", value, show_source)
            for name, value in section.items()
        }
    for name in ["debug", "config_file"]:
        result[name] = _entry(settings, name, getattr(settings, name), show_source)
    return result


def _echo_tree(data: Dict[str, Any], show_source: bool, indent: int = 0) -> None:
    prefix = "  " * indent
    for key, value in data.items():
        is_entry = show_source and isinstance(value, dict) and "source" in value
        if isinstance(value, dict) and not is_entry:
            click.echo(f"{prefix}{click.style(key + ':', fg='cyan', bold=True)}")
            _echo_tree(value, show_source, indent + 1)
        elif is_entry:
            source = value["source"]
            tag = click.style(f"[{source}]", fg=SOURCE_COLORS[source])
            click.echo(f"{prefix}{key}: {value['value']} {tag}")
        else:
            click.echo(f"{prefix}{key}: {value}")


@click.command()
@click.option(
    "--format",
    "-f",
    type=click.Choice(["tree", "json", "yaml"]),
    default="tree",
    help="Output format",
)
@click.option(
    "--show-source/--no-show-source",
    "-s",
    default=True,
    help="Show the source of each setting (env/file/default)",
)
@click.option("--section", type=str, help="Show only a specific section")
@click.pass_context
@error_handler(exit_on_error=True)
def show(ctx, format, show_source, section):
    """Show current configuration settings and their sources."""
    settings = (ctx.obj or {}).get("settings") or get_settings()
    tree = format_settings_tree(settings, show_source)

    if section:
        if section not in tree:
            raise ConfigurationError(
                f"Unknown section: {section}", config_key="section"
            )
        tree = {section: tree[section]}

    if format == "json":
        click.echo(json.dumps(tree, indent=2))
        return
    if format == "yaml":
        click.echo(yaml.dump(tree, default_flow_style=False))
        return

    config_file = settings.config_file or find_config_file()
    if config_file:
        click.echo(f"Configuration file: {click.style(config_file, fg='yellow')}")
    else:
        click.echo(click.style("No configuration file found", fg="red"))
    click.echo()

    _echo_tree(tree, show_source)

    if show_source:
        click.echo()
        click.echo(
            "Sources: "
            + ", ".join(
                f"{click.style(f'[{name}]', fg=color)} {name}"
                for name, color in SOURCE_COLORS.items()
            )
        )


@click.command()
def list_env():
    """List all BALLQ environment variables."""
    ballq_vars = {k: v for k, v in os.environ.items() if k.startswith(ENV_PREFIX)}

    if not ballq_vars:
        click.echo("No BALLQ environment variables set")
        return

    click.echo(click.style("BALLQ Environment Variables:", fg="cyan", bold=True))
    for key, value in sorted(ballq_vars.items()):
        click.echo(f"  {key}={value}")


@click.group()
def config_commands():
    """Configuration management commands."""


config_commands.add_command(show)
config_commands.add_command(list_env, name="env")
