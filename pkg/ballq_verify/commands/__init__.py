"""CLI command modules for ballq-verify."""
