"""Manifest-driven proof replay: calculators, runner and report rendering."""

from .explain import explain
from .manifest import CheckSpec, Manifest, get_manifest, load_manifest, parse_manifest
from .registry import CalculatorRegistry, Evaluation, register_calculator
from .report import exit_code, format_json, format_text, summary_line
from .runner import ReportRunner, evaluate_check, run_report

__all__ = [
    "CalculatorRegistry",
    "CheckSpec",
    "Evaluation",
    "Manifest",
    "ReportRunner",
    "evaluate_check",
    "exit_code",
    "explain",
    "format_json",
    "format_text",
    "get_manifest",
    "load_manifest",
    "parse_manifest",
    "register_calculator",
    "run_report",
    "summary_line",
]
