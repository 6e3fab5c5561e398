"""Logging module for ballq-verify."""

from .logger import LoggerMixin, get_logger, log_function_call, setup_logging

__all__ = ["setup_logging", "get_logger", "LoggerMixin", "log_function_call"]
