"""
Logging Configuration

Structured logging with structlog, routed through the standard library so the
rich console handler and the rotating log file see the same events. Logs go to
stderr only; stdout carries the report.
"""

import functools
import logging
import logging.handlers
import sys
from pathlib import Path

import structlog
from rich.console import Console
from rich.logging import RichHandler

from ..config.settings import LoggingSettings


def setup_logging(settings: LoggingSettings) -> None:
    """
    Setup structured logging based on configuration.

    Args:
        settings: Logging configuration settings
    """
    level = getattr(logging, settings.level)

    structlog.configure(
        processors=_processors(settings),
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    if settings.format == "console":
        console_handler = RichHandler(
            console=Console(stderr=True),
            show_time=True,
            show_path=False,
            rich_tracebacks=True,
        )
    else:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter("%(message)s"))
    console_handler.setLevel(level)
    root_logger.addHandler(console_handler)

    if settings.file_path:
        file_path = Path(settings.file_path)
        file_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            filename=file_path,
            maxBytes=settings.max_file_size,
            backupCount=settings.backup_count,
            encoding="utf-8",
        )
        file_handler.setLevel(level)

        if settings.format == "json":
            formatter = logging.Formatter("%(message)s")
        else:
            formatter = logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
            )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)


def _processors(settings: LoggingSettings) -> list:
    # RichHandler and the file formatter add time and level themselves
    if settings.format == "json":
        return [
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.JSONRenderer(sort_keys=True),
        ]
    return [
        structlog.contextvars.merge_contextvars,
        structlog.dev.ConsoleRenderer(colors=False),
    ]


def disable_logging() -> None:
    """Silence structlog and the root logger entirely."""
    structlog.configure(
        processors=[_drop_event],
        wrapper_class=structlog.make_filtering_bound_logger(logging.CRITICAL),
        logger_factory=structlog.ReturnLoggerFactory(),
        cache_logger_on_first_use=False,
    )
    logging.getLogger().setLevel(logging.CRITICAL + 10)


def _drop_event(logger, method_name, event_dict):
    raise structlog.DropEvent


def _configure_import_defaults() -> None:
    """Route anything logged before setup_logging to stderr at WARNING."""
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(logging.WARNING),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


_configure_import_defaults()


def get_logger(name: str) -> structlog.BoundLogger:
    """Structured logger for ``name`` (typically __name__)."""
    return structlog.get_logger(name)


class LoggerMixin:
    """Mixin class that provides easy access to a logger."""

    @property
    def logger(self) -> structlog.BoundLogger:
        return get_logger(self.__class__.__module__ + "." + self.__class__.__name__)


def log_function_call(func):
    """Decorator to log calculator calls with arguments and results."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        logger = get_logger(func.__module__)
        logger.debug("Calculator called", calculator=func.__name__, params=kwargs)
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.error(
                "Calculator failed",
                calculator=func.__name__,
                error=str(e),
                error_type=type(e).__name__,
            )
            raise
        text = str(result)
        logger.debug(
            "Calculator completed",
            calculator=func.__name__,
            result=text if len(text) < 200 else f"{type(result).__name__}(...)",
        )
        return result

    return wrapper
