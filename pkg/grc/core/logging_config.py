"""
Core logging configuration
"""

import logging
import sys
from typing import Optional

from grc.config.settings import get_settings
from grc.core.run_context import get_current_engine


class RunContextFilter(logging.Filter):
    """Attach the engine of the active run to each log record."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.engine = get_current_engine() or "-"
        return True


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Configure toolkit logging

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    settings = get_settings()
    log_level = (level or settings.log_level).upper()

    logger = logging.getLogger("grc")
    logger.setLevel(getattr(logging, log_level))
    logger.propagate = False

    # Remove existing handlers to avoid duplicate logs when reconfiguring
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    # stdout carries grammar stats, so logs go to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, log_level))
    console_handler.addFilter(RunContextFilter())

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - [engine:%(engine)s] %(message)s"
    )
    console_handler.setFormatter(formatter)

    logger.addHandler(console_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get logger instance for a module

    Args:
        name: Module name

    Returns:
        Logger instance
    """
    if name == "grc" or name.startswith("grc."):
        return logging.getLogger(name)
    return logging.getLogger(f"grc.{name}")
