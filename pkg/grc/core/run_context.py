"""
Utilities for tagging log records with the engine of the active run.
"""

from __future__ import annotations

from contextvars import ContextVar
from typing import Optional


_engine_context: ContextVar[Optional[str]] = ContextVar("engine_context", default=None)


def set_current_engine(engine: Optional[str]):
    """
    Store the engine name for the active context.

    Returns:
        The context token that can be used to restore the previous value.
    """
    return _engine_context.set(engine)


def get_current_engine() -> Optional[str]:
    """Return the engine name associated with the current context."""
    return _engine_context.get()


def reset_current_engine(token) -> None:
    """
    Restore the engine context to a previous value using the provided token.
    """
    _engine_context.reset(token)
