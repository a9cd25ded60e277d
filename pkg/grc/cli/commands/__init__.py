"""
CLI subcommands.

Each module exposes ``register(subparsers)``, which adds its parser and sets
``handler``, and ``handle(args, service) -> int``.
"""

import json


def emit(record: dict) -> None:
    """Print one result record on stdout"""
    print(json.dumps(record, ensure_ascii=False))
