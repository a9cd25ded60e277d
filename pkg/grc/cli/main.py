"""
grc command line
Subcommands live in grc.cli.commands; each registers its own parser.
"""

import argparse
import sys
from typing import List, Optional

from grc.cli.commands import (
    build_slp,
    decompress,
    gen,
    hybrid,
    recompress,
    repair,
    stats,
    verify,
)
from grc.config.settings import get_settings
from grc.core.exceptions import GrcError
from grc.core.logging_config import configure_logging, get_logger
from grc.services.toolkit import ToolkitService

logger = get_logger(__name__)

COMMANDS = (gen, build_slp, recompress, repair, hybrid, decompress, verify, stats)


def create_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(prog=settings.app_name, description=settings.app_description)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    parser.add_argument(
        "--log-level",
        default=settings.log_level,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        type=str.upper,
        help="Logging level for stderr diagnostics",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        0 on success, 2 for bad arguments or inputs, 3 for a verification
        mismatch, 4 for an internal assertion, 1 otherwise
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    configure_logging(args.log_level)
    try:
        return args.handler(args, ToolkitService()) or 0
    except GrcError as exc:
        logger.error(f"{args.command} failed: {exc.message}")
        print(exc.one_line(), file=sys.stderr)
        return exc.exit_code
    except Exception as exc:
        logger.error(f"Unhandled exception: {str(exc)}", exc_info=True)
        print(f"error: UNKNOWN: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
