"""Command-line entry point for vecshap."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from .commands import COMMANDS
from .config import get_settings
from .errors import VecShapError

logger = logging.getLogger(__name__)


def configure_logging(level: str) -> None:
    # stdout carries results; diagnostics go to stderr
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='[%(asctime)s] %(levelname)s: %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)],
    )


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Exact Shapley attribution for vector-valued games and models",
        allow_abbrev=False,
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns 0 ok, 1 verification failure, 2 usage/input error."""
    try:
        parser = build_parser()
    except ValidationError as e:
        configure_logging("INFO")
        logger.error(f"[settings] invalid VECSHAP_* environment: {e}")
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(get_settings().log_level)
    try:
        return args.func(args)
    except (VecShapError, ValidationError) as e:
        logger.error(f"[{args.command}] {e}")
        return 2
    except OSError as e:
        logger.error(f"[{args.command}] I/O failure: {e}")
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
