"""`dividends`: Harsanyi dividends of a game file (unanimity-basis coefficients)."""

import argparse
import logging

from ..services.shapley_engine import harsanyi_dividends
from ..utils.io import load_game, write_game

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("dividends", allow_abbrev=False, help="Harsanyi dividends of a game JSON file")
    parser.add_argument("--game", required=True, help="Game JSON file")
    parser.add_argument("--out", required=True, help="Dividend JSON output (game format, keys are T)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    game = load_game(args.game)
    dividends = harsanyi_dividends(game)
    write_game(args.out, dividends)
    logger.info(f"[dividends] n={game.n} m={game.m} written to {args.out}")
    return 0
