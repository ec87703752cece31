"""`shapley`: exact attribution of a game file."""

import argparse
import logging

from ..services.axiom_suite import check_efficiency
from ..services.shapley_engine import shapley_value
from ..utils.io import load_game, write_attribution_csv

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("shapley", allow_abbrev=False, help="Exact Shapley attribution of a game JSON file")
    parser.add_argument("--game", required=True, help="Game JSON file")
    parser.add_argument(
        "--engine",
        choices=["subset", "permutation", "unanimity"],
        default="subset",
        help="Formula used (permutation is capped at n=10)",
    )
    parser.add_argument("--out", required=True, help="Attribution CSV output")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    game = load_game(args.game)
    logger.info(f"[shapley] n={game.n} m={game.m} engine={args.engine}")
    attribution = shapley_value(game, args.engine)
    residual = check_efficiency(game, attribution)
    write_attribution_csv(args.out, attribution, residual, header_comments=[f"engine: {args.engine}"])
    print(f"sum_check: {residual:.3e}")
    return 0
