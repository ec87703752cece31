"""`verify`: seeded axiom campaign over random and structured games."""

import argparse
import logging

from ..config import EFFICIENCY_TOL, LEAKAGE_TOL
from ..models.reports import CampaignConfig, Tolerances
from ..services.axiom_suite import run_axiom_campaign, summarize
from ..utils.io import report_lines, write_jsonl

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", allow_abbrev=False, help="Run an axiom/rigidity/stability campaign")
    parser.add_argument("--n", type=int, required=True, help="Player count")
    parser.add_argument("--m", type=int, required=True, help="Output dimension")
    parser.add_argument("--trials", type=int, required=True, help="Number of games")
    parser.add_argument("--seed", type=int, required=True, help="Campaign seed")
    parser.add_argument("--tol-eff", type=float, default=EFFICIENCY_TOL,
                        help="Attribution-level tolerance (efficiency, symmetry, dummy, additivity, stability)")
    parser.add_argument("--tol-leak", type=float, default=LEAKAGE_TOL,
                        help="Cross-coordinate leakage tolerance")
    parser.add_argument("--report", default=None, help="JSON-lines report output (optional)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    tolerances = Tolerances(
        efficiency=args.tol_eff,
        symmetry=args.tol_eff,
        dummy=args.tol_eff,
        additivity=args.tol_eff,
        stability=args.tol_eff,
        coordinatewise=args.tol_leak,
        leakage=args.tol_leak,
    )
    config = CampaignConfig(n=args.n, m=args.m, trials=args.trials, seed=args.seed, tolerances=tolerances)
    reports = run_axiom_campaign(config)
    if args.report:
        write_jsonl(args.report, report_lines(reports))

    summary = summarize(reports)
    print(f"trials: {summary.trials}")
    print(f"records: {summary.records}")
    print(f"passed: {summary.passed}")
    print(f"failed: {summary.failed}")
    for axiom, count in sorted(summary.failures_by_axiom.items()):
        print(f"  {axiom}: {count}")
    if summary.failed:
        logger.error(f"[verify] {summary.failed} checks failed")
        return 1
    return 0
