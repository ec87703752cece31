"""`compare`: cosine and Spearman agreement of two sets of attributions."""

import argparse
import logging

from ..errors import InputFormatError
from ..services.similarity import cosine_similarity, importance_from_attributions, spearman_correlation
from ..utils.io import read_attribution_csv

logger = logging.getLogger(__name__)

METRICS = {
    "cosine": cosine_similarity,
    "spearman": spearman_correlation,
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("compare", allow_abbrev=False, help="Similarity of mean-|SHAP| importance vectors")
    parser.add_argument("--a", nargs="+", required=True, help="Attribution CSV(s), one per explained instance")
    parser.add_argument("--b", nargs="+", required=True, help="Attribution CSV(s) of the other model")
    parser.add_argument("--output-index", type=int, required=True, help="Output coordinate k")
    parser.add_argument("--metrics", default="cosine,spearman", help="Comma-separated: cosine,spearman")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    metrics = [name.strip() for name in args.metrics.split(",") if name.strip()]
    unknown = [name for name in metrics if name not in METRICS]
    if unknown or not metrics:
        raise InputFormatError(f"unknown metrics: {', '.join(unknown) or '(none given)'}")

    importance_a = importance_from_attributions([read_attribution_csv(p) for p in args.a], args.output_index)
    importance_b = importance_from_attributions([read_attribution_csv(p) for p in args.b], args.output_index)
    logger.info(f"[compare] k={args.output_index} runs a={len(args.a)} b={len(args.b)}")
    for name in metrics:
        print(f"{name}: {METRICS[name](importance_a, importance_b):.6f}")
    return 0
