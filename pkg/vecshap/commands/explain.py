"""`explain` (interventional, any predictor) and `explain-gaussian` (closed form)."""

import argparse
import logging

import numpy as np

from ..config import RECONSTRUCTION_TOL
from ..errors import InputFormatError
from ..services.gaussian_linear import shap_linear_correlated, shap_linear_independent
from ..services.predictor_bridge import efficiency_residual, explain, explain_gaussian
from ..utils.io import (
    format_float,
    load_background,
    load_instance,
    load_linear_model,
    load_predictor,
    write_attribution_csv,
)

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("explain", allow_abbrev=False, help="Interventional SHAP of a model over background data")
    parser.add_argument("--model", required=True, help="Linear model JSON or polynomial JSON")
    parser.add_argument("--background", required=True, help="Background CSV with header")
    parser.add_argument("--instance", required=True, help="Single-row CSV or JSON array")
    parser.add_argument("--out", required=True, help="Attribution CSV output")
    parser.set_defaults(func=run_explain)

    parser = subparsers.add_parser("explain-gaussian", allow_abbrev=False, help="Closed-form SHAP for a Gaussian-linear model")
    parser.add_argument("--model", required=True, help="Model JSON with b0, B, mu, sigma")
    parser.add_argument("--instance", required=True, help="JSON array or single-row CSV")
    parser.add_argument(
        "--path",
        choices=["analytic", "exact", "both"],
        default="analytic",
        help="analytic = M_i(Sigma) closed form, exact = Shapley engine on the exact game",
    )
    parser.add_argument("--out", required=True, help="Attribution CSV output")
    parser.set_defaults(func=run_explain_gaussian)


def run_explain(args: argparse.Namespace) -> int:
    predictor = load_predictor(args.model)
    background = load_background(args.background)
    x = load_instance(args.instance)
    result = explain(predictor, background, x)
    residual = efficiency_residual(result)
    logger.info(f"[explain] n={predictor.n} m={predictor.m} N={background.size} residual={residual:.3e}")
    write_attribution_csv(
        args.out,
        result.attribution,
        residual,
        features=background.columns,
        header_comments=[f"expectation_mode: {result.expectation_mode}"],
    )
    print(f"sum_check: {residual:.3e}")
    return 0


def run_explain_gaussian(args: argparse.Namespace) -> int:
    predictor, gaussian = load_linear_model(args.model)
    if gaussian is None:
        raise InputFormatError(f"{args.model}: explain-gaussian needs mu and sigma")
    x = load_instance(args.instance)
    exact = explain_gaussian(predictor, gaussian, x) if args.path in ("exact", "both") else None

    analytic = None
    if args.path in ("analytic", "both"):
        if gaussian.is_diagonal():
            analytic = shap_linear_independent(predictor, gaussian, x)
        else:
            analytic = shap_linear_correlated(predictor, gaussian, x)

    attribution = analytic if analytic is not None else exact.attribution
    deviation = predictor.evaluate(x) - predictor.expected_output(gaussian.mu)
    residual = float(np.max(np.abs(attribution.total() - deviation)))
    write_attribution_csv(
        args.out,
        attribution,
        residual,
        header_comments=[
            "expectation_mode: conditional-gaussian",
            f"path: {args.path}",
        ],
    )
    print(f"sum_check: {residual:.3e}")

    if exact is not None and analytic is not None:
        discrepancy = float(np.max(np.abs(analytic.payoff - exact.attribution.payoff)))
        print(f"discrepancy: {format_float(discrepancy)}")
        if discrepancy > RECONSTRUCTION_TOL:
            logger.warning(f"[explain-gaussian] analytic vs exact discrepancy {discrepancy:.3e}")
    return 0
