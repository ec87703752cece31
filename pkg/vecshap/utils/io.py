"""Reading and writing the JSON/CSV formats used by the CLI."""

import json
import logging
import os
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import ValidationError

from ..errors import InputFormatError
from ..games import Attribution, VectorGame, make_game
from ..models.files import GameFile, LinearModelFile, PolynomialModelFile
from ..models.reports import AxiomReport
from ..services.gaussian_linear import GaussianInput
from ..services.predictor_bridge import BackgroundSample
from ..services.predictors import LinearPredictor, PolynomialPredictor, Predictor

logger = logging.getLogger(__name__)


def format_float(value: float) -> str:
    """Shortest decimal that round-trips to the same double."""
    return repr(float(value))


def read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputFormatError(f"{path}: {e}") from e


def _parse(model, data, path: str):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InputFormatError(f"{path}: {e}") from e


# ---------------------------------------------------------------------------
# Games
# ---------------------------------------------------------------------------

def load_game(path: str) -> VectorGame:
    parsed = _parse(GameFile, read_json(path), path)
    return make_game(parsed.n, parsed.m, parsed.entries())


def game_to_file(v: VectorGame) -> GameFile:
    values = {
        str(mask): [float(c) for c in v.values[mask]]
        for mask in range(1, 1 << v.n)
        if np.any(v.values[mask] != 0.0)
    }
    return GameFile(n=v.n, m=v.m, values=values)


def write_game(path: str, v: VectorGame) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(game_to_file(v).model_dump_json())
        fh.write("\n")


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------

def load_linear_model(path: str, data=None) -> Tuple[LinearPredictor, Optional[GaussianInput]]:
    parsed = _parse(LinearModelFile, read_json(path) if data is None else data, path)
    predictor = LinearPredictor(np.asarray(parsed.b0), np.asarray(parsed.B))
    gaussian = None
    if parsed.mu is not None and parsed.sigma is not None:
        gaussian = GaussianInput(np.asarray(parsed.mu), np.asarray(parsed.sigma))
    return predictor, gaussian


def load_polynomial(path: str, data=None) -> PolynomialPredictor:
    parsed = _parse(PolynomialModelFile, read_json(path) if data is None else data, path)
    widths = {len(t.exponents) for terms in parsed.root for t in terms}
    if not widths:
        raise InputFormatError(f"{path}: polynomial model has no terms to fix n")
    n = widths.pop()
    return PolynomialPredictor.from_terms(
        n, [[(t.coeff, t.exponents) for t in terms] for terms in parsed.root]
    )


def load_predictor(path: str) -> Predictor:
    """Linear model JSON (an object) or polynomial JSON (a list per output)."""
    data = read_json(path)
    if isinstance(data, list):
        return load_polynomial(path, data)
    return load_linear_model(path, data)[0]


# ---------------------------------------------------------------------------
# Background data and instances
# ---------------------------------------------------------------------------

def load_background(path: str) -> BackgroundSample:
    try:
        frame = pd.read_csv(path, comment="#", float_precision="round_trip")
        rows = frame.to_numpy(dtype=np.float64)
    except (OSError, ValueError, pd.errors.ParserError) as e:
        raise InputFormatError(f"{path}: {e}") from e
    return BackgroundSample(rows, tuple(str(c) for c in frame.columns))


def _is_number(cell) -> bool:
    try:
        float(cell)
        return True
    except (TypeError, ValueError):
        return False


def load_instance(path: str) -> np.ndarray:
    """JSON array, or single-row CSV with an optional header row."""
    if path.lower().endswith(".json"):
        data = read_json(path)
        if not isinstance(data, list) or not all(_is_number(c) for c in data):
            raise InputFormatError(f"{path}: instance must be a JSON array of numbers")
        return np.asarray(data, dtype=np.float64)
    try:
        frame = pd.read_csv(path, header=None, comment="#", dtype=str)
    except (OSError, ValueError, pd.errors.ParserError) as e:
        raise InputFormatError(f"{path}: {e}") from e
    rows = frame.values.tolist()
    if rows and not all(_is_number(c) for c in rows[0]):
        rows = rows[1:]
    if len(rows) != 1 or not all(_is_number(c) for c in rows[0]):
        raise InputFormatError(f"{path}: expected exactly one numeric row")
    return np.asarray([float(c) for c in rows[0]], dtype=np.float64)


# ---------------------------------------------------------------------------
# Attribution CSV
# ---------------------------------------------------------------------------

def write_attribution_csv(
    path: str,
    attribution: Attribution,
    sum_check: float,
    features: Optional[Sequence[str]] = None,
    header_comments: Iterable[str] = (),
) -> None:
    """header `feature,out_0,...`, one row per feature, trailing `# sum_check:` line."""
    features = list(features) if features else [str(i) for i in range(attribution.n)]
    lines = [f"# {comment}" for comment in header_comments]
    lines.append(",".join(["feature"] + [f"out_{k}" for k in range(attribution.m)]))
    for name, row in zip(features, attribution.payoff):
        lines.append(",".join([name] + [format_float(c) for c in row]))
    lines.append(f"# sum_check: {format_float(sum_check)}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    logger.debug(f"[io] wrote attribution {attribution.n}x{attribution.m} to {os.path.basename(path)}")


def read_attribution_csv(path: str) -> Attribution:
    try:
        frame = pd.read_csv(path, comment="#", float_precision="round_trip", dtype={"feature": str})
    except (OSError, ValueError, pd.errors.ParserError) as e:
        raise InputFormatError(f"{path}: {e}") from e
    outputs = [c for c in frame.columns if str(c).startswith("out_")]
    if frame.columns[0] != "feature" or not outputs:
        raise InputFormatError(f"{path}: expected header feature,out_0,...")
    payoff = frame[outputs].to_numpy(dtype=np.float64)
    return Attribution(payoff.shape[0], payoff.shape[1], payoff)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def report_lines(reports: Iterable[AxiomReport]) -> list[str]:
    return [
        record.model_dump_json(by_alias=True)
        for report in reports
        for record in report.records
    ]


def write_jsonl(path: str, lines: Iterable[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")
