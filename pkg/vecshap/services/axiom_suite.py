"""Executable checks of the Shapley axioms, rigidity and stability bounds.

Each check returns a residual (and, where it makes sense, a witness); a
campaign runs every check over seeded random games and collects
AxiomReports. Failures are data, never exceptions.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..config import (
    ADDITIVITY_COEF_RANGE,
    STRUCTURED_GAME_PERIOD,
    check_outputs,
    check_players,
)
from ..errors import GameValueError, ShapeMismatchError
from ..games import (
    Attribution,
    VectorGame,
    attribution_norm,
    coordinate_embed,
    coordinate_project,
    game_combine,
    game_difference,
    marginal_seminorm_witness,
    masks_without,
    random_game,
    sup_norm,
)
from ..models.reports import (
    AxiomRecord,
    AxiomReport,
    CampaignConfig,
    CampaignSummary,
    Witness,
)
from ..utils.workers import map_ordered
from .shapley_engine import shapley_subset

logger = logging.getLogger(__name__)


def _check_shapes(v: VectorGame, a: Attribution) -> None:
    if (v.n, v.m) != (a.n, a.m):
        raise ShapeMismatchError(
            f"game (n={v.n}, m={v.m}) and attribution (n={a.n}, m={a.m}) differ"
        )


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, trial), whatever the scheduling."""
    return np.random.default_rng([seed, trial])


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def efficiency_witness(v: VectorGame, a: Attribution) -> Tuple[float, Witness]:
    _check_shapes(v, a)
    gap = np.abs(a.total() - v.grand_value())
    k = int(np.argmax(gap))
    return float(gap[k]), Witness(k=k)


def check_efficiency(v: VectorGame, a: Attribution) -> float:
    """||sum_i a_i - v([n])||_inf."""
    return efficiency_witness(v, a)[0]


def symmetric_pairs(v: VectorGame) -> list[tuple[int, int]]:
    """Pairs (i, j) with v(S+i) == v(S+j) exactly for every S avoiding both."""
    pairs = []
    for i in range(v.n):
        for j in range(i + 1, v.n):
            base = masks_without(v.n, i)
            base = base[(base >> j) & 1 == 0]
            if np.array_equal(v.values[base | (1 << i)], v.values[base | (1 << j)]):
                pairs.append((i, j))
    return pairs


def dummy_players(v: VectorGame) -> list[int]:
    """Players with v(S+i) == v(S) exactly for every S avoiding i."""
    dummies = []
    for i in range(v.n):
        base = masks_without(v.n, i)
        if np.array_equal(v.values[base | (1 << i)], v.values[base]):
            dummies.append(i)
    return dummies


def symmetry_witness(v: VectorGame, a: Attribution) -> Tuple[float, Witness]:
    _check_shapes(v, a)
    worst, witness = 0.0, Witness()
    for i, j in symmetric_pairs(v):
        gap = np.abs(a.row(i) - a.row(j))
        k = int(np.argmax(gap))
        if gap[k] > worst or witness.i is None:
            worst, witness = max(worst, float(gap[k])), Witness(i=i, j=j, k=k)
    return worst, witness


def check_symmetry(v: VectorGame, a: Attribution) -> float:
    """Max ||a_i - a_j||_inf over symmetric pairs; 0 if there are none."""
    return symmetry_witness(v, a)[0]


def dummy_witness(v: VectorGame, a: Attribution) -> Tuple[float, Witness]:
    _check_shapes(v, a)
    worst, witness = 0.0, Witness()
    for i in dummy_players(v):
        gap = np.abs(a.row(i))
        k = int(np.argmax(gap))
        if gap[k] > worst or witness.i is None:
            worst, witness = max(worst, float(gap[k])), Witness(i=i, k=k)
    return worst, witness


def check_dummy(v: VectorGame, a: Attribution) -> float:
    """Max ||a_i||_inf over dummy players; 0 if there are none."""
    return dummy_witness(v, a)[0]


def _max_entry(diff: np.ndarray) -> Tuple[float, Witness]:
    if diff.size == 0:
        return 0.0, Witness()
    flat = np.abs(diff)
    i, k = np.unravel_index(int(np.argmax(flat)), flat.shape)
    return float(flat[i, k]), Witness(i=int(i), k=int(k))


def additivity_witness(
    u: VectorGame, v: VectorGame, alpha: float, beta: float
) -> Tuple[float, Witness]:
    combined = shapley_subset(game_combine(alpha, u, beta, v)).payoff
    separate = alpha * shapley_subset(u).payoff + beta * shapley_subset(v).payoff
    return _max_entry(combined - separate)


def check_additivity(u: VectorGame, v: VectorGame, alpha: float, beta: float) -> float:
    """||Phi(alpha u + beta v) - alpha Phi(u) - beta Phi(v)||_{A,inf}."""
    return additivity_witness(u, v, alpha, beta)[0]


def coordinatewise_witness(v: VectorGame) -> Tuple[float, Witness]:
    joint = shapley_subset(v).payoff
    stacked = np.hstack([shapley_subset(coordinate_project(v, k)).payoff for k in range(v.m)])
    return _max_entry(joint - stacked)


def check_coordinatewise(v: VectorGame) -> float:
    """Phi(v) against the stack of Phi(pi_k v) over k."""
    return coordinatewise_witness(v)[0]


def rigidity_witness(
    n: int, m: int, k: int, trials: int, seed: int
) -> Tuple[float, Witness]:
    check_players(n)
    check_outputs(m)
    if not 0 <= k < m:
        raise GameValueError(f"output index {k} out of range for m={m}")
    worst, witness = 0.0, Witness(k=k)
    for trial in range(trials):
        g = random_game(n, 1, trial_rng(seed, trial))
        phi = shapley_subset(coordinate_embed(g, k, m)).payoff
        leak = np.abs(np.delete(phi, k, axis=1))
        if leak.size and leak.max() > worst:
            i, col = np.unravel_index(int(np.argmax(leak)), leak.shape)
            worst = float(leak[i, col])
            witness = Witness(i=int(i), k=int(col if col < k else col + 1))
    return worst, witness


def check_rigidity(n: int, m: int, k: int, trials: int, seed: int) -> float:
    """Max cross-coordinate leakage |pi_l Phi_i(iota_k g)|, l != k, over random g."""
    return rigidity_witness(n, m, k, trials, seed)[0]


@dataclass(frozen=True)
class StabilityCheck:
    lhs: float
    bound_delta: float
    bound_sup: float
    witness: Witness


def stability_witness(u: VectorGame, v: VectorGame) -> StabilityCheck:
    if not u.same_shape(v):
        raise ShapeMismatchError("stability check needs games of the same shape")
    diff = game_difference(u, v)
    lhs = attribution_norm(shapley_subset(u) - shapley_subset(v))
    delta, i, mask, k = marginal_seminorm_witness(diff)
    return StabilityCheck(lhs, delta, 2.0 * sup_norm(diff), Witness(i=i, S=mask, k=k))


def check_stability(u: VectorGame, v: VectorGame) -> Tuple[float, float, float]:
    """(||Phi(u)-Phi(v)||_{A,inf}, ||u-v||_{Delta,inf}, 2||u-v||_{G,inf})."""
    result = stability_witness(u, v)
    return result.lhs, result.bound_delta, result.bound_sup


# ---------------------------------------------------------------------------
# Structured games
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructuredGame:
    game: VectorGame
    pair: Optional[Tuple[int, int]]
    dummy: Optional[int]


def structured_game(n: int, m: int, rng: np.random.Generator) -> StructuredGame:
    """Random game with an exactly symmetric pair and an exact dummy player.

    Values are looked up through a canonical key (dummy removed, pair swapped
    into a fixed order), so the required equalities hold bitwise.
    """
    check_players(n)
    check_outputs(m)
    order = rng.permutation(n)
    pair = (int(min(order[0], order[1])), int(max(order[0], order[1]))) if n >= 2 else None
    dummy = int(order[2]) if n >= 3 else (int(order[0]) if n == 1 else None)

    masks = np.arange(1 << n, dtype=np.int64)
    keys = masks.copy()
    if dummy is not None:
        keys &= ~(1 << dummy)
    if pair is not None:
        p, q = pair
        only_q = ((keys >> q) & 1 == 1) & ((keys >> p) & 1 == 0)
        keys[only_q] ^= (1 << p) | (1 << q)

    table = rng.uniform(-1.0, 1.0, size=(1 << n, m))
    table[0] = 0.0
    return StructuredGame(VectorGame(n, m, table[keys]), pair, dummy)


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------

def _record(trial: int, v: VectorGame, axiom: str, residual: float, tol: float, witness: Witness) -> AxiomRecord:
    return AxiomRecord(
        trial=trial,
        n=v.n,
        m=v.m,
        axiom=axiom,
        residual=float(residual),
        tolerance=tol,
        passed=bool(residual <= tol),
        witness=witness,
    )


def audit_game(
    v: VectorGame,
    trial: int,
    config: CampaignConfig,
    rng: np.random.Generator,
    a: Optional[Attribution] = None,
) -> list[AxiomRecord]:
    """Every check against one game (and a supplied or exact attribution)."""
    tol = config.tolerances
    a = a if a is not None else shapley_subset(v)
    records = []

    residual, witness = efficiency_witness(v, a)
    records.append(_record(trial, v, "efficiency", residual, tol.efficiency, witness))
    residual, witness = symmetry_witness(v, a)
    records.append(_record(trial, v, "symmetry", residual, tol.symmetry, witness))
    residual, witness = dummy_witness(v, a)
    records.append(_record(trial, v, "dummy", residual, tol.dummy, witness))

    other = random_game(v.n, v.m, rng)
    alpha, beta = rng.uniform(-ADDITIVITY_COEF_RANGE, ADDITIVITY_COEF_RANGE, size=2)
    residual, witness = additivity_witness(v, other, float(alpha), float(beta))
    records.append(_record(trial, v, "additivity", residual, tol.additivity, witness))

    residual, witness = coordinatewise_witness(v)
    records.append(_record(trial, v, "coordinatewise", residual, tol.coordinatewise, witness))

    k = int(rng.integers(v.m))
    residual, witness = rigidity_witness(v.n, v.m, k, 1, int(rng.integers(2**31)))
    records.append(_record(trial, v, "rigidity", residual, tol.leakage, witness))

    stability = stability_witness(v, other)
    records.append(_record(trial, v, "stability_delta", stability.lhs - stability.bound_delta,
                           tol.stability, stability.witness))
    records.append(_record(trial, v, "stability_sup", stability.lhs - stability.bound_sup,
                           tol.stability, stability.witness))
    records.append(_record(trial, v, "stability_chain", stability.bound_delta - stability.bound_sup,
                           tol.stability, stability.witness))
    return records


def run_trial(config: CampaignConfig, trial: int) -> AxiomReport:
    rng = trial_rng(config.seed, trial)
    if trial % STRUCTURED_GAME_PERIOD == STRUCTURED_GAME_PERIOD - 1:
        v, source = structured_game(config.n, config.m, rng).game, "structured"
    else:
        v, source = random_game(config.n, config.m, rng), "random"
    return AxiomReport(
        trial=trial,
        n=config.n,
        m=config.m,
        seed=config.seed,
        source=source,
        records=audit_game(v, trial, config, rng),
    )


def run_axiom_campaign(config: CampaignConfig, workers: Optional[int] = None) -> list[AxiomReport]:
    """One report per trial; deterministic given the seed."""
    logger.info(
        f"[campaign seed={config.seed}] n={config.n} m={config.m} trials={config.trials}"
    )
    reports = map_ordered(lambda t: run_trial(config, t), range(config.trials), workers)
    summary = summarize(reports)
    logger.info(
        f"[campaign seed={config.seed}] {summary.passed}/{summary.records} checks passed"
    )
    return reports


def summarize(reports: list[AxiomReport]) -> CampaignSummary:
    failures: dict[str, int] = {}
    total = passed = 0
    for report in reports:
        for record in report.records:
            total += 1
            if record.passed:
                passed += 1
            else:
                failures[record.axiom] = failures.get(record.axiom, 0) + 1
    return CampaignSummary(
        trials=len(reports),
        records=total,
        passed=passed,
        failed=total - passed,
        failures_by_axiom=failures,
    )
