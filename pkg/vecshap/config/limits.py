"""Engine caps and numeric tolerances.

Exact enumeration is exponential in the player count, so every path carries a
hard cap. Tolerances are stated against 64-bit floats and the compensated
summation used by the engine.
"""

from ..errors import CapExceededError

# Player / output caps
MAX_PLAYERS = 24
MAX_OUTPUTS = 16
PERMUTATION_CAP = 10      # n! enumeration
UNANIMITY_CAP = 20        # dividend transform path
GAUSSIAN_CAP = 20         # 2^(n-1) conditional blocks per player
INTERVENTIONAL_CAP = 16   # 2^n x N predictor evaluations
MAX_POLY_DEGREE = 3

# Attribution-level tolerances
EFFICIENCY_TOL = 1e-10
SYMMETRY_TOL = 1e-10
DUMMY_TOL = 1e-10
ADDITIVITY_TOL = 1e-10
STABILITY_TOL = 1e-10
LEAKAGE_TOL = 1e-12
RECONSTRUCTION_TOL = 1e-9

# Gaussian-linear numerics
PIVOT_TOL = 1e-10          # relative to the largest diagonal entry of sigma
SYMMETRY_REL_TOL = 1e-10   # sigma symmetry check
RIDGE_SCALE = 1e-8         # ridge = RIDGE_SCALE * trace / n
SPD_JITTER = 1e-3          # random SPD test matrices: L L^T + jitter * I

# Campaigns
STRUCTURED_GAME_PERIOD = 5  # one structured (symmetric + dummy) game per period
ADDITIVITY_COEF_RANGE = 2.0


def check_players(n: int, cap: int = MAX_PLAYERS) -> None:
    """Raise CapExceededError unless 1 <= n <= cap."""
    if n < 1:
        raise CapExceededError(f"player count must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"player count {n} exceeds cap {cap}")


def check_outputs(m: int) -> None:
    """Raise CapExceededError unless 1 <= m <= MAX_OUTPUTS."""
    if m < 1 or m > MAX_OUTPUTS:
        raise CapExceededError(f"output dimension must be in [1, {MAX_OUTPUTS}], got {m}")
