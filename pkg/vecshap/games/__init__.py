"""Coalitions, vector-valued games, game algebra and norms."""

from .coalition import Coalition, coalition_sizes, masks_without
from .game import (
    Attribution,
    VectorGame,
    coordinate_embed,
    coordinate_project,
    game_combine,
    game_difference,
    make_game,
    random_game,
    relabel_game,
    unanimity_game,
    zero_game,
)
from .norms import (
    attribution_norm,
    marginal_seminorm,
    marginal_seminorm_witness,
    player_marginals,
    sup_norm,
)

__all__ = [
    "Coalition",
    "coalition_sizes",
    "masks_without",
    "Attribution",
    "VectorGame",
    "coordinate_embed",
    "coordinate_project",
    "game_combine",
    "game_difference",
    "make_game",
    "random_game",
    "relabel_game",
    "unanimity_game",
    "zero_game",
    "attribution_norm",
    "marginal_seminorm",
    "marginal_seminorm_witness",
    "player_marginals",
    "sup_norm",
]
