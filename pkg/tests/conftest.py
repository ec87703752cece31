import numpy as np
import pytest

from vecshap.games import make_game


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def three_player_game():
    """Scalar game with phi = (7/3, 4/3, 1/3); bit i is player i+1."""
    return make_game(3, 1, [
        (0b001, [1.0]),
        (0b011, [3.0]),
        (0b101, [1.0]),
        (0b111, [4.0]),
    ])
