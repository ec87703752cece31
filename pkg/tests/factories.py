import numpy as np

from vecshap.games import make_game


def additive_game(c):
    """v(S) = sum of c_i over i in S."""
    c = np.asarray(c, dtype=np.float64)
    n = c.shape[0]
    return make_game(n, 1, [
        (mask, [c[(mask >> np.arange(n)) & 1 == 1].sum()])
        for mask in range(1, 1 << n)
    ])
