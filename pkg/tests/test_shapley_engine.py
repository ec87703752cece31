import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from vecshap.errors import CapExceededError, GameValueError, ShapeMismatchError
from vecshap.games import (
    Attribution,
    coordinate_embed,
    make_game,
    random_game,
    relabel_game,
    unanimity_game,
    zero_game,
)
from vecshap.services.axiom_suite import check_efficiency
from vecshap.services.shapley_engine import (
    coalition_weight,
    game_from_dividends,
    harsanyi_dividends,
    shapley_permutation,
    shapley_subset,
    shapley_value,
    shapley_via_unanimity,
    shapley_weights,
)

from .factories import additive_game


class TestCoalitionWeight:
    def test_examples(self):
        assert coalition_weight(0, 3) == pytest.approx(1 / 3, abs=1e-16)
        assert coalition_weight(1, 3) == pytest.approx(1 / 6, abs=1e-16)

    @pytest.mark.parametrize("n", [1, 2, 5, 10, 24])
    def test_last_size_is_one_over_n(self, n):
        assert coalition_weight(n - 1, n) == pytest.approx(1 / n, rel=1e-14)

    @pytest.mark.parametrize("n", range(1, 25))
    def test_matches_factorial_form(self, n):
        for s in range(n):
            exact = math.factorial(s) * math.factorial(n - s - 1) / math.factorial(n)
            assert coalition_weight(s, n) == pytest.approx(exact, rel=1e-13)

    @pytest.mark.parametrize("n", [1, 4, 12, 24])
    def test_weights_sum_to_one(self, n):
        assert shapley_weights(n).total() == pytest.approx(1.0, abs=1e-14)

    def test_out_of_range(self):
        with pytest.raises(GameValueError):
            coalition_weight(3, 3)


ENGINES = ["subset", "permutation", "unanimity"]


@pytest.mark.parametrize("engine", ENGINES)
class TestKnownValues:
    def test_embedded_pair_unanimity(self, engine):
        v = unanimity_game(3, 0b011, 1, 2)
        phi = shapley_value(v, engine).payoff
        np.testing.assert_allclose(phi, [[0.0, 0.5], [0.0, 0.5], [0.0, 0.0]], atol=1e-15)

    def test_zero_game(self, engine):
        assert np.all(shapley_value(zero_game(3, 2), engine).payoff == 0.0)

    def test_three_player_game(self, engine, three_player_game):
        phi = shapley_value(three_player_game, engine).payoff[:, 0]
        np.testing.assert_allclose(phi, [7 / 3, 4 / 3, 1 / 3], atol=1e-14)


def test_grand_unanimity_splits_evenly():
    phi = shapley_permutation(unanimity_game(4, 0b1111, 0, 1)).payoff
    np.testing.assert_allclose(phi, np.full((4, 1), 0.25), atol=1e-15)


def test_permutation_oracle_cap():
    with pytest.raises(CapExceededError, match="permutation oracle capped at n=10"):
        shapley_permutation(zero_game(11, 1))


def test_oracle_equivalence_on_seeded_games():
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(500):
        n, m = int(rng.integers(2, 7)), int(rng.integers(1, 4))
        v = random_game(n, m, rng)
        diff = shapley_subset(v).payoff - shapley_permutation(v).payoff
        worst = max(worst, float(np.max(np.abs(diff))))
    assert worst <= 1e-10


def test_unanimity_law_exhaustive():
    for n in range(1, 7):
        for m in range(1, 4):
            for k in range(m):
                for T in range(1, 1 << n):
                    size = bin(T).count("1")
                    phi = shapley_subset(unanimity_game(n, T, k, m)).payoff
                    expected = np.zeros((n, m))
                    for i in range(n):
                        if T >> i & 1:
                            expected[i, k] = 1.0 / size
                    assert np.max(np.abs(phi - expected)) <= 1e-12


class TestDividends:
    def test_pair_unanimity(self):
        d = harsanyi_dividends(unanimity_game(2, 0b11, 0, 1))
        assert d.values[:, 0].tolist() == [0.0, 0.0, 0.0, 1.0]
        np.testing.assert_allclose(shapley_via_unanimity(unanimity_game(2, 0b11, 0, 1)).payoff[:, 0], [0.5, 0.5])

    def test_additive_game(self):
        c = [1.5, -2.0, 0.25]
        v = additive_game(c)
        d = harsanyi_dividends(v).values[:, 0]
        for mask in range(1, 8):
            if bin(mask).count("1") == 1:
                assert d[mask] == pytest.approx(c[mask.bit_length() - 1], abs=1e-15)
            else:
                assert d[mask] == pytest.approx(0.0, abs=1e-15)
        np.testing.assert_allclose(shapley_via_unanimity(v).payoff[:, 0], c, atol=1e-15)

    def test_round_trip(self, rng):
        v = random_game(6, 2, rng)
        back = game_from_dividends(harsanyi_dividends(v))
        np.testing.assert_allclose(back.values, v.values, atol=1e-12)

    def test_scalar_only(self, rng):
        with pytest.raises(ShapeMismatchError):
            shapley_via_unanimity(random_game(3, 2, rng))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            harsanyi_dividends(zero_game(21, 1))


def test_subset_is_independent_of_worker_count(rng):
    v = random_game(8, 3, rng)
    assert np.array_equal(shapley_subset(v, workers=1).payoff, shapley_subset(v, workers=4).payoff)


def test_unknown_engine(rng):
    with pytest.raises(GameValueError):
        shapley_value(random_game(2, 1, rng), "banzhaf")


def test_coordinate_embedding_commutes(rng):
    g = random_game(5, 1, rng)
    phi = shapley_subset(coordinate_embed(g, 2, 3)).payoff
    np.testing.assert_allclose(phi[:, 2], shapley_subset(g).payoff[:, 0], rtol=0, atol=1e-15)
    assert np.all(phi[:, [0, 1]] == 0.0)


@given(
    n=st.integers(min_value=1, max_value=8),
    m=st.integers(min_value=1, max_value=3),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    scale=st.floats(min_value=1e-6, max_value=1e6),
)
@settings(max_examples=60, deadline=None)
def test_efficiency_property(n, m, seed, scale):
    v = random_game(n, m, np.random.default_rng(seed))
    v = make_game(n, m, [(mask, scale * v.values[mask]) for mask in range(1, 1 << n)])
    a = shapley_subset(v)
    assert check_efficiency(v, a) <= 1e-10 * max(1.0, scale)


@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_linearity_property(seed):
    rng = np.random.default_rng(seed)
    u, v = random_game(5, 2, rng), random_game(5, 2, rng)
    alpha, beta = rng.uniform(-2.0, 2.0, size=2)
    combined = make_game(5, 2, [(mask, alpha * u.values[mask] + beta * v.values[mask]) for mask in range(1, 32)])
    expected = alpha * shapley_subset(u).payoff + beta * shapley_subset(v).payoff
    assert np.max(np.abs(shapley_subset(combined).payoff - expected)) <= 1e-10


def test_attribution_total_is_grand_value(three_player_game):
    a = shapley_subset(three_player_game)
    assert isinstance(a, Attribution)
    assert a.total()[0] == pytest.approx(4.0, abs=1e-15)


@given(perm=st.permutations(list(range(5))), seed=st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_anonymity_under_relabeling(perm, seed):
    v = random_game(5, 2, np.random.default_rng(seed))
    phi = shapley_subset(v).payoff
    relabeled = shapley_subset(relabel_game(v, perm)).payoff
    np.testing.assert_allclose(relabeled[perm], phi, rtol=0, atol=1e-14)
