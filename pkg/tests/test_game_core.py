import numpy as np
import pytest

from vecshap.errors import CapExceededError, GameValueError, ShapeMismatchError
from vecshap.games import (
    Attribution,
    Coalition,
    VectorGame,
    attribution_norm,
    coordinate_embed,
    coordinate_project,
    game_combine,
    make_game,
    marginal_seminorm,
    marginal_seminorm_witness,
    random_game,
    relabel_game,
    sup_norm,
    unanimity_game,
    zero_game,
)


class TestMakeGame:
    def test_empty_entries_give_zero_game(self):
        v = make_game(2, 1, [])
        assert v.values.shape == (4, 1)
        assert np.all(v.values == 0.0)

    def test_single_entry(self):
        v = make_game(2, 1, [(0b11, [1.0])])
        assert v.value(0b11)[0] == 1.0
        assert v.value(0b01)[0] == 0.0
        assert v.value(0b10)[0] == 0.0

    def test_nonzero_empty_coalition_rejected(self):
        with pytest.raises(GameValueError, match="empty coalition must have zero value"):
            make_game(2, 1, [(0b00, [0.5])])

    def test_explicit_zero_at_empty_coalition_is_allowed(self):
        v = make_game(2, 1, [(0, [0.0])])
        assert np.all(v.values == 0.0)

    def test_out_of_range_mask(self):
        with pytest.raises(GameValueError):
            make_game(2, 1, [(4, [1.0])])

    def test_duplicate_mask(self):
        with pytest.raises(GameValueError, match="duplicate"):
            make_game(2, 1, [(1, [1.0]), (1, [2.0])])

    def test_non_finite_rejected(self):
        with pytest.raises(GameValueError):
            make_game(2, 1, [(1, [np.nan])])

    def test_wrong_width(self):
        with pytest.raises(ShapeMismatchError):
            make_game(2, 2, [(1, [1.0])])

    def test_caps(self):
        with pytest.raises(CapExceededError):
            make_game(25, 1, [])
        with pytest.raises(CapExceededError):
            make_game(2, 17, [])

    def test_values_are_read_only(self):
        v = make_game(2, 1, [(3, [1.0])])
        with pytest.raises(ValueError):
            v.values[3, 0] = 2.0

    def test_coalition_keys(self):
        S = Coalition.from_players([0, 2], 3)
        v = make_game(3, 1, [(S, [2.5])])
        assert v.value(0b101)[0] == 2.5


class TestUnanimityGame:
    def test_pair(self):
        v = unanimity_game(2, 0b11, 0, 1)
        assert v.values[:, 0].tolist() == [0.0, 0.0, 0.0, 1.0]

    def test_singleton_second_output(self):
        v = unanimity_game(3, Coalition.from_players([2], 3), 1, 2)
        for mask in range(8):
            expected = [0.0, 1.0] if mask & 0b100 else [0.0, 0.0]
            assert v.value(mask).tolist() == expected

    def test_empty_T_rejected(self):
        with pytest.raises(GameValueError, match="unanimity game requires nonempty T"):
            unanimity_game(2, 0, 0, 1)

    def test_output_index_bounds(self):
        with pytest.raises(GameValueError):
            unanimity_game(2, 1, 2, 2)


class TestCoordinates:
    def test_project_embedded_unanimity(self):
        v = unanimity_game(2, 0b11, 1, 2)
        assert coordinate_project(v, 1).equals(unanimity_game(2, 0b11, 0, 1))

    def test_project_zero_game(self):
        assert coordinate_project(zero_game(3, 2), 1).equals(zero_game(3, 1))

    def test_project_out_of_range(self):
        with pytest.raises(GameValueError):
            coordinate_project(zero_game(2, 2), 2)

    def test_embed_fills_one_coordinate(self):
        v = coordinate_embed(unanimity_game(2, 0b01, 0, 1), 0, 3)
        assert np.all(v.values[:, 1:] == 0.0)
        assert v.values[:, 0].tolist() == [0.0, 1.0, 0.0, 1.0]

    def test_embed_zero(self):
        assert coordinate_embed(zero_game(3, 1), 2, 4).equals(zero_game(3, 4))

    def test_embed_requires_scalar(self):
        with pytest.raises(ShapeMismatchError):
            coordinate_embed(zero_game(2, 2), 0, 3)

    def test_orthogonal_coordinates(self, rng):
        g = random_game(3, 1, rng)
        assert coordinate_project(coordinate_embed(g, 2, 4), 1).equals(zero_game(3, 1))

    def test_direct_sum_decomposition_is_exact(self, rng):
        v = random_game(4, 3, rng)
        rebuilt = zero_game(4, 3)
        for k in range(3):
            rebuilt = game_combine(1.0, rebuilt, 1.0, coordinate_embed(coordinate_project(v, k), k, 3))
        assert rebuilt.equals(v)


class TestGameCombine:
    def test_cancellation(self, rng):
        v = random_game(3, 2, rng)
        assert game_combine(1.0, v, -1.0, v).equals(zero_game(3, 2))

    def test_scaling(self, rng):
        u = unanimity_game(3, 0b011, 0, 2)
        scaled = game_combine(2.0, u, 0.0, random_game(3, 2, rng))
        assert np.array_equal(scaled.values, 2.0 * u.values)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            game_combine(1.0, zero_game(2, 1), 1.0, zero_game(3, 1))


class TestNorms:
    def test_sup_norm(self):
        assert sup_norm(zero_game(3, 2)) == 0.0
        u = unanimity_game(3, 0b001, 0, 2)
        assert sup_norm(u) == 1.0
        assert sup_norm(game_combine(3.0, u, 0.0, u)) == 3.0

    def test_sup_norm_homogeneous_and_subadditive(self, rng):
        for _ in range(50):
            u = random_game(4, 3, rng)
            v = random_game(4, 3, rng)
            a = rng.uniform(-5.0, 5.0)
            expected = abs(a) * sup_norm(u)
            assert abs(sup_norm(game_combine(a, u, 0.0, u)) - expected) <= 1e-12 * max(1.0, expected)
            bound = sup_norm(u) + sup_norm(v)
            assert sup_norm(game_combine(1.0, u, 1.0, v)) <= bound * (1.0 + 1e-12)

    def test_marginal_seminorm_zero(self):
        assert marginal_seminorm(zero_game(3, 1)) == 0.0

    def test_marginal_seminorm_cardinality_game(self):
        v = make_game(3, 1, [(mask, [bin(mask).count("1")]) for mask in range(1, 8)])
        assert marginal_seminorm(v) == 1.0

    def test_marginal_seminorm_witness(self, three_player_game):
        value, i, mask, k = marginal_seminorm_witness(three_player_game)
        assert value == 4.0
        assert (i, mask, k) == (0, 0b110, 0)

    def test_marginal_seminorm_brute_force(self, rng):
        v = random_game(4, 2, rng)
        brute = max(
            np.max(np.abs(v.value(S | (1 << i)) - v.value(S)))
            for i in range(4)
            for S in range(16)
            if not S & (1 << i)
        )
        assert marginal_seminorm(v) == brute

    def test_marginal_seminorm_relabel_invariant(self, rng):
        v = random_game(5, 2, rng)
        perm = rng.permutation(5)
        assert marginal_seminorm(relabel_game(v, perm)) == marginal_seminorm(v)

    def test_attribution_norm(self):
        assert attribution_norm(Attribution.zeros(3, 2)) == 0.0
        rows = np.array([[0.0, 0.5], [0.0, 0.5], [0.0, 0.0]])
        assert attribution_norm(Attribution(3, 2, rows)) == 0.5
        assert attribution_norm(Attribution(1, 2, np.array([[-2.0, 1.0]]))) == 2.0


class TestCoalition:
    def test_helpers(self):
        S = Coalition.from_players([0, 2], 4)
        assert S.mask == 0b0101
        assert S.size == len(S) == 2
        assert S.players() == [0, 2]
        assert S.contains(2) and not S.contains(1)
        assert S.complement().mask == 0b1010
        assert S.is_subset(Coalition.grand(4))
        assert S.union(Coalition.from_players([1], 4)).mask == 0b0111
        assert str(S) == "{0,2}"
        assert Coalition.empty(4).size == 0

    def test_out_of_range_player(self):
        with pytest.raises(GameValueError):
            Coalition.from_players([4], 4)


def test_relabel_moves_values():
    v = unanimity_game(3, 0b001, 0, 1)
    moved = relabel_game(v, [2, 0, 1])
    assert moved.equals(unanimity_game(3, 0b100, 0, 1))


def test_vector_game_shape_checked():
    with pytest.raises(ShapeMismatchError):
        VectorGame(2, 1, np.zeros((3, 1)))
