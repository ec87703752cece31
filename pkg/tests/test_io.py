import json

import numpy as np
import pytest

from vecshap.errors import InputFormatError
from vecshap.games import Attribution, make_game
from vecshap.services.predictors import LinearPredictor, PolynomialPredictor
from vecshap.utils.io import (
    format_float,
    load_background,
    load_game,
    load_instance,
    load_linear_model,
    load_predictor,
    read_attribution_csv,
    write_attribution_csv,
    write_game,
)


def test_format_float_round_trips():
    for value in [0.1, 1 / 3, -2.5e-300, 12345678.9]:
        assert float(format_float(value)) == value
    assert format_float(0.5) == "0.5"


def test_game_file_round_trip(tmp_path):
    v = make_game(3, 2, [(1, [0.1, -0.2]), (7, [1 / 3, 0.0])])
    path = tmp_path / "game.json"
    write_game(str(path), v)
    payload = json.loads(path.read_text())
    assert set(payload["values"]) == {"1", "7"}
    assert load_game(str(path)).equals(v)


def test_game_file_rejects_non_decimal_key(tmp_path):
    path = tmp_path / "game.json"
    path.write_text(json.dumps({"n": 2, "m": 1, "values": {"0b11": [1.0]}}))
    with pytest.raises(InputFormatError):
        load_game(str(path))


def test_attribution_csv(tmp_path):
    a = Attribution(2, 2, np.array([[0.1, 1 / 3], [-2.0, 0.0]]))
    path = tmp_path / "phi.csv"
    write_attribution_csv(str(path), a, 1.5e-17, features=["age", "dose"], header_comments=["engine: subset"])
    lines = path.read_text().splitlines()
    assert lines[0] == "# engine: subset"
    assert lines[1] == "feature,out_0,out_1"
    assert lines[2] == f"age,0.1,{format_float(1 / 3)}"
    assert lines[-1] == "# sum_check: 1.5e-17"
    np.testing.assert_array_equal(read_attribution_csv(str(path)).payoff, a.payoff)


def test_linear_model(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps({"b0": [1.0], "B": [[2.0], [3.0]], "mu": [0.0, 0.0], "sigma": [[1.0, 0.0], [0.0, 1.0]]}))
    predictor, gaussian = load_linear_model(str(path))
    assert (predictor.n, predictor.m) == (2, 1)
    assert gaussian.is_diagonal()
    assert isinstance(load_predictor(str(path)), LinearPredictor)


def test_linear_model_shape_error(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps({"b0": [1.0, 2.0], "B": [[2.0], [3.0]]}))
    with pytest.raises(InputFormatError):
        load_linear_model(str(path))


def test_polynomial_model(tmp_path):
    path = tmp_path / "poly.json"
    path.write_text(json.dumps([[{"coeff": 2.0, "exponents": [1, 2]}]]))
    predictor = load_predictor(str(path))
    assert isinstance(predictor, PolynomialPredictor)
    assert predictor.evaluate(np.array([3.0, 2.0]))[0] == 24.0


def test_polynomial_degree_cap(tmp_path):
    path = tmp_path / "poly.json"
    path.write_text(json.dumps([[{"coeff": 1.0, "exponents": [2, 2]}]]))
    with pytest.raises(InputFormatError):
        load_predictor(str(path))


def test_background_csv(tmp_path):
    path = tmp_path / "bg.csv"
    path.write_text("# synthetic\na,b\n1.0,2.0\n3.0,4.5\n")
    bg = load_background(str(path))
    assert bg.columns == ("a", "b")
    np.testing.assert_array_equal(bg.rows, [[1.0, 2.0], [3.0, 4.5]])


@pytest.mark.parametrize("name,content", [
    ("x.json", "[1.0, -2.5, 3]"),
    ("x.csv", "1.0,-2.5,3\n"),
    ("x.csv", "a,b,c\n1.0,-2.5,3\n"),
])
def test_instance_formats(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content)
    np.testing.assert_array_equal(load_instance(str(path)), [1.0, -2.5, 3.0])


def test_instance_needs_one_row(tmp_path):
    path = tmp_path / "x.csv"
    path.write_text("1,2\n3,4\n")
    with pytest.raises(InputFormatError):
        load_instance(str(path))
