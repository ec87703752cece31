"""
Local smoke test for the vecshap CLI.
Run: python test_local.py
"""

import json
import os
import sys
import tempfile

import numpy as np

# Add paths
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from vecshap.main import cli_main
from vecshap.services.gaussian_linear import random_spd

# Scalar game with phi = (7/3, 4/3, 1/3)
test_game = {
    "n": 3,
    "m": 1,
    "values": {"1": [1.0], "3": [3.0], "5": [1.0], "7": [4.0]},
}


def build_model(n: int = 5, m: int = 3, seed: int = 0) -> dict:
    rng = np.random.default_rng(seed)
    return {
        "b0": rng.normal(size=m).tolist(),
        "B": rng.normal(size=(n, m)).tolist(),
        "mu": rng.normal(size=n).tolist(),
        "sigma": random_spd(n, rng).tolist(),
    }


def run(step: str, argv: list) -> int:
    print(f"\n--- {step}: vecshap {' '.join(argv)}")
    code = cli_main(argv)
    print(f"--- exit code {code}")
    return code


if __name__ == "__main__":
    print("=" * 60)
    print("Local Test - vecshap")
    print("=" * 60)

    with tempfile.TemporaryDirectory() as workdir:
        game = os.path.join(workdir, "game.json")
        model = os.path.join(workdir, "model.json")
        instance = os.path.join(workdir, "x.json")
        with open(game, "w") as fh:
            json.dump(test_game, fh)
        with open(model, "w") as fh:
            json.dump(build_model(), fh)
        with open(instance, "w") as fh:
            json.dump([0.5, -1.0, 0.25, 2.0, -0.75], fh)

        background = os.path.join(workdir, "bg.csv")
        rows = np.random.default_rng(1).normal(size=(40, 5))
        with open(background, "w") as fh:
            fh.write("f0,f1,f2,f3,f4\n")
            fh.write("\n".join(",".join(repr(float(c)) for c in row) for row in rows) + "\n")

        phi = os.path.join(workdir, "phi.csv")
        codes = [
            run("shapley", ["shapley", "--game", game, "--out", phi]),
            run("dividends", ["dividends", "--game", game, "--out", os.path.join(workdir, "d.json")]),
            run("verify", [
                "verify", "--n", "5", "--m", "3", "--trials", "200", "--seed", "42",
                "--report", os.path.join(workdir, "report.jsonl"),
            ]),
            run("explain-gaussian", [
                "explain-gaussian", "--model", model, "--instance", instance,
                "--path", "both", "--out", os.path.join(workdir, "gauss.csv"),
            ]),
            run("explain", [
                "explain", "--model", model, "--background", background,
                "--instance", instance, "--out", os.path.join(workdir, "interventional.csv"),
            ]),
            run("compare", ["compare", "--a", phi, "--b", phi, "--output-index", "0"]),
        ]

        with open(phi) as fh:
            print("\n" + "=" * 60)
            print("Attribution:")
            print("=" * 60)
            print(fh.read())

    sys.exit(0 if all(code == 0 for code in codes) else 1)
