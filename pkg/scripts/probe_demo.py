"""Ideal-closure probes from random seeds on several small configurations.

Each line reports how much of the finite window the ideal generated by a
seed reaches using only brackets that stay inside the window.

    python3 scripts/probe_demo.py --seeds 5
"""

import argparse
import random

from gencartan.families import from_vector
from gencartan.hamiltonian import HamiltonianConfig
from gencartan.presets import example_2, example_4, example_5
from gencartan.probe import Window, ideal_closure, window_keys
from gencartan.witt import WittConfig

CASES = [
    ("witt k=1 N", WittConfig.build(1, 1, "N", [[1]]), Window(((-3, 3),), 2)),
    ("example-2", example_2(1, 1), Window(((-1, 1), (-1, 1)), 1)),
    ("example-4 k=2", example_4(k=2, m=1), Window(((-1, 1), (-1, 1), (-1, 1), (-1, 1)))),
    ("degenerate H", HamiltonianConfig.build(2, 2, "00", [[1, 0], [0, 1]], m1=1, sigmas=[[1, 1]]), Window.cube(2, 2)),
    ("example-5", example_5("000"), Window.cube(3, 1)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--rng-seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.rng_seed)
    for name, cfg, window in CASES:
        keys = window_keys(cfg, window)
        for _ in range(args.seeds):
            picks = rng.sample(keys, rng.randint(1, 3))
            seed = from_vector({k: rng.choice((-2, -1, 1, 2)) for k in picks}, cfg)
            rep = ideal_closure(cfg, seed, window)
            print(f"{name:14s} reached {rep.reached_dim:3d}/{rep.window_dim:<3d} iterations {rep.iterations}  seed {seed}")


if __name__ == "__main__":
    main()
