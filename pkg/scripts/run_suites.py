"""Run every applicable property suite over a grid of preset configurations.

    python3 scripts/run_suites.py --samples 100 --seed 0
"""

import argparse
import itertools

from gencartan.families import validate
from gencartan.presets import load_preset
from gencartan.suites import SUITES, SuiteNotApplicable, run_suite

PRESETS = [
    "example-2",
    "example-2:n1=0,n2=2",
    "example-2:n1=2,n2=0",
    "example-4",
    "example-4:k=2",
    "example-4:kinds=NN",
    "example-4:m=2,m1=1,kinds=0NN0",
    "example-5",
    "example-5:kinds=0NN,sigma_n=2",
    "example-5:kinds=NNN",
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    failures = 0
    for preset, suite in itertools.product(PRESETS, sorted(SUITES)):
        cfg = load_preset(preset)
        assert not validate(cfg), preset
        try:
            res = run_suite(suite, cfg, args.samples, args.seed)
        except SuiteNotApplicable:
            continue
        failures += not res.ok
        print(f"{preset:32s} {res.lines()[0]}")
        for line in res.lines()[1:]:
            print("    " + line)
    print(f"{failures} suite(s) with violations")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
