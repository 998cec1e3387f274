#!/usr/bin/env python3
"""Sweep the edge-maximum conjecture over random gates.

For each sampled gate the line profile is scanned on a dense grid and the
interior excess over the two edge values is recorded.  Any excess above
1e-9 would be a counterexample; the summary goes to stdout as JSON.
"""

import argparse
import json
from math import pi

import numpy as np

from epower.epower2q import conjecture_gap


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--gates", type=int, default=200)
    parser.add_argument("--grid", type=int, default=4001)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    worst = -np.inf
    worst_gate = None
    findings = []
    for _ in range(args.gates):
        x = rng.uniform(1e-3, pi / 4)
        y = rng.uniform(1e-3, x)
        gap = conjecture_gap(x, y, grid_n=args.grid)
        if gap > worst:
            worst, worst_gate = gap, (x, y)
        if gap > 1e-9:
            findings.append({"x": x, "y": y, "interior_excess": gap})

    print(json.dumps({
        "gates": args.gates,
        "grid": args.grid,
        "seed": args.seed,
        "max_interior_excess": worst,
        "argmax_gate": {"x": worst_gate[0], "y": worst_gate[1]},
        "findings": findings,
    }, sort_keys=True))


if __name__ == "__main__":
    main()
