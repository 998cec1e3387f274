#!/usr/bin/env python3
"""Emit line-profile CSV data for a few representative gates.

Each row is gate label, alpha, E(alpha, pi/2 - alpha).  Redirect stdout
to a file to plot elsewhere.
"""

import argparse
from math import pi

import numpy as np

from epower.canonical import CanonicalParams, coefficients_from_xyz
from epower.epower2q import line_profile_values

GATES = {
    "swap": (pi / 4, pi / 4),
    "deep": (0.6, 0.3),
    "shallow": (0.15, 0.15),
    "balanced": (pi / 4, 0.2),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=401)
    args = parser.parse_args()

    alphas = np.linspace(0.0, pi / 4, args.n)
    print("gate,alpha,E")
    for label, (x, y) in GATES.items():
        c = coefficients_from_xyz(CanonicalParams(x, y, y))
        for a, v in zip(alphas, line_profile_values(c, alphas)):
            print(f"{label},{float(a)!r},{float(v)!r}")


if __name__ == "__main__":
    main()
