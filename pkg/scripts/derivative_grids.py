#!/usr/bin/env python3
"""Emit the two derivative grids of the equal-tail line profile as CSV.

The first grid is the analytic d/dy over tail weights in [1/8, 1/4); the
second is the second central difference (convexity) over (0, 1/8).  Both
are expected to be nonnegative everywhere on their domains.
"""

import argparse

import numpy as np

from epower.epower2q import (
    e2_derivative,
    e2_derivative_limit_lower,
    e2_derivative_limit_upper,
    example1_line_entropy,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=101)
    args = parser.parse_args()
    n = args.grid

    print("grid,y,csq,value")
    ys = np.linspace(-1.0, 1.0, n)
    for csq in np.linspace(0.125, 0.25, n, endpoint=False):
        for yv in ys:
            if yv <= -1.0 + 1e-15:
                val = e2_derivative_limit_lower(csq)
            elif yv >= 1.0 - 1e-15:
                val = e2_derivative_limit_upper(csq)
            else:
                val = e2_derivative(yv, csq)
            print(f"first,{float(yv)!r},{float(csq)!r},{float(val)!r}")

    ys = np.linspace(-1.0, 1.0, n + 2)
    h = ys[1] - ys[0]
    for csq in np.linspace(0.0, 0.125, n + 2)[1:-1]:
        e2 = np.array([example1_line_entropy(yv, csq) for yv in ys])
        second = (e2[2:] - 2.0 * e2[1:-1] + e2[:-2]) / (h * h)
        for yv, val in zip(ys[1:-1], second):
            print(f"second,{float(yv)!r},{float(csq)!r},{float(val)!r}")


if __name__ == "__main__":
    main()
