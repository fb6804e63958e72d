#!/usr/bin/env python3
"""Evaluate the claimed 2x2 counterexample family and scan its grid.

Prints the deficit matrix T(x, alpha, beta) at the requested point (default:
the stated refutation point x = 2, alpha = pi/3, beta = pi/4), then sweeps
the standard grid and reports the most negative eigenvalue found anywhere.

On this implementation of the displayed formula the stated point comes out
positive definite and the grid minimum sits at numerical zero, i.e. the
family never actually violates the candidate bound; run with --grid to see
for yourself.
"""
import argparse
import json
import sys

import numpy as np

from opineq.cli import parse_angle
from opineq.falsify import DEFAULT_GRID, counterexample_T, search_violations
from opineq.io import matrix_to_json


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x", type=float, default=2.0)
    ap.add_argument("--alpha", default="pi/3")
    ap.add_argument("--beta", default="pi/4")
    ap.add_argument("--grid", action="store_true",
                    help="also sweep the full default grid")
    args = ap.parse_args()

    alpha, beta = parse_angle(args.alpha), parse_angle(args.beta)
    t, eigs, psd = counterexample_T(args.x, alpha, beta)
    print(json.dumps({
        "x": args.x, "alpha": alpha, "beta": beta,
        "T": matrix_to_json(t), "eigenvalues": list(eigs), "psd": psd,
        "trace": float(np.trace(t)), "determinant": float(np.linalg.det(t)),
    }, indent=2))

    if args.grid:
        worst = None
        for x in DEFAULT_GRID["x"]:
            for a in DEFAULT_GRID["alpha"]:
                for b in DEFAULT_GRID["beta"]:
                    _, w, _ = counterexample_T(x, a, b)
                    if worst is None or w[0] < worst[0]:
                        worst = (w[0], x, a, b)
        print(f"grid minimum eigenvalue: {worst[0]:.3e} at "
              f"(x={worst[1]}, alpha={worst[2]:.6f}, beta={worst[3]:.6f})")
        reports = search_violations("inverse_square_candidate")
        print(f"violations at default tolerance: {len(reports)}")
        return 0 if reports else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
