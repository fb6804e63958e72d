#!/usr/bin/env python3
"""Long-horizon soundness sweep over the check registry.

The in-tree acceptance gate runs 1000 trials per expected-to-hold entry;
this script is the out-of-band version for the full no-false-alarms
invariant (10^4 trials per entry by default, roughly ten minutes).

    python scripts/run_soundness_sweep.py --trials 10000 --out sweep.json
"""
import argparse
import sys
import time

from opineq import registry
from opineq.io import dump_json
from opineq.suite import run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--tol", type=float, default=1e-9)
    ap.add_argument("--dims", default="2,3,4,5,6,7,8")
    ap.add_argument("--names", default=None,
                    help="comma-separated subset (default: all expected-to-hold)")
    ap.add_argument("--out", default=None, help="write the report JSON here")
    args = ap.parse_args()

    names = args.names.split(",") if args.names else registry.names(expected_to_hold=True)
    dims = tuple(int(d) for d in args.dims.split(","))

    t0 = time.monotonic()
    report = run_suite(seed=args.seed, trials=args.trials, names=names,
                       dims=dims, tol=args.tol, suite_name="soundness-sweep")
    elapsed = time.monotonic() - t0

    print(f"{len(names)} checks x {args.trials} trials in {elapsed:.0f}s")
    print(f"min margin {report.min_margin:.3e}, failures {len(report.failures)}")
    for fail in report.failures[:20]:
        print(f"  FAIL {fail['check_name']} trial {fail['trial']}: "
              f"margin {fail['margin']:.3e}")
    if args.out:
        dump_json(report.to_record(), args.out)
        print(f"report written to {args.out}")
    return 0 if not report.failures else 1


if __name__ == "__main__":
    sys.exit(main())
