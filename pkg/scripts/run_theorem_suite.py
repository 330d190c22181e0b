#!/usr/bin/env python3
"""Sweep the whole law-checking suite over a range of matrix orders.

Writes one combined JSON report and prints a summary table.  The default
parameters match the acceptance configuration: seed 42, orders 2..5,
500 trials per (check, order).

Usage:
    python scripts/run_theorem_suite.py [--trials 500] [--seed 42]
        [--orders 2 3 4 5] [--out suite_report.json] [--timing]
"""

import argparse
import json
import sys
import time

from supertrop.lawcheck import CHECK_IDS, GenConfig, run_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--out", default="suite_report.json")
    ap.add_argument("--timing", action="store_true",
                    help="embed wall-clock timing in the report")
    args = ap.parse_args()

    t0 = time.monotonic()
    reports = []
    failed = 0
    for check_id in CHECK_IDS:
        for n in args.orders:
            r = run_check(check_id, GenConfig(n=n, seed=args.seed), args.trials)
            reports.append(r)
            failed += len(r.failures)
            mark = "ok " if not r.failures else "BAD"
            print(f"{mark} {check_id:24s} n={n}  {r.passes}/{r.trials} passed  "
                  f"{len(r.counterexamples)} counterexamples  {r.elapsed_ms:7.0f} ms")
    payload = {"reports": [r.to_dict(include_timing=args.timing) for r in reports]}
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(payload, indent=2) + "\n")
    print(f"\nwrote {args.out}; total {time.monotonic() - t0:.1f} s; "
          f"{failed} assertion failures")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
