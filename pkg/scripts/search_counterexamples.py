#!/usr/bin/env python3
"""Long-running counterexample search over the open conjecture range.

The coefficient-reversal conjecture is proven for coefficients
{0, n-2, n-1, n}, for every matrix of order <= 3 and every triangular
matrix, and machine-verified for order 4; orders >= 5 are open in the
middle coefficient range.  This script hammers one order with many seeds
and reports anything it finds.  Any hit is serialized completely and can
be replayed with supertrop.lawcheck.replay.

Usage:
    python scripts/search_counterexamples.py [--n 5] [--trials 20000]
        [--seed 0] [--chunks 10] [--out found.json]
"""

import argparse
import json
import sys
import time

from supertrop.lawcheck import Constraint, GenConfig, explore_conjecture


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--trials", type=int, default=20000, help="trials per chunk")
    ap.add_argument("--seed", type=int, default=0, help="seed of the first chunk")
    ap.add_argument("--chunks", type=int, default=10)
    ap.add_argument("--range", type=int, nargs=2, default=[-10, 10], metavar=("LO", "HI"))
    ap.add_argument("--out", default="found.json")
    args = ap.parse_args()

    found = []
    failures = 0
    t0 = time.monotonic()
    for c in range(args.chunks):
        cfg = GenConfig(
            n=args.n,
            numerator_range=tuple(args.range),
            constraint=Constraint.NON_SINGULAR,
            seed=args.seed + c,
        )
        r = explore_conjecture(cfg, args.trials)
        failures += len(r.failures)
        found.extend(
            {"seed": cfg.seed, **cx} for cx in r.counterexamples
        )
        print(f"chunk {c}: seed {cfg.seed}, {r.trials} trials, "
              f"{len(r.counterexamples)} counterexamples, "
              f"{len(r.failures)} assertion failures, {r.elapsed_ms:.0f} ms")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"n": args.n, "counterexamples": found}, indent=2) + "\n")
    total = args.chunks * args.trials
    print(f"\nsearched {total} non-singular {args.n}x{args.n} instances "
          f"in {time.monotonic() - t0:.1f} s")
    print(f"counterexamples: {len(found)} (written to {args.out})")
    if failures:
        print(f"WARNING: {failures} assertion failures indicate a library bug")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
