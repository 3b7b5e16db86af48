#!/usr/bin/env python3
"""Sweep seeded random instances and compare the decision procedure
against the brute-force oracle.

Usage: python scripts/agreement_sweep.py [--count 500] [--start 0]
       [--max-degree 10] [--regular]

Prints one line per mismatch (there should be none) and a summary with
the verdict split, so generator drift is visible over time.
"""

import argparse
import sys
import time
from collections import Counter

from twoclosure.decider import decide_with_oracle_check
from twoclosure.fixtures import random_abelian_cyclic, random_regular_abelian


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--start", type=int, default=0)
    parser.add_argument("--max-degree", type=int, default=10)
    parser.add_argument("--regular", action="store_true",
                        help="sweep regular abelian groups instead")
    args = parser.parse_args()

    make = random_regular_abelian if args.regular else random_abelian_cyclic
    verdicts = Counter()
    mismatches = 0
    start = time.perf_counter()
    for seed in range(args.start, args.start + args.count):
        group = make(seed, args.max_degree)
        report = decide_with_oracle_check(group)
        verdicts[report.decided] += 1
        if report.mismatch:
            mismatches += 1
            print(f"MISMATCH seed={seed} decide={report.decided} oracle={report.oracle}")
            for step in report.trace.steps:
                print(f"  {step.kind} degree={step.degree} order={step.order}")
    elapsed = time.perf_counter() - start

    print(
        f"{args.count} instances (max degree {args.max_degree}): "
        f"{verdicts[True]} closed, {verdicts[False]} not closed, "
        f"{mismatches} mismatches in {elapsed:.1f}s"
    )
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
