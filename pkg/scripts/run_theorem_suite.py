#!/usr/bin/env python3
"""Run every registered closure law at full trial count and print a table.

Each law is fuzzed over seeded instances drawn from the three structure
families (modular, min/max, matrix) with its hypothesis-enforcing policies
active; the suite is green when no law reports a counterexample.
"""

import argparse
import json
import sys
import time

from softgamma import InstanceSpec, files, fuzz_theorem
from softgamma.harness import ALL_THEOREMS


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", default=None, help="write the verdicts to a JSON file")
    args = parser.parse_args()

    template = InstanceSpec(seed=args.seed)
    verdicts = []
    failures = 0
    start = time.monotonic()
    print(f"{'law':10s} {'trials':>6s} {'pass':>6s} {'vacuous':>8s} {'fail':>5s}")
    for tid in ALL_THEOREMS:
        verdict = fuzz_theorem(tid, args.trials, template)
        verdicts.append(files.verdict_to_doc(verdict))
        failures += verdict.failures
        print(
            f"{tid:10s} {verdict.trials:6d} {verdict.passes:6d} "
            f"{verdict.vacuous:8d} {verdict.failures:5d}"
        )
    print(f"total time: {time.monotonic() - start:.1f}s")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(verdicts, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
