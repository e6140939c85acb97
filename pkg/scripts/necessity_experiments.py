#!/usr/bin/env python3
"""Drop-hypothesis searches: how quickly does each law break without its guard?

For a selection of laws whose hypotheses do real work, disable the policy
that enforces the hypothesis (values become arbitrary subsets, chains and
disjointness are dropped) and count how many of the seeded trials violate
the conclusion.  A nonzero count demonstrates the hypothesis is necessary.
"""

import argparse
import sys

from softgamma import InstanceSpec, fuzz_theorem

EXPERIMENTS = (
    ("T3.7", InstanceSpec(generator="zn", size=(8,), gamma=(2, 4, 6))),
    ("T3.8", InstanceSpec(generator="zn", size=(8,), gamma=(2, 4, 6))),
    ("T3.9", InstanceSpec(generator="zn", size=(6,), gamma=(1,))),
    ("T3.12", InstanceSpec(generator="minmax", size=(5,), gamma=(1, 2, 3))),
    ("T3.17i", InstanceSpec(generator="zn", size=(8,), gamma=(2, 4, 6))),
    ("T4.2", InstanceSpec(generator="zn", size=(8,), gamma=(2, 4, 6))),
    ("T4.7", InstanceSpec(generator="matrix", size=(2, 1, 2))),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'law':8s} {'family':22s} {'fail':>6s} {'first-failing-trial':>20s}")
    for tid, template in EXPERIMENTS:
        template = InstanceSpec(
            generator=template.generator,
            size=template.size,
            gamma=template.gamma,
            seed=args.seed,
        )
        verdict = fuzz_theorem(tid, args.trials, template, drop_hypothesis=True)
        first = verdict.counterexample["trial"] if verdict.counterexample else "-"
        family = f"{template.generator}{template.size}"
        print(f"{tid:8s} {family:22s} {verdict.failures:6d} {str(first):>20s}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
