#!/usr/bin/env python3
"""Run the verification battery across the standard desk-scale types.

Covers the same ground as tests/test_acceptance.py but as a standalone
command, printing one line per suite and exiting nonzero on any failure.
"""

import sys
import time

from kltangent.verify import VerifyConfig, run_battery

TYPES = ["A2", "B2", "G2", "A3", "B3", "C3", "A4", "D4"]


def main() -> int:
    config = VerifyConfig(random_cases=500)
    failed = False
    for label in TYPES:
        t0 = time.perf_counter()
        outcomes = run_battery(label, config)
        elapsed = time.perf_counter() - t0
        bad = [o for o in outcomes if not o.ok]
        cases = sum(o.cases for o in outcomes)
        print(f"{label:4s} {'FAIL' if bad else 'ok':4s} suites={len(outcomes):2d} "
              f"cases={cases:7d} time={elapsed:6.2f}s")
        for o in bad:
            failed = True
            print(f"     FAIL {o.suite}: {o.failures[:5]}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
