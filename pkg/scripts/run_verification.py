#!/usr/bin/env python3
"""Run every verification suite and print the full report.

Exit code 1 if any suite finds a counterexample, which should never happen.
"""

import argparse
import sys

from cl8.suites import render_report, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--output", default=None)
    args = ap.parse_args()

    results = run_all(seed=args.seed)
    report = render_report(results)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report + "\n")
    else:
        print(report)
    return 0 if all(s["passed"] for s in results) else 1


if __name__ == "__main__":
    sys.exit(main())
