#!/usr/bin/env python3
"""Run the full cross-formula identity battery and print one line per check.

Equivalent to `macpoly verify all`; bounds can be raised for longer runs:

    python scripts/verify_identities.py --max-size 6 --max-n 4
"""

import argparse
import sys

from macpoly.verify import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", default="all",
                        choices=["all", "fixtures", "htilde", "j", "qsym"])
    parser.add_argument("--max-size", type=int, default=None)
    parser.add_argument("--max-n", type=int, default=None)
    args = parser.parse_args()

    results = run_suite(args.suite, args.max_size, args.max_n)
    for result in results:
        print(result.line())
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
