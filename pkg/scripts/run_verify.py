#!/usr/bin/env python3
"""Run every verification suite at its full documented range.

Equivalent to `repst verify --suite all` but prints a compact table and a
nonzero exit status on any failed identity, which makes it convenient as a
CI gate:

    python scripts/run_verify.py [--json]
"""

import argparse
import json
import sys

from repst import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    reports = verify.run_suites("all")
    if args.json:
        print(json.dumps({"pass": all(r.passed for r in reports),
                          "suites": [r.to_json() for r in reports]}, indent=2))
    else:
        width = max(len(r.suite) for r in reports)
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.suite:<{width}}  {r.checks:5d} checks  {status}  {r.elapsed:6.2f}s")
            for f in r.failures:
                print(f"    {f.check} {f.where}: {f.detail}")
        total = sum(r.checks for r in reports)
        print(f"{'total':<{width}}  {total:5d} checks")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
