#!/usr/bin/env python3
"""Run every gallery fixture's expected-property table and print the
results as a provenance-tagged report."""

import argparse
import sys

from pradical.gallery import FIXTURE_TABLES, run_fixture


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*",
                        help="fixture names (default: all)")
    args = parser.parse_args()

    names = args.names or sorted(FIXTURE_TABLES)
    failures = 0
    for name in names:
        print("== %s ==" % name)
        for row in run_fixture(name):
            status = "pass" if row["passed"] else "FAIL"
            print("  %-24s %-5s actual=%s expected=%s [%s]"
                  % (row["assertion"], status, row["actual"],
                     row["expected"], row["tag"]))
            if not row["passed"]:
                failures += 1
    if failures:
        print("%d assertion(s) failed" % failures)
        return 1
    print("all fixture assertions passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
