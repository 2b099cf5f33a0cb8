#!/usr/bin/env python3
"""Run the full identity catalog and print a verification report.

Usage:
    python3 scripts/run_catalog.py [DEGREE] [--json PATH]

Equivalent to `thetadissect catalog all --degree DEGREE`, kept as a direct
script for quick experiment loops from a source checkout.
"""
import argparse
import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from thetadissect.catalog import builtin_catalog, summarize, verify_identity  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("degree", nargs="?", type=int, default=60)
    parser.add_argument("--json", default=None, help="also write the machine-readable report here")
    args = parser.parse_args()

    start = time.perf_counter()
    reports = [verify_identity(identity, args.degree)
               for identity in sorted(builtin_catalog(), key=lambda i: i.name)]
    elapsed = time.perf_counter() - start

    width = max(len(r.name) for r in reports)
    for r in reports:
        extra = ""
        if r.status == "failed":
            extra = "  first mismatch at %s" % r.first_mismatch.monomial.render()
        elif r.status == "error":
            extra = "  %s" % r.error
        print("%-*s  %-8s  lhs=%3d rhs=%3d  %7.1f ms%s"
              % (width, r.name, r.status, r.lhs_terms, r.rhs_terms, r.millis, extra))
    summary = summarize(reports)
    print("-" * (width + 40))
    print("degree %d: %d total, %d verified, %d failed, %d error (%.2fs)"
          % (args.degree, summary["total"], summary["verified"],
             summary["failed"], summary["error"], elapsed))

    if args.json:
        with open(args.json, "w") as handle:
            json.dump({"reports": [r.to_dict() for r in reports], "summary": summary},
                      handle, indent=2)
        print("wrote %s" % args.json)

    return 0 if summary["verified"] == summary["total"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
