#!/usr/bin/env python3
"""Sweep the root-of-unity transformation grid and time both sides.

For every modulus m up to MAX_M and every exponent e in [0, m), expands
f(zeta_m^e a, zeta_m^e b) directly and as the coefficient-weighted sum of
closed-form dissection components, and checks exact agreement through the
requested degree.

Usage:
    python3 scripts/transform_grid.py [MAX_M] [DEGREE]
"""
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from thetadissect.dissect import transform_lhs, transform_rhs  # noqa: E402


def main():
    max_m = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    degree = int(sys.argv[2]) if len(sys.argv) > 2 else 60

    all_ok = True
    print("degree %d" % degree)
    for m in range(1, max_m + 1):
        start = time.perf_counter()
        agreed = 0
        for e in range(m):
            lhs = transform_lhs(m, e, degree)
            rhs = transform_rhs(m, e, degree)
            if lhs.equal_through(rhs, degree):
                agreed += 1
        elapsed = (time.perf_counter() - start) * 1000
        ok = agreed == m
        all_ok = all_ok and ok
        print("m=%d: %d/%d exponents agree  (%6.1f ms)%s"
              % (m, agreed, m, elapsed, "" if ok else "  MISMATCH"))
    print("grid %s" % ("verified" if all_ok else "FAILED"))
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
