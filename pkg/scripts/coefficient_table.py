#!/usr/bin/env python3
"""Print the denominator-coefficient table and check the closed form against
the polynomial recurrence for every printed entry."""

import argparse

from dyck312 import genfunc


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h-max", type=int, default=14)
    ap.add_argument("--j-max", type=int, default=8)
    args = ap.parse_args()

    width = 5
    print(" ".join([f"{'h/j':>{width}}"] + [f"{j:>{width}}" for j in range(1, args.j_max + 1)]))
    for h in range(1, args.h_max + 1):
        poly = genfunc.denominator_poly(h)
        row = []
        for j in range(1, args.j_max + 1):
            c = genfunc.denominator_coeff(h, j)
            assert c == -poly.coefficient(j)
            row.append(c)
        print(" ".join([f"{h:>{width}}"] + [f"{c:>{width}}" for c in row]))


if __name__ == "__main__":
    main()
