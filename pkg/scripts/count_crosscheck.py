#!/usr/bin/env python3
"""Sweep the class counts over a grid of height bounds and sizes, computing
every applicable method and asserting they agree. Prints one row per bound."""

import argparse

from dyck312 import dyck, eco, genfunc, prodmat


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h-max", type=int, default=7)
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args()

    print(f"counts by size 0..{args.n_max}; all methods agree per row")
    for h in range(1, args.h_max + 1):
        if h == 1:
            counts = genfunc.series(genfunc.generating_function(1), args.n_max)
        else:
            counts = genfunc.count_sequence(h, args.n_max)
            assert counts == genfunc.series(genfunc.generating_function(h), args.n_max)
            assert counts == prodmat.level_totals(
                prodmat.production_matrix(h), 1, args.n_max
            )
        if h >= 3 and args.n_max <= eco.DEFAULT_TREE_CAP:
            assert counts == tuple(
                len(level) for level in eco.iter_levels(h, args.n_max)
            )
        if args.n_max <= dyck.DEFAULT_CAP:
            assert counts == tuple(
                dyck.count_brute(n, h, 2) for n in range(args.n_max + 1)
            )
        print(f"h={h:2d}: " + " ".join(f"{c}" for c in counts))


if __name__ == "__main__":
    main()
