#!/usr/bin/env python3
"""Render the first levels of the generating tree side by side: each path
next to its permutation image, labels in brackets."""

import argparse

from dyck312 import bijection, dyck, eco


def walk(p, h, depth, max_depth, lines):
    label = eco.label_of(p, h)
    pi = bijection.path_to_perm(p)
    pad = "    " * depth
    lines.append(f"{pad}({label})  {p.word or 'e'}  ~  {pi or 'e'}")
    if depth < max_depth:
        for child in eco.children(p, h):
            walk(child, h, depth + 1, max_depth, lines)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h", type=int, default=3)
    ap.add_argument("--depth", type=int, default=4)
    args = ap.parse_args()

    lines = []
    walk(dyck.EMPTY_PATH, args.h, 0, args.depth, lines)
    print("\n".join(lines))
    per_level = [len(level) for level in eco.iter_levels(args.h, args.depth)]
    print(f"\nlevel sizes: {per_level}")


if __name__ == "__main__":
    main()
