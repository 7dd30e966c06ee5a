"""Command-line surface: counting, listing, mapping, tree/matrix/table
rendering, and the cross-validation suite.

Exit codes: 0 success, 1 verification failure or method disagreement,
2 usage or parse errors. Output is deterministic for fixed arguments; JSON
documents carry schema_version 1.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, dyck, eco, genfunc, prodmat
from . import perm as perm_mod
from . import verify as verify_mod

SCHEMA_VERSION = 1
LARGE_N_LIMIT = 512  # polynomial-time methods stay exact well past this; a sanity rail
METHODS = ("recurrence", "series", "matrix", "brute", "eco")


class UsageError(Exception):
    pass


class MethodDisagreement(Exception):
    pass


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (dyck.CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MethodDisagreement as exc:
        print(f"method disagreement: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyck312",
        description=(
            "Height-bounded Dyck paths without valleys just below the bound, "
            "their 312-avoiding permutation images, and exact counts of both."
        ),
    )
    sub = parser.add_subparsers(required=True, metavar="command")

    p = sub.add_parser("count", help="count class members for sizes 0..N-MAX")
    p.add_argument("--h", type=int, required=True, help="height bound")
    p.add_argument("--n-max", type=int, required=True, help="largest size to count")
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument(
        "--check-all",
        action="store_true",
        help="alias for --method all: compute every applicable method and compare",
    )
    p.add_argument("--k", type=int, default=2, help="valley-run bound (brute only)")
    p.add_argument("--cap", type=int, default=None, help="enumeration/tree size cap")
    _output_flags(p, ("text", "csv", "json"))
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("list", help="list the class members of one size, with labels")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("paths", "perms"), default="paths")
    p.add_argument("--cap", type=int, default=None)
    _output_flags(p, ("text", "csv", "json"))
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("map", help="map stdin lines across the bijection")
    p.add_argument(
        "--direction",
        choices=("auto", "to-perm", "to-path"),
        default="auto",
        help="auto infers from the line's alphabet",
    )
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("tree", help="print the generating tree to a depth")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--kind", choices=("paths", "perms"), default="paths")
    p.add_argument("--cap", type=int, default=None)
    _output_flags(p, ("text", "json"))
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("matrix", help="print the production matrix for a bound")
    p.add_argument("--h", type=int, required=True)
    _output_flags(p, ("text", "json"))
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("table", help="print the denominator-coefficient table")
    p.add_argument("--h-max", type=int, default=14)
    p.add_argument("--j-max", type=int, default=8)
    _output_flags(p, ("text", "csv", "json"))
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run the cross-validation suites")
    p.add_argument("--scope", choices=verify_mod.SCOPES, default="all")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--h-max", type=int, default=5)
    p.add_argument("--identity-n-max", type=int, default=12)
    p.add_argument("--alpha-max", type=int, default=6)
    _output_flags(p, ("text", "json"))
    p.set_defaults(func=_cmd_verify)

    return parser


def _output_flags(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--out", default=None, help="write output to a file instead of stdout")


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_doc(command: str, payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "command": command}
    doc.update(payload)
    return json.dumps(doc, indent=2)


# ---------------------------------------------------------------- count


def _cmd_count(args) -> int:
    h, n_max, k = args.h, args.n_max, args.k
    if args.check_all:
        args.method = "all"
    if h < 1:
        raise UsageError("--h must be >= 1")
    if n_max < 0:
        raise UsageError("--n-max must be >= 0")
    if k != 2 and args.method != "brute":
        raise UsageError("--k other than 2 needs --method brute")
    if args.method in ("recurrence", "series", "matrix") and n_max > LARGE_N_LIMIT:
        raise UsageError(f"--n-max above {LARGE_N_LIMIT} is not supported")

    enum_cap = args.cap if args.cap is not None else dyck.DEFAULT_CAP
    tree_cap = args.cap if args.cap is not None else eco.DEFAULT_TREE_CAP

    def compute(method: str) -> list[int]:
        if method == "recurrence":
            if h < 2:
                raise UsageError("--method recurrence needs --h >= 2")
            return list(genfunc.count_sequence(h, n_max))
        if method == "series":
            return list(genfunc.series(genfunc.generating_function(h), n_max))
        if method == "matrix":
            if h < 2:
                raise UsageError("--method matrix needs --h >= 2")
            return list(prodmat.level_totals(prodmat.production_matrix(h), 1, n_max))
        if method == "brute":
            return [dyck.count_brute(n, h, k, cap=enum_cap) for n in range(n_max + 1)]
        if h < 3:
            raise UsageError("--method eco needs --h >= 3")
        return [len(level) for level in eco.iter_levels(h, n_max, cap=tree_cap)]

    if args.method == "all":
        wanted = [m for m in METHODS if _applicable(m, h, n_max, enum_cap, tree_cap)]
        if not wanted:
            raise UsageError(f"no counting method can reach --n-max {n_max}")
    else:
        wanted = [args.method]
    by_method = {m: compute(m) for m in wanted}

    counts = by_method[wanted[0]]
    for m in wanted[1:]:
        if by_method[m] != counts:
            diffs = [
                f"n={i}: " + ", ".join(f"{name}={vals[i]}" for name, vals in by_method.items())
                for i in range(n_max + 1)
                if len({vals[i] for vals in by_method.values()}) > 1
            ]
            raise MethodDisagreement(diffs[0])

    if args.format == "text":
        _emit(",".join(map(str, counts)), args.out)
    elif args.format == "csv":
        lines = ["n," + ",".join(wanted)]
        lines += [f"{i}," + ",".join(str(by_method[m][i]) for m in wanted) for i in range(n_max + 1)]
        _emit("\n".join(lines), args.out)
    else:
        payload = {
            "h": h,
            "k": k,
            "n_max": n_max,
            "method": args.method,
            "counts": counts,
        }
        if args.method == "all":
            payload["methods"] = {m: by_method[m] for m in wanted}
        _emit(_json_doc("count", payload), args.out)
    return 0


def _applicable(method: str, h: int, n_max: int, enum_cap: int, tree_cap: int) -> bool:
    if method in ("recurrence", "matrix"):
        return h >= 2 and n_max <= LARGE_N_LIMIT
    if method == "series":
        return n_max <= LARGE_N_LIMIT
    if method == "brute":
        return n_max <= enum_cap
    return h >= 3 and n_max <= tree_cap


# ---------------------------------------------------------------- list


def _cmd_list(args) -> int:
    if args.h < 3:
        raise UsageError("--h must be >= 3; labels come from the generating tree")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    cap = args.cap if args.cap is not None else eco.DEFAULT_TREE_CAP
    nodes = eco.generate_level(args.h, args.n, cap=cap)
    if args.kind == "perms":
        rows = [(str(bijection.path_to_perm(node.obj)), node.label) for node in nodes]
    else:
        rows = [(node.obj.word, node.label) for node in nodes]

    if args.format == "text":
        _emit("\n".join(f"({label}) {text}".rstrip() for text, label in rows), args.out)
    elif args.format == "csv":
        lines = ["object,label"] + [f"{text},{label}" for text, label in rows]
        _emit("\n".join(lines), args.out)
    else:
        payload = {
            "h": args.h,
            "n": args.n,
            "kind": args.kind,
            "objects": [{"object": text, "label": label} for text, label in rows],
        }
        _emit(_json_doc("list", payload), args.out)
    return 0


# ---------------------------------------------------------------- map


def _cmd_map(args) -> int:
    out_lines: list[str] = []
    errors: list[str] = []
    for i, raw in enumerate(sys.stdin.read().splitlines(), start=1):
        line = raw.strip()
        direction = args.direction
        if direction == "auto":
            direction = "to-perm" if set(line) <= {"U", "D"} else "to-path"
        try:
            if direction == "to-perm":
                out_lines.append(str(bijection.path_to_perm(dyck.parse_path(line))))
            else:
                out_lines.append(str(bijection.perm_to_path(perm_mod.parse_perm(line))))
        except ValueError as exc:
            errors.append(f"line {i}: {exc}")
    if out_lines:
        _emit("\n".join(out_lines), args.out)
    for message in errors:
        print(message, file=sys.stderr)
    return 1 if errors else 0


# ---------------------------------------------------------------- tree


def _cmd_tree(args) -> int:
    if args.depth < 0:
        raise UsageError("--depth must be >= 0")
    cap = args.cap if args.cap is not None else eco.DEFAULT_TREE_CAP
    if args.depth > cap:
        raise dyck.CapExceeded(f"depth {args.depth} exceeds tree cap {cap}")

    def render(p: dyck.DyckPath) -> str:
        if args.kind == "perms":
            return str(bijection.path_to_perm(p))
        return p.word

    def build(p: dyck.DyckPath, level: int) -> dict:
        node = {"label": eco.label_of(p, args.h), "object": render(p)}
        if level < args.depth:
            node["children"] = [build(c, level + 1) for c in eco.children(p, args.h)]
        else:
            node["children"] = []
        return node

    root = build(dyck.EMPTY_PATH, 0)

    if args.format == "text":
        lines: list[str] = []

        def walk(node: dict, depth: int) -> None:
            lines.append(("  " * depth + f"({node['label']}) {node['object']}").rstrip())
            for child in node["children"]:
                walk(child, depth + 1)

        walk(root, 0)
        _emit("\n".join(lines), args.out)
    else:
        _emit(
            _json_doc("tree", {"h": args.h, "depth": args.depth, "kind": args.kind, "root": root}),
            args.out,
        )
    return 0


# ---------------------------------------------------------------- matrix


def _cmd_matrix(args) -> int:
    if args.h < 2:
        raise UsageError("--h must be >= 2")
    m = prodmat.production_matrix(args.h)
    if args.format == "text":
        width = max(len(str(e)) for row in m.rows for e in row)
        lines = [" ".join(f"{e:>{width}}" for e in row) for row in m.rows]
        _emit("\n".join(lines), args.out)
    else:
        _emit(_json_doc("matrix", {"h": args.h, "rows": [list(r) for r in m.rows]}), args.out)
    return 0


# ---------------------------------------------------------------- table


def _cmd_table(args) -> int:
    if args.h_max < 1 or args.j_max < 1:
        raise UsageError("--h-max and --j-max must be >= 1")
    rows = [
        [genfunc.denominator_coeff(h, j) for j in range(1, args.j_max + 1)]
        for h in range(1, args.h_max + 1)
    ]
    if args.format == "text":
        width = max(
            [len(str(e)) for row in rows for e in row] + [len(str(args.h_max)), 3]
        )
        header = " ".join([f"{'h/j':>{width}}"] + [f"{j:>{width}}" for j in range(1, args.j_max + 1)])
        lines = [header]
        for h, row in enumerate(rows, start=1):
            lines.append(" ".join([f"{h:>{width}}"] + [f"{e:>{width}}" for e in row]))
        lines.append("")
        lines.append("note: the diagonals line up with OEIS A112467")
        _emit("\n".join(lines), args.out)
    elif args.format == "csv":
        lines = ["h," + ",".join(str(j) for j in range(1, args.j_max + 1))]
        lines += [f"{h}," + ",".join(map(str, row)) for h, row in enumerate(rows, start=1)]
        _emit("\n".join(lines), args.out)
    else:
        _emit(
            _json_doc(
                "table",
                {"h_max": args.h_max, "j_max": args.j_max, "coefficients": rows},
            ),
            args.out,
        )
    return 0


# ---------------------------------------------------------------- verify


def _cmd_verify(args) -> int:
    bounds = verify_mod.VerifyBounds(
        n_max=args.n_max,
        h_max=args.h_max,
        identity_n_max=args.identity_n_max,
        alpha_max=args.alpha_max,
    )
    results = verify_mod.run(scope=args.scope, bounds=bounds)
    ok = all(r.passed for r in results)
    if args.format == "text":
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f" ({r.detail})" if r.detail else "")
            for r in results
        ]
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        _emit("\n".join(lines), args.out)
    else:
        payload = {
            "scope": args.scope,
            "passed": ok,
            "results": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
            ],
        }
        _emit(_json_doc("verify", payload), args.out)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
