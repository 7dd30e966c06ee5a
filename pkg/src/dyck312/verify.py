"""Cross-validation suites behind the CLI verify subcommand.

Each check re-derives one of the package's structural claims from scratch
(exhaustive enumeration, factorial filtering, level-by-level tree walks) and
reports a named pass/fail result. The pytest suite asserts the same facts
independently; this module exists so the checks can be run from the shell.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations as iter_permutations

from . import bijection, dyck, eco, genfunc, prodmat
from . import perm as perm_mod

SCOPES = ("all", "bijection", "identities", "eco", "matrix")


@dataclass(frozen=True)
class VerifyBounds:
    n_max: int = 8          # object size for bijection/eco sweeps
    h_max: int = 5          # height bound for eco sweeps
    identity_n_max: int = 12
    alpha_max: int = 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def run(scope: str = "all", bounds: VerifyBounds = VerifyBounds()) -> list[CheckResult]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES}")
    results: list[CheckResult] = []
    if scope in ("all", "bijection"):
        results.extend(_bijection_checks(bounds))
    if scope in ("all", "identities"):
        results.extend(_identity_checks(bounds))
    if scope in ("all", "eco"):
        results.extend(_eco_checks(bounds))
    if scope in ("all", "matrix"):
        results.extend(_matrix_checks(bounds))
    return results


def _avoiders(n: int) -> list[perm_mod.Permutation]:
    return [
        pi
        for pi in (perm_mod.Permutation(t) for t in iter_permutations(range(1, n + 1)))
        if perm_mod.avoids_312(pi)
    ]


def _bijection_checks(bounds: VerifyBounds) -> list[CheckResult]:
    out: list[CheckResult] = []
    n_max = bounds.n_max

    bad = []
    for n in range(n_max + 1):
        for p in dyck.enumerate_dyck(n):
            pi = bijection.path_to_perm(p)
            if not perm_mod.avoids_312(pi) or bijection.perm_to_path(pi) != p:
                bad.append(p.word)
    out.append(
        CheckResult(
            "path-round-trip",
            not bad,
            f"n<={n_max}" if not bad else f"first failure: {bad[0]!r}",
        )
    )

    perm_n = min(n_max, 9)
    avoiders = {n: _avoiders(n) for n in range(perm_n + 1)}
    bad = []
    for n, pis in avoiders.items():
        if len(pis) != dyck.catalan(n):
            bad.append(f"count at n={n}")
        for pi in pis:
            if bijection.path_to_perm(bijection.perm_to_path(pi)) != pi:
                bad.append(str(pi))
    out.append(
        CheckResult(
            "perm-round-trip",
            not bad,
            f"n<={perm_n}" if not bad else f"first failure: {bad[0]}",
        )
    )

    cubic_n = min(n_max, 8)
    bad = []
    for n in range(cubic_n + 1):
        for t in iter_permutations(range(1, n + 1)):
            pi = perm_mod.Permutation(t)
            if perm_mod.avoids_312(pi) != perm_mod.avoids_312_cubic(pi):
                bad.append(str(pi))
    out.append(
        CheckResult(
            "stack-matches-cubic",
            not bad,
            f"n<={cubic_n}" if not bad else f"first failure: {bad[0]}",
        )
    )

    bad = []
    for n in range(n_max + 1):
        for p in dyck.enumerate_dyck(n):
            if bijection.lrm_heights(bijection.path_to_perm(p)) != _down_run_trace(p):
                bad.append(p.word)
    out.append(
        CheckResult(
            "lrm-excess-heights",
            not bad,
            f"n<={n_max}" if not bad else f"first failure: {bad[0]!r}",
        )
    )

    bad = []
    for n in range(perm_n + 1):
        paths = dyck.enumerate_dyck(n)
        for h in range(1, n + 2):
            height_image = {
                bijection.path_to_perm(p) for p in paths if dyck.height(p) <= h
            }
            valley_image = {
                bijection.path_to_perm(p) for p in paths if dyck.in_class(p, h, 2)
            }
            height_set = {pi for pi in avoiders[n] if perm_mod.in_height_class(pi, h)}
            valley_set = {pi for pi in avoiders[n] if perm_mod.in_class(pi, h)}
            if height_image != height_set or valley_image != valley_set:
                bad.append(f"n={n}, h={h}")
    out.append(
        CheckResult(
            "image-characterizations",
            not bad,
            f"n<={perm_n}, h<=n+1" if not bad else f"first failure: {bad[0]}",
        )
    )
    return out


def _down_run_trace(p: dyck.DyckPath) -> list[tuple[perm_mod.LrMaximum, int]]:
    """Trace the path directly: for the first down step of each maximal down
    run, record (position among downs, matching up label, height reached)."""
    stack: list[int] = []
    trace: list[tuple[perm_mod.LrMaximum, int]] = []
    label = 0
    level = 0
    downs = 0
    prev = ""
    for c in p.word:
        if c == "U":
            label += 1
            level += 1
            stack.append(label)
        else:
            level -= 1
            downs += 1
            matched = stack.pop()
            if prev != "D":
                trace.append((perm_mod.LrMaximum(downs, matched), level))
        prev = c
    return trace


def _identity_checks(bounds: VerifyBounds) -> list[CheckResult]:
    out: list[CheckResult] = []
    bad = [
        (n, alpha)
        for n in range(1, bounds.identity_n_max + 1)
        for alpha in range(bounds.alpha_max + 1)
        if not genfunc.catalan_identity(n, alpha)
    ]
    out.append(
        CheckResult(
            "catalan-identity-sweep",
            not bad,
            f"n<={bounds.identity_n_max}, alpha<={bounds.alpha_max}"
            if not bad
            else f"first failure: {bad[0]}",
        )
    )

    bad = [
        (h, n)
        for h in range(2, bounds.identity_n_max + 1)
        for n in range(h + 1)
        if genfunc.count_recurrence(h, n) != dyck.catalan(n)
    ]
    out.append(
        CheckResult(
            "catalan-cutoff",
            not bad,
            f"2<=h<={bounds.identity_n_max}, n<=h" if not bad else f"first failure: {bad[0]}",
        )
    )
    return out


def _eco_checks(bounds: VerifyBounds) -> list[CheckResult]:
    out: list[CheckResult] = []
    n_max = min(bounds.n_max, 9)
    h_range = range(3, max(3, bounds.h_max) + 1)

    membership_bad: list[str] = []
    cover_bad: list[str] = []
    label_bad: list[str] = []
    commute_bad: list[str] = []
    count_bad: list[str] = []
    for h in h_range:
        rule = eco.succession_rule(h)
        level = [dyck.EMPTY_PATH]
        for n in range(n_max + 1):
            produced: list[dyck.DyckPath] = []
            for p in level:
                kids = eco.children(p, h)
                produced.extend(kids)
                if not all(dyck.in_class(c, h, 2) for c in kids):
                    membership_bad.append(f"h={h}, parent {p.word!r}")
                labels = Counter(eco.label_of(c, h) for c in kids)
                if labels != Counter(rule.productions[eco.label_of(p, h)]):
                    label_bad.append(f"h={h}, parent {p.word!r}")
                mapped = [bijection.path_to_perm(c) for c in kids]
                if mapped != eco.perm_children(bijection.path_to_perm(p), h):
                    commute_bad.append(f"h={h}, parent {p.word!r}")
            if len(produced) != len(set(produced)):
                cover_bad.append(f"h={h}, level {n + 1} has duplicates")
            expected = {
                p for p in dyck.enumerate_dyck(n + 1) if dyck.in_class(p, h, 2)
            }
            if set(produced) != expected:
                cover_bad.append(f"h={h}, level {n + 1} misses members")
            total, per_label = eco.symbolic_counts(rule, n + 1)
            if total != len(produced) or per_label != dict(
                Counter(eco.label_of(c, h) for c in produced)
            ):
                count_bad.append(f"h={h}, level {n + 1}")
            level = produced

    def result(name: str, bad: list[str]) -> CheckResult:
        scope = f"h in {list(h_range)}, n<={n_max}"
        return CheckResult(name, not bad, scope if not bad else f"first failure: {bad[0]}")

    out.append(result("eco-children-in-class", membership_bad))
    out.append(result("eco-disjoint-and-complete", cover_bad))
    out.append(result("eco-label-coherence", label_bad))
    out.append(result("eco-perm-commutation", commute_bad))
    out.append(result("eco-symbolic-agreement", count_bad))
    return out


def _matrix_checks(bounds: VerifyBounds) -> list[CheckResult]:
    out: list[CheckResult] = []

    bad = [
        h
        for h in range(3, 11)
        if prodmat.matrix_from_rule(eco.succession_rule(h)).rows
        != prodmat.production_matrix(h).rows
    ]
    out.append(
        CheckResult(
            "rule-matrix-equality",
            not bad,
            "h=3..10" if not bad else f"first failure: h={bad[0]}",
        )
    )

    bad = []
    for h in range(2, 9):
        m = prodmat.production_matrix(h)
        for i, row in enumerate(m.rows, start=1):
            if sum(row) != i:
                bad.append(f"h={h}, row ({i})")
    out.append(
        CheckResult(
            "row-sums-match-labels",
            not bad,
            "h=2..8" if not bad else f"first failure: {bad[0]}",
        )
    )

    bad = []
    for h in range(3, 7):
        rule = eco.succession_rule(h)
        m = prodmat.matrix_from_rule(rule)
        for n in range(11):
            total, vec = prodmat.level_count(m, rule.axiom, n)
            sym_total, sym_labels = eco.symbolic_counts(rule, n)
            as_dict = {i + 1: v for i, v in enumerate(vec) if v}
            if total != sym_total or as_dict != sym_labels:
                bad.append(f"h={h}, n={n}")
    out.append(
        CheckResult(
            "per-label-level-counts",
            not bad,
            "h=3..6, n<=10" if not bad else f"first failure: {bad[0]}",
        )
    )

    fib = genfunc.series(genfunc.generating_function(2), 16)
    totals = prodmat.level_totals(prodmat.production_matrix(2), 1, 16)
    out.append(
        CheckResult(
            "fibonacci-level-counts",
            totals == fib,
            "n<=16" if totals == fib else f"{totals} != {fib}",
        )
    )
    return out
