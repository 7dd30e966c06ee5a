"""The down-step labelling bijection between Dyck paths and 312-avoiding
permutations, and the excess/height transport along it."""

from __future__ import annotations

from .dyck import DyckPath
from .perm import LrMaximum, Permutation, avoids_312, left_to_right_maxima


class Not312Avoiding(ValueError):
    """Operand contains the pattern 312."""


def path_to_perm(p: DyckPath) -> Permutation:
    """Label the ups 1..n left to right, give each down its matching up's
    label, read the down labels in order. The result avoids 312."""
    stack: list[int] = []
    out: list[int] = []
    label = 0
    for c in p.word:
        if c == "U":
            label += 1
            stack.append(label)
        else:
            out.append(stack.pop())
    return Permutation(tuple(out))


def perm_to_path(pi: Permutation) -> DyckPath:
    """Inverse map via the descending-run factorization.

    Each left-to-right maximum heads a descending run; emit ups for the jump
    between consecutive maxima and downs for the run size.
    """
    if not avoids_312(pi):
        raise Not312Avoiding(f"'{pi}' contains 312")
    maxima = left_to_right_maxima(pi)
    n = len(pi.entries)
    parts: list[str] = []
    prev_value = 0
    for j, m in enumerate(maxima):
        run_end = maxima[j + 1].index if j + 1 < len(maxima) else n + 1
        parts.append("U" * (m.value - prev_value))
        parts.append("D" * (run_end - m.index))
        prev_value = m.value
    return DyckPath("".join(parts))


def lrm_heights(pi: Permutation) -> list[tuple[LrMaximum, int]]:
    """Each left-to-right maximum paired with its excess value - index, which
    equals the height reached by its down step in the corresponding path."""
    if not avoids_312(pi):
        raise Not312Avoiding(f"'{pi}' contains 312")
    return [(m, m.value - m.index) for m in left_to_right_maxima(pi)]
