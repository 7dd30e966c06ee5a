"""Permutations in one-line notation: 312-avoidance, left-to-right maxima,
and the two restricted classes mirroring the bounded valley-avoiding paths.

Indices and values are 1-based throughout this module, so the excess of a
left-to-right maximum is literally value - index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class NotAPermutation(ValueError):
    """Input is not a rearrangement of 1..n; carries the offending value."""

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


@dataclass(frozen=True, slots=True)
class Permutation:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        seen = [False] * (n + 1)
        for v in entries:
            if not 1 <= v <= n:
                raise NotAPermutation(f"value {v} out of range 1..{n}", v)
            if seen[v]:
                raise NotAPermutation(f"duplicate value {v}", v)
            seen[v] = True

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))


EMPTY_PERM = Permutation(())


@dataclass(frozen=True, slots=True)
class LrMaximum:
    """A left-to-right maximum: 1-based position and the entry there."""

    index: int
    value: int


_SEP = re.compile(r"[\s,]+")


def parse_perm(text: str) -> Permutation:
    """Parse space- or comma-separated integers; blank input is the empty
    permutation."""
    values: list[int] = []
    for token in _SEP.split(text.strip()):
        if not token:
            continue
        try:
            values.append(int(token))
        except ValueError:
            raise NotAPermutation(f"not an integer: {token!r}", token) from None
    return Permutation(tuple(values))


def _avoids_312_seq(entries) -> bool:
    # Right-to-left scan. `mid` is a value known to have a smaller entry
    # somewhere to its left; any larger value still further left completes
    # big-small-mid, i.e. an occurrence of 312.
    mid = 0
    stack: list[int] = []
    for v in reversed(entries):
        if mid and v > mid:
            return False
        while stack and stack[-1] > v:
            mid = stack.pop()
        stack.append(v)
    return True


def avoids_312(pi: Permutation) -> bool:
    """True iff no indices a<b<c have entries[a] > entries[c] > entries[b].

    Single-pass stack scan; avoids_312_cubic is the literal cubic definition
    kept as the cross-validation oracle.
    """
    return _avoids_312_seq(pi.entries)


def avoids_312_cubic(pi: Permutation) -> bool:
    """Literal definition, cubic time; reference oracle for small lengths."""
    e = pi.entries
    n = len(e)
    for a in range(n):
        for b in range(a + 1, n):
            if e[b] >= e[a]:
                continue
            for c in range(b + 1, n):
                if e[b] < e[c] < e[a]:
                    return False
    return True


def left_to_right_maxima(pi: Permutation) -> list[LrMaximum]:
    """All entries greater than everything before them, in position order."""
    out: list[LrMaximum] = []
    best = 0
    for i, v in enumerate(pi.entries, start=1):
        if v > best:
            out.append(LrMaximum(i, v))
            best = v
    return out


def in_height_class(pi: Permutation, h: int) -> bool:
    """312-avoiding with every left-to-right maximum of excess at most h-1.

    This is the image of the height-bounded paths under the down-step
    labelling bijection.
    """
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    if not avoids_312(pi):
        return False
    return all(m.value - m.index <= h - 1 for m in left_to_right_maxima(pi))


def in_class(pi: Permutation, h: int) -> bool:
    """in_height_class, minus permutations with a maximum of excess exactly
    h-1 immediately followed by the entry one larger.

    Such a pair is a second maximum of excess h-1 at the adjacent position
    and is exactly the image of a valley at height h-1. Adjacency matters:
    in 2 1 3 at h=2 the maxima 2 and 3 differ by one but sit apart, and the
    corresponding path UUDDUD has no valley at height 1.
    """
    if not in_height_class(pi, h):
        return False
    maxima = left_to_right_maxima(pi)
    for m, nxt in zip(maxima, maxima[1:]):
        if (
            m.value - m.index == h - 1
            and nxt.index == m.index + 1
            and nxt.value == m.value + 1
        ):
            return False
    return True
