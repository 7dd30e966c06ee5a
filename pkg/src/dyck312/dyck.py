"""Dyck paths: step strings, structural queries, class membership, enumeration.

Paths are stored as their U/D words; positions are 0-based indices into the
word. All counts are exact Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

DEFAULT_CAP = 14  # exhaustive-enumeration bound; semilength 14 is ~2.7M paths


class InvalidCharacter(ValueError):
    """A character other than 'U'/'D' in a path string."""

    def __init__(self, index: int, char: str):
        super().__init__(f"invalid character {char!r} at index {index}")
        self.index = index
        self.char = char


class Unbalanced(ValueError):
    """Up and down counts differ; index points at the first unmatched up step."""

    def __init__(self, index: int):
        super().__init__(f"unbalanced word: unmatched 'U' at index {index}")
        self.index = index


class NegativePrefix(ValueError):
    """Some prefix has more downs than ups; index points at the offending 'D'."""

    def __init__(self, index: int):
        super().__init__(f"prefix dips below the axis at index {index}")
        self.index = index


class CapExceeded(ValueError):
    """Requested size is beyond the configured enumeration cap."""


class Step(Enum):
    UP = "U"
    DOWN = "D"


@dataclass(frozen=True, slots=True)
class DyckPath:
    """A Dyck path as its U/D word; the empty word is the empty path.

    The word is assumed valid (balanced, no prefix below the axis). Use
    parse_path() for untrusted text.
    """

    word: str

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(c) for c in self.word)

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    def __str__(self) -> str:
        return self.word


EMPTY_PATH = DyckPath("")


@dataclass(frozen=True, slots=True)
class Valley:
    """A DU factor: word index of its D step and the height that D reaches."""

    position: int
    height: int


def parse_path(text: str) -> DyckPath:
    """Validate a U/D string and wrap it.

    Raises InvalidCharacter, NegativePrefix or Unbalanced, each carrying the
    first offending index.
    """
    level = 0
    open_ups: list[int] = []
    for i, c in enumerate(text):
        if c == "U":
            open_ups.append(i)
            level += 1
        elif c == "D":
            level -= 1
            if level < 0:
                raise NegativePrefix(i)
            open_ups.pop()
        else:
            raise InvalidCharacter(i, c)
    if level:
        raise Unbalanced(open_ups[0])
    return DyckPath(text)


def height(p: DyckPath) -> int:
    """Maximum ordinate reached; 0 for the empty path."""
    level = top = 0
    for c in p.word:
        level += 1 if c == "U" else -1
        if level > top:
            top = level
    return top


def valleys(p: DyckPath) -> list[Valley]:
    """All DU factors, left to right."""
    out: list[Valley] = []
    level = 0
    w = p.word
    last = len(w) - 1
    for i, c in enumerate(w):
        if c == "U":
            level += 1
        else:
            level -= 1
            if i < last and w[i + 1] == "U":
                out.append(Valley(i, level))
    return out


def in_class(p: DyckPath, h: int, k: int = 2) -> bool:
    """Height at most h, and no chain of k-1 adjacent valleys at height h-1.

    Adjacent means a contiguous DUDU... factor (whose valleys necessarily sit
    at one common height). For k=2 this forbids any valley at height h-1.
    """
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    w = p.word
    last = len(w) - 1
    level = 0
    run = 0
    run_end = -1  # word index where the current valley chain would continue
    for i, c in enumerate(w):
        if c == "U":
            level += 1
            if level > h:
                return False
        else:
            level -= 1
            if level == h - 1 and i < last and w[i + 1] == "U":
                run = run + 1 if i == run_end else 1
                if run >= k - 1:
                    return False
                run_end = i + 2
    return True


def catalan(n: int) -> int:
    """n-th Catalan number, exact."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def enumerate_dyck(n: int, cap: int = DEFAULT_CAP) -> list[DyckPath]:
    """All paths of semilength n, in lexicographic word order ('D' < 'U')."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > cap:
        raise CapExceeded(f"semilength {n} exceeds cap {cap}")
    words: list[str] = []
    _fill([], 0, n, words)
    return [DyckPath(w) for w in words]


def _fill(prefix: list[str], open_: int, ups_left: int, out: list[str]) -> None:
    # trying 'D' before 'U' yields lexicographic order
    if ups_left == 0:
        out.append("".join(prefix) + "D" * open_)
        return
    if open_:
        prefix.append("D")
        _fill(prefix, open_ - 1, ups_left, out)
        prefix.pop()
    prefix.append("U")
    _fill(prefix, open_ + 1, ups_left - 1, out)
    prefix.pop()


def count_brute(n: int, h: int, k: int = 2, cap: int = DEFAULT_CAP) -> int:
    """Oracle count: filter the full enumeration through in_class."""
    return sum(1 for p in enumerate_dyck(n, cap=cap) if in_class(p, h, k))
