"""Generating-tree machinery: the peak-insertion growth operator on paths,
the matching prepend-and-rescale step on permutations, succession rules, and
pure label-level counting.

A label is a plain positive int. Rules are finite maps from a label to the
ordered tuple of its children's labels; a label (k) always has k children.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Union

from . import dyck, perm
from .dyck import CapExceeded, DyckPath
from .perm import Permutation

Label = int

DEFAULT_TREE_CAP = 12


class NotInClass(ValueError):
    """Operand is outside the class the growth operator is defined on."""


@dataclass(frozen=True)
class SuccessionRule:
    axiom: Label
    productions: dict[Label, tuple[Label, ...]]

    def __post_init__(self):
        for label, prod in self.productions.items():
            if len(prod) != label:
                raise ValueError(
                    f"label ({label}) must produce {label} children, got {len(prod)}"
                )


@dataclass(frozen=True, slots=True)
class TreeNode:
    """A generating-tree node: the object, its label, and its level (= size)."""

    obj: Union[DyckPath, Permutation]
    label: Label
    level: int


def _require_h(h: int) -> None:
    if h < 3:
        raise ValueError(f"the growth operator needs h >= 3, got {h}")


def _require_member(p: DyckPath, h: int) -> None:
    if not dyck.in_class(p, h, 2):
        raise NotInClass(f"path {p.word!r} is not in the height-{h} class")


def _initial_ups(word: str) -> int:
    t = 0
    for c in word:
        if c != "U":
            break
        t += 1
    return t


def children(p: DyckPath, h: int) -> list[DyckPath]:
    """Insert a UD peak at each active site, in site order.

    A path starting with t ups has sites before each of those ups plus one
    right after the run (t+1 sites) when t < h, and only the sites before the
    first h-1 ups when t = h. The empty path grows into UD.
    """
    _require_h(h)
    _require_member(p, h)
    w = p.word
    if not w:
        return [DyckPath("UD")]
    t = _initial_ups(w)
    sites = t + 1 if t < h else h - 1
    return [DyckPath(w[:i] + "UD" + w[i:]) for i in range(sites)]


def label_of(p: DyckPath, h: int) -> Label:
    """Tree label: 1 for the empty path, t+1 for t <= h-1 initial ups, h-1
    when the initial run has length exactly h."""
    _require_h(h)
    _require_member(p, h)
    if not p.word:
        return 1
    t = _initial_ups(p.word)
    return h - 1 if t == h else t + 1


def succession_rule(h: int) -> SuccessionRule:
    """The rule the growth operator induces for a height bound h >= 3.

    Axiom (1); (1) -> (2); (k) -> (2)(3)...(k)(k+1) for 2 <= k < h; and
    (h) -> (2)(3)...(h-1)(h-1)(h).
    """
    _require_h(h)
    productions: dict[Label, tuple[Label, ...]] = {1: (2,)}
    for k in range(2, h):
        productions[k] = tuple(range(2, k + 1)) + (k + 1,)
    productions[h] = tuple(range(2, h)) + (h - 1, h)
    return SuccessionRule(axiom=1, productions=productions)


def height_two_rule() -> SuccessionRule:
    """The h = 2 rule: axiom (1); (1) -> (2); (2) -> (1)(2). Its level sizes
    are the Fibonacci numbers."""
    return SuccessionRule(axiom=1, productions={1: (2,), 2: (1, 2)})


def symbolic_counts(rule: SuccessionRule, n: int) -> tuple[int, dict[Label, int]]:
    """Size and label multiset of level n of the pure generating tree."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    counts: Counter[Label] = Counter({rule.axiom: 1})
    for _ in range(n):
        nxt: Counter[Label] = Counter()
        for label, c in counts.items():
            for child in rule.productions[label]:
                nxt[child] += c
        counts = nxt
    return sum(counts.values()), dict(counts)


def iter_levels(h: int, n_max: int, cap: int = DEFAULT_TREE_CAP) -> Iterator[list[TreeNode]]:
    """Yield levels 0..n_max of the path generating tree, breadth-first.

    Children appear in parent order then site order, so output is
    reproducible. Parents are class members by construction, so the per-node
    membership check of children() is skipped here.
    """
    _require_h(h)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if n_max > cap:
        raise CapExceeded(f"level {n_max} exceeds tree cap {cap}")
    level = [TreeNode(dyck.EMPTY_PATH, 1, 0)]
    yield level
    for depth in range(1, n_max + 1):
        nxt: list[TreeNode] = []
        for node in level:
            w = node.obj.word
            if not w:
                nxt.append(TreeNode(DyckPath("UD"), 2, depth))
                continue
            t = _initial_ups(w)
            sites = t + 1 if t < h else h - 1
            for i in range(sites):
                run = i + 1  # initial up-run length of the child
                label = h - 1 if run == h else run + 1
                nxt.append(TreeNode(DyckPath(w[:i] + "UD" + w[i:]), label, depth))
        yield nxt
        level = nxt


def generate_level(h: int, n: int, cap: int = DEFAULT_TREE_CAP) -> list[TreeNode]:
    """Level n of the path generating tree: all class members of semilength n
    with their labels, in tree order."""
    result: list[TreeNode] = []
    for result in iter_levels(h, n, cap=cap):
        pass
    return result


def perm_children(pi: Permutation, h: int) -> list[Permutation]:
    """Prepend each allowed value and rescale, in ascending order of the new
    first entry.

    A permutation starting with f < h grows by prepending 1..f+1; one starting
    with f = h by prepending 1..h-1. Entries >= the prepended value shift up
    by one. The empty permutation grows into the singleton."""
    _require_h(h)
    if not perm.in_class(pi, h):
        raise NotInClass(f"permutation '{pi}' is not in the height-{h} class")
    e = pi.entries
    if not e:
        return [Permutation((1,))]
    first = e[0]
    top = first + 1 if first < h else h - 1
    out: list[Permutation] = []
    for ell in range(1, top + 1):
        rescaled = tuple(v + 1 if v >= ell else v for v in e)
        out.append(Permutation((ell,) + rescaled))
    return out


def perm_label(pi: Permutation, h: int) -> Label:
    """Tree label of a permutation: 1 when empty, first entry + 1, except h-1
    when the first entry is h. Agrees with label_of across the bijection."""
    _require_h(h)
    if not perm.in_class(pi, h):
        raise NotInClass(f"permutation '{pi}' is not in the height-{h} class")
    if not pi.entries:
        return 1
    first = pi.entries[0]
    return h - 1 if first == h else first + 1
