"""Arrows ``c^d_j`` and translation equivalence.

Translating an arrow moves head and tail together, so the vector
``head - tail`` never changes. A translation class is therefore a connected
component of a finite graph: nodes are the heads ``h`` in the staircase whose
tail ``h - vector`` lies in the orthant outside the staircase, edges are unit
steps. Classes are found by breadth-first search over at most ``n`` nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .monomial import ExponentVector, DimensionError, drop, render, sub
from .staircase import BasisSet


class ArrowError(ValueError):
    pass


class TailInBeta(ArrowError):
    pass


class HeadNotInBeta(ArrowError):
    pass


class NotStandardFor(ArrowError):
    pass


@dataclass(frozen=True, order=True)
class Arrow:
    tail: ExponentVector
    head: ExponentVector

    @property
    def vector(self) -> ExponentVector:
        return sub(self.head, self.tail)

    def __str__(self) -> str:
        return f"{render(self.tail)} -> {render(self.head)}"


@dataclass(frozen=True)
class ArrowClass:
    """A translation-equivalence class for a fixed staircase."""

    vector: ExponentVector
    heads: frozenset
    zero: bool
    canonical: Arrow

    @property
    def key(self) -> tuple:
        return (self.vector, self.canonical.head)

    def __contains__(self, a: Arrow) -> bool:
        return a.vector == self.vector and a.head in self.heads

    def arrows(self) -> list[Arrow]:
        return [Arrow(sub(h, self.vector), h) for h in sorted(self.heads)]


def make_arrow(beta: BasisSet, tail, head) -> Arrow:
    tail, head = tuple(tail), tuple(head)
    if len(tail) != beta.r or len(head) != beta.r:
        raise DimensionError(f"arrow endpoints must have length {beta.r}")
    if any(x < 0 for x in tail) or any(x < 0 for x in head):
        raise ArrowError("arrow endpoints must lie in the first orthant")
    if tail in beta:
        raise TailInBeta(f"tail {tail} lies in the staircase")
    if head not in beta:
        raise HeadNotInBeta(f"head {head} is not in the staircase")
    return Arrow(tail, head)


def classify_standard(a: Arrow) -> Optional[int]:
    """Index of the unique negative vector component, or None if non-standard."""
    neg = [i for i, v in enumerate(a.vector) if v < 0]
    return neg[0] if len(neg) == 1 else None


def is_standard_for(a: Arrow, i: int) -> bool:
    return classify_standard(a) == i


def offset(a: Arrow, i: int) -> ExponentVector:
    if classify_standard(a) != i:
        raise NotStandardFor(f"{a} is not x{i + 1}-standard")
    return drop(a.vector, i)


def height(a: Arrow, i: int) -> int:
    return a.tail[i]


def shadow(beta: BasisSet, a: Arrow, i: int) -> list[Arrow]:
    """Arrows sharing the tail of ``a`` whose heads run down the x_i-column of its head."""
    return [Arrow(a.tail, h) for h in beta.column(a.head, i)]


def _legal(beta: BasisSet, head, vector) -> bool:
    if head not in beta.members:
        return False
    tail = sub(head, vector)
    return all(x >= 0 for x in tail) and tail not in beta.members


def _zero_exit(beta: BasisSet, head, vector) -> bool:
    # one more decreasing step pushes the head out while the tail stays a monomial outside beta
    tail = sub(head, vector)
    for i in range(beta.r):
        if head[i] == 0 and tail[i] >= 1:
            t = tail[:i] + (tail[i] - 1,) + tail[i + 1:]
            if t not in beta.members:
                return True
    return False


def _neighbors(beta: BasisSet, head, vector):
    for i in range(beta.r):
        for delta in (-1, 1):
            if head[i] + delta < 0:
                continue
            h = head[:i] + (head[i] + delta,) + head[i + 1:]
            if _legal(beta, h, vector):
                yield h


def translation_class(beta: BasisSet, a: Arrow) -> ArrowClass:
    """The class of ``a``; memoized on ``beta`` for every head in the component."""
    vector = a.vector
    cached = beta._classes.get((vector, a.head))
    if cached is not None:
        return cached
    if not _legal(beta, a.head, vector):
        raise ArrowError(f"{a} is not an arrow for this staircase")
    seen = {a.head}
    queue = deque([a.head])
    zero = False
    while queue:
        h = queue.popleft()
        if not zero and _zero_exit(beta, h, vector):
            zero = True
        for nb in _neighbors(beta, h, vector):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    first = min(seen)
    cls = ArrowClass(vector, frozenset(seen), zero, Arrow(sub(first, vector), first))
    for h in seen:
        beta._classes[(vector, h)] = cls
    return cls


def equivalent(beta: BasisSet, a1: Arrow, a2: Arrow) -> bool:
    return a1.vector == a2.vector and a2.head in translation_class(beta, a1).heads


def is_zero(beta: BasisSet, a: Arrow) -> bool:
    return translation_class(beta, a).zero


def can_advance(beta: BasisSet, a: Arrow, i: int) -> bool:
    """An x_i-standard arrow advances if it is ~0 or translates to smaller x_i-height.

    For an x_i-standard vector the x_i-height of a position is fixed by its
    head's x_i-degree, so a lower head degree in the class means lower height.
    """
    if classify_standard(a) != i:
        raise NotStandardFor(f"{a} is not x{i + 1}-standard")
    cls = translation_class(beta, a)
    return cls.zero or any(h[i] < a.head[i] for h in cls.heads)


def advancing_path(beta: BasisSet, a: Arrow, i: int) -> list[ExponentVector]:
    """Shortest head path from ``a`` to the first position where a decreasing
    x_i-step is available at the original height.

    That position has the starting x_i-degree and its tail divided by x_i lies
    outside the staircase. Ties within a BFS layer go to the lexicographically
    smallest head.
    """
    vector = a.vector

    def target(h):
        t = sub(h, vector)
        if h[i] != a.head[i]:
            return False
        t = t[:i] + (t[i] - 1,) + t[i + 1:]
        return t[i] >= 0 and t not in beta.members

    parent = {a.head: None}
    frontier = [a.head]
    while frontier:
        hits = sorted(h for h in frontier if target(h))
        if hits:
            path = [hits[0]]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        nxt = []
        for h in sorted(frontier):
            for nb in _neighbors(beta, h, vector):
                if nb not in parent:
                    parent[nb] = h
                    nxt.append(nb)
        frontier = nxt
    raise ArrowError(f"{a} cannot be advanced in x{i + 1}")


def minimal_arrows(beta: BasisSet) -> list[Arrow]:
    """Every arrow whose tail is a minimal generator, sorted by (tail, head)."""
    return [Arrow(g, j) for g in beta.minimal_generators for j in beta.sorted_members]
