"""Standard bunches: ``r*n`` minimal standard arrows built by shadow promotion.

For each variable x_i, start from the arrows with tail the corner monomial
``x_i^{w_i}``, grouped by offset. Within an offset group, repeatedly take the
advanceable arrow of largest head x_i-degree and replace its whole x_i-shadow
by the shadow of a minimal arrow of smaller x_i-height (the promotion image).
Heights strictly decrease, so this stops; what remains cannot be advanced.

The promotion image depends on the advancing path. Here paths are shortest
(BFS) with lexicographic tie-breaks and the minimal generator dividing the
landing tail is the lexicographically smallest one, so bunches are
reproducible.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .arrow import (Arrow, advancing_path, can_advance, classify_standard, offset,
                    shadow, translation_class)
from .monomial import ExponentVector, divides, drop, sub
from .staircase import BasisSet


class NotAdvanceable(ValueError):
    pass


class InternalInvariantViolation(AssertionError):
    pass


@dataclass
class StandardBunch:
    r: int
    n: int
    per_variable: dict[int, frozenset]

    def arrows(self) -> list[Arrow]:
        return sorted(a for s in self.per_variable.values() for a in s)

    def __len__(self) -> int:
        return sum(len(s) for s in self.per_variable.values())

    def render(self) -> str:
        lines = []
        for i in sorted(self.per_variable):
            lines.append(f"x{i + 1}:")
            groups = defaultdict(list)
            for a in self.per_variable[i]:
                groups[offset(a, i)].append(a)
            for v in sorted(groups):
                arrows = sorted(groups[v], key=lambda a: a.head[i])
                lines.append(f"  offset {v}: " + ", ".join(str(a) for a in arrows))
        return "\n".join(lines)


@dataclass
class BunchCheck:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def corner_fan(beta: BasisSet, i: int) -> dict[ExponentVector, list[Arrow]]:
    """Arrows with tail ``x_i^{w_i}`` grouped by offset, heads in increasing x_i-degree."""
    corner = beta.corner(i)
    fan: dict[ExponentVector, list[Arrow]] = defaultdict(list)
    for j in beta.sorted_members:
        fan[drop(j, i)].append(Arrow(corner, j))
    return {v: sorted(arrows, key=lambda a: a.head[i]) for v, arrows in sorted(fan.items())}


def promote_shadow(beta: BasisSet, arrows, i: int) -> frozenset:
    """Replace an advanceable x_i-shadow by its promotion image."""
    arrows = sorted(arrows, key=lambda a: a.head[i])
    if not arrows:
        raise ValueError("empty shadow")
    top = arrows[-1]
    if classify_standard(top) != i:
        raise NotAdvanceable(f"{top} is not x{i + 1}-standard")
    if set(arrows) != set(shadow(beta, top, i)):
        raise ValueError(f"arrows do not form the x{i + 1}-shadow of {top}")
    if not can_advance(beta, top, i):
        raise NotAdvanceable(f"{top} cannot be advanced in x{i + 1}")
    vector = top.vector
    landing = advancing_path(beta, top, i)[-1]
    d1 = sub(landing, vector)
    below = d1[:i] + (d1[i] - 1,) + d1[i + 1:]
    b = next(g for g in beta.minimal_generators if divides(g, below))
    # slide down in the other variables until the tail agrees with b off x_i
    d2 = b[:i] + (d1[i],) + b[i + 1:]
    j2 = tuple(x + y for x, y in zip(d2, vector))
    image = frozenset(Arrow(b, j2[:i] + (a.head[i],) + j2[i + 1:]) for a in arrows)
    if len(image) != len(arrows) or b[i] >= top.tail[i]:
        raise InternalInvariantViolation(f"bad promotion of {top}")
    return image


def build_sub_bunch(beta: BasisSet, i: int) -> frozenset:
    result = set()
    for v, fan in corner_fan(beta, i).items():
        current = set(fan)
        while True:
            movable = [a for a in current if can_advance(beta, a, i)]
            if not movable:
                break
            top = max(movable, key=lambda a: a.head[i])
            sh = set(shadow(beta, top, i))
            if not sh <= current:
                raise InternalInvariantViolation(f"shadow of {top} escapes the offset group")
            current = (current - sh) | promote_shadow(beta, sh, i)
            if len(current) != len(fan):
                raise InternalInvariantViolation(f"offset group {v} changed size")
        result |= current
    if len(result) != beta.n:
        raise InternalInvariantViolation(f"x{i + 1}-sub-bunch has {len(result)} arrows")
    return frozenset(result)


def build_bunch(beta: BasisSet) -> StandardBunch:
    return StandardBunch(beta.r, beta.n,
                         {i: build_sub_bunch(beta, i) for i in range(beta.r)})


def verify_bunch(beta: BasisSet, bunch: StandardBunch) -> BunchCheck:
    """Recheck every defining property of a standard bunch from scratch."""
    check = BunchCheck()
    bad = check.violations.append
    gens = set(beta.minimal_generators)
    keys = {}
    for i in range(beta.r):
        sub_bunch = bunch.per_variable.get(i, frozenset())
        if len(sub_bunch) != beta.n:
            bad(f"x{i + 1}: {len(sub_bunch)} arrows, expected {beta.n}")
        slots = set()
        for a in sorted(sub_bunch):
            if a.tail not in gens or a.head not in beta:
                bad(f"{a}: not a minimal arrow")
                continue
            if classify_standard(a) != i:
                bad(f"{a}: not x{i + 1}-standard")
                continue
            cls = translation_class(beta, a)
            if cls.zero:
                bad(f"{a}: zero class")
            if can_advance(beta, a, i):
                bad(f"{a}: can be advanced")
            if cls.key in keys:
                bad(f"{a}: equivalent to {keys[cls.key]}")
            keys[cls.key] = a
            slot = (a.head[i], offset(a, i))
            if slot in slots:
                bad(f"{a}: duplicate (head degree, offset) {slot}")
            slots.add(slot)
        expected = {(j[i], drop(j, i)) for j in beta.members}
        if slots != expected and len(sub_bunch) == beta.n:
            bad(f"x{i + 1}: (head degree, offset) pairs differ from the corner fan")
    return check
