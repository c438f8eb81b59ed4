"""Structural recognizers and singularity witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .arrow import Arrow, classify_standard, translation_class
from .bunch import InternalInvariantViolation
from .cotangent import class_report, condition_a
from .monomial import ExponentVector
from .staircase import BasisSet, add_box, box, truncate


class WrongArity(ValueError):
    pass


@dataclass(frozen=True)
class Decomposition:
    """A base box followed by box additions ``(j, h, widths)``, innermost first."""

    base: tuple[int, ...]
    steps: tuple[tuple[int, int, tuple[int, ...]], ...] = ()

    def replay(self) -> BasisSet:
        beta = box(self.base)
        for j, h, widths in self.steps:
            beta = add_box(beta, j, h, widths)
        return beta

    def to_dict(self) -> dict:
        return {"base": list(self.base),
                "steps": [{"j": j + 1, "h": h, "widths": list(w)} for j, h, w in self.steps]}


@dataclass
class StructureReport:
    smooth: bool
    dim: int
    rigid_nonstandard_witnesses: list[Arrow]
    is_box: bool
    is_compound_box: bool
    decomposition: Optional[Decomposition]
    g_pairs: Optional[dict[tuple[int, int], list[ExponentVector]]] = field(default=None)


def rigid_nonstandard_witnesses(beta: BasisSet) -> list[Arrow]:
    """Non-standard arrows from a minimal generator to a maximal monomial.

    Such an arrow cannot be translated at all, so its class is a nonzero
    singleton and its presence rules out smoothness.
    """
    return [Arrow(g, m) for g in beta.minimal_generators for m in beta.maximal_monomials
            if classify_standard(Arrow(g, m)) is None]


def g_pairs(beta: BasisSet) -> dict[tuple[int, int], list[ExponentVector]]:
    """Minimal generators supported on each pair of variables (three variables only)."""
    if beta.r != 3:
        raise WrongArity(f"generator pairs need r=3, got r={beta.r}")
    out = {}
    for i, j in ((0, 1), (0, 2), (1, 2)):
        out[(i, j)] = [g for g in beta.minimal_generators
                       if all(g[k] == 0 for k in range(3) if k not in (i, j))]
    return out


def _slab_box(beta: BasisSet, j: int, h: int) -> Optional[tuple[int, ...]]:
    slab = [m for m in beta.members if m[j] < h]
    widths = tuple(h if k == j else 1 + max(m[k] for m in slab) for k in range(beta.r))
    size = 1
    for w in widths:
        size *= w
    return widths if size == len(slab) else None


def _peel(beta: BasisSet, memo: dict) -> Optional[Decomposition]:
    if beta in memo:
        return memo[beta]
    memo[beta] = None
    if beta.is_box():
        memo[beta] = Decomposition(beta.widths)
        return memo[beta]
    for j in range(beta.r):
        for h in range(beta.widths[j] - 1, 0, -1):
            widths = _slab_box(beta, j, h)
            if widths is None:
                continue
            inner = truncate(beta, j, h)
            if any(widths[k] < inner.widths[k] for k in range(beta.r) if k != j):
                continue
            sub = _peel(inner, memo)
            if sub is not None:
                memo[beta] = Decomposition(sub.base, sub.steps + ((j, h, widths),))
                return memo[beta]
    return None


def is_compound_box(beta: BasisSet) -> tuple[bool, Optional[Decomposition]]:
    """Decide whether ``beta`` arises from a box by repeated box additions.

    Peeling the slab below height ``h`` in direction ``j`` undoes a box
    addition exactly when that slab is a box at least as wide as what stays
    above it; the slab then fixes the added widths. Every direction and height
    is tried, so the search is exact.
    """
    dec = _peel(beta, {})
    return dec is not None, dec


def replay_decomposition(dec: Decomposition) -> BasisSet:
    return dec.replay()


def classify(beta: BasisSet) -> StructureReport:
    report = class_report(beta)
    compound, dec = is_compound_box(beta)
    witnesses = rigid_nonstandard_witnesses(beta)
    for a in witnesses:
        cls = translation_class(beta, a)
        if cls.zero or len(cls.heads) != 1:
            raise InternalInvariantViolation(f"witness {a} is not rigid")
    if witnesses and report.smooth:
        raise InternalInvariantViolation("smooth staircase with a rigid non-standard arrow")
    if dec is not None and dec.replay() != beta:
        raise InternalInvariantViolation("decomposition does not replay")
    gp = None
    if beta.r == 3:
        gp = g_pairs(beta)
        if report.smooth != compound:
            raise InternalInvariantViolation(
                f"three-variable smoothness {report.smooth} but compound box {compound}")
        if report.smooth != condition_a(beta):
            raise InternalInvariantViolation("smoothness disagrees with non-standard arrows vanishing")
    if beta.r <= 2 and not (compound and report.smooth):
        raise InternalInvariantViolation("two-variable staircase not smooth compound box")
    return StructureReport(report.smooth, report.dim, witnesses, beta.is_box(),
                           compound, dec, gp)
