"""Cotangent dimension and the smoothness verdict by counting arrow classes.

Minimal arrows span the cotangent space; arrows in one class are congruent,
zero classes vanish, and distinct nonzero classes are independent. The
dimension is therefore the number of distinct nonzero classes met by minimal
arrows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrow import Arrow, ArrowClass, classify_standard, minimal_arrows, translation_class
from .staircase import BasisSet

__all__ = ["CotangentReport", "minimal_arrows", "cotangent_dimension", "is_smooth",
           "class_report", "condition_a"]


@dataclass
class CotangentReport:
    n: int
    r: int
    dim: int
    rn: int
    smooth: bool
    classes: list[ArrowClass]
    zero_count: int
    zero_standard: list[Arrow] = field(default_factory=list)
    zero_nonstandard: list[Arrow] = field(default_factory=list)
    nonzero_nonstandard: list[Arrow] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "rn": self.rn,
            "smooth": self.smooth,
            "zero_minimal_arrows": self.zero_count,
            "zero_standard_minimal_arrows": len(self.zero_standard),
            "zero_nonstandard_minimal_arrows": len(self.zero_nonstandard),
            "nonzero_nonstandard_minimal_arrows": [str(a) for a in self.nonzero_nonstandard],
            "classes": [
                {"vector": list(c.vector), "canonical": str(c.canonical), "size": len(c.heads)}
                for c in self.classes
            ],
        }


def nonzero_classes(beta: BasisSet) -> dict[tuple, ArrowClass]:
    out = {}
    for a in minimal_arrows(beta):
        cls = translation_class(beta, a)
        if not cls.zero:
            out.setdefault(cls.key, cls)
    return out


def cotangent_dimension(beta: BasisSet) -> int:
    return len(nonzero_classes(beta))


def is_smooth(beta: BasisSet) -> bool:
    return cotangent_dimension(beta) == beta.rn


def condition_a(beta: BasisSet) -> bool:
    """Every non-standard arrow is ~0 (checking minimal arrows suffices)."""
    return all(translation_class(beta, a).zero
               for a in minimal_arrows(beta) if classify_standard(a) is None)


def class_report(beta: BasisSet) -> CotangentReport:
    classes = nonzero_classes(beta)
    zero_std, zero_nonstd, live_nonstd = [], [], []
    for a in minimal_arrows(beta):
        zero = translation_class(beta, a).zero
        standard = classify_standard(a) is not None
        if zero:
            (zero_std if standard else zero_nonstd).append(a)
        elif not standard:
            live_nonstd.append(a)
    dim = len(classes)
    return CotangentReport(
        n=beta.n, r=beta.r, dim=dim, rn=beta.rn, smooth=dim == beta.rn,
        classes=[classes[k] for k in sorted(classes)],
        zero_count=len(zero_std) + len(zero_nonstd),
        zero_standard=zero_std, zero_nonstandard=zero_nonstd,
        nonzero_nonstandard=live_nonstd,
    )
