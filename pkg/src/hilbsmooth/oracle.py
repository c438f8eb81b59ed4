"""Independent checks by exact linear algebra.

The tangent space at a monomial ideal ``I`` is ``Hom(I, S/I)``. A homomorphism
is fixed by sending each minimal generator ``m_a`` to a combination of basis
monomials; it is well defined iff every pairwise syzygy
``(L/m_a) m_a - (L/m_b) m_b`` (with ``L = lcm``) maps to zero in ``S/I``.
Pairwise syzygies generate all syzygies of a monomial ideal, so these
constraints are complete. Each constraint row holds at most two entries, both
``+1`` or ``-1``, and the rank is found by fraction-free integer elimination.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .cotangent import cotangent_dimension
from .monomial import ExponentVector, add, lcm, sub
from .staircase import BasisSet


class NonInjectiveSequence(ValueError):
    pass


class ZeroParameter(ValueError):
    pass


@dataclass
class HomSystem:
    unknowns: list[tuple[ExponentVector, ExponentVector]]
    rows: list[dict[int, int]]
    row_labels: list[tuple]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.unknowns)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def dump(self) -> str:
        """Sparse triplets: a header, ``rows= cols= nnz=``, then 0-based ``row col value``."""
        m, c = self.shape
        lines = ["# hom-system triplets v1", f"rows={m} cols={c} nnz={self.nnz()}"]
        for ri, row in enumerate(self.rows):
            lines.extend(f"{ri} {ci} {v}" for ci, v in sorted(row.items()))
        return "\n".join(lines) + "\n"


def hom_system(beta: BasisSet) -> HomSystem:
    gens = beta.minimal_generators
    basis = beta.sorted_members
    index = {(g, j): k for k, (g, j) in enumerate(itertools.product(gens, basis))}
    rows, labels, seen = [], [], set()
    for a, b in itertools.combinations(gens, 2):
        L = lcm(a, b)
        ua, ub = sub(L, a), sub(L, b)
        by_target: dict[ExponentVector, dict[int, int]] = {}
        for j in basis:
            mu = add(ua, j)
            if mu in beta.members:
                by_target.setdefault(mu, {})[index[(a, j)]] = 1
            mu = add(ub, j)
            if mu in beta.members:
                by_target.setdefault(mu, {})[index[(b, j)]] = -1
        for mu in sorted(by_target):
            row = by_target[mu]
            key = tuple(sorted(row.items()))
            if key in seen:
                continue
            seen.add(key)
            rows.append(row)
            labels.append((a, b, mu))
    return HomSystem(list(index), rows, labels)


def exact_rank(rows: Sequence[dict[int, int]]) -> int:
    """Rank of a sparse integer matrix given as ``{column: value}`` rows."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                g = 0
                for v in row.values():
                    g = math.gcd(g, v)
                pivots[col] = {c: v // g for c, v in row.items()}
                break
            p, q = piv[col], row[col]
            merged = {c: p * v for c, v in row.items()}
            for c, v in piv.items():
                merged[c] = merged.get(c, 0) - q * v
            row = {c: v for c, v in merged.items() if v}
    return len(pivots)


def tangent_dimension(beta: BasisSet) -> int:
    system = hom_system(beta)
    return len(system.unknowns) - exact_rank(system.rows)


class CrossCheck(NamedTuple):
    agree: bool
    tangent: int
    cotangent: int


def cross_check(beta: BasisSet) -> CrossCheck:
    t, c = tangent_dimension(beta), cotangent_dimension(beta)
    return CrossCheck(t == c, t, c)


def distraction_points(beta: BasisSet, a: Sequence, w1=1) -> list[tuple[Fraction, ...]]:
    """The reduced configuration ``{(w1*a[e_1], ..., w1*a[e_r]) : e in beta}``."""
    w1 = Fraction(w1)
    if w1 == 0:
        raise ZeroParameter("w1 must be nonzero")
    seq = [Fraction(x) for x in a]
    if len(set(seq)) != len(seq):
        raise NonInjectiveSequence("the sequence a has repeated entries")
    need = 1 + max(max(m) for m in beta.members)
    if len(seq) < need:
        raise ValueError(f"the sequence needs at least {need} entries")
    return [tuple(w1 * seq[e] for e in m) for m in beta.sorted_members]
