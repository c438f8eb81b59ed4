"""Basis sets (finite division-closed monomial sets) and their constructors."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .monomial import ExponentVector, DimensionError, divides, render, unit


class StaircaseError(ValueError):
    pass


class EmptyInput(StaircaseError):
    pass


class NotDivisionClosed(StaircaseError):
    """Raised with a witness: ``member`` is present but ``missing`` is not."""

    def __init__(self, member: ExponentVector, missing: ExponentVector):
        super().__init__(f"{member} is present but its divisor {missing} is not")
        self.member = member
        self.missing = missing


class InfiniteColength(StaircaseError):
    pass


class NotAntichain(StaircaseError):
    pass


class NothingAtHeight(StaircaseError):
    pass


class WidthTooSmall(StaircaseError):
    pass


class StaircaseFormatError(StaircaseError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class BasisSet:
    """A finite division-closed set of exponent vectors in ``r`` variables.

    Immutable after construction. Widths, minimal generators and maximal
    monomials are computed eagerly since every analysis needs them.
    """

    __slots__ = ("r", "members", "n", "sorted_members", "widths",
                 "minimal_generators", "maximal_monomials", "_classes", "_hash")

    def __init__(self, members: Iterable[Sequence[int]], r: int, *, validate: bool = True):
        if r < 1:
            raise ValueError("r must be positive")
        ms = frozenset(tuple(m) for m in members)
        if not ms:
            raise EmptyInput("a basis set must be nonempty")
        if validate:
            for m in ms:
                if len(m) != r:
                    raise DimensionError(f"{m} has length {len(m)}, expected {r}")
                if any(x < 0 for x in m):
                    raise StaircaseError(f"negative exponent in {m}")
            for m in sorted(ms):
                for i in range(r):
                    if m[i] > 0:
                        prev = m[:i] + (m[i] - 1,) + m[i + 1:]
                        if prev not in ms:
                            raise NotDivisionClosed(m, prev)
        self.r = r
        self.members = ms
        self.n = len(ms)
        self.sorted_members: tuple[ExponentVector, ...] = tuple(sorted(ms))
        self.widths: ExponentVector = tuple(
            1 + max(m[i] for m in ms if all(m[k] == 0 for k in range(r) if k != i))
            for i in range(r))
        self.minimal_generators = self._minimal_generators()
        self.maximal_monomials = tuple(
            m for m in self.sorted_members
            if all(m[:i] + (m[i] + 1,) + m[i + 1:] not in ms for i in range(r)))
        self._classes: dict = {}
        self._hash = hash((r, ms))

    def _minimal_generators(self) -> tuple[ExponentVector, ...]:
        # Every generator is x_i * m for some member m (or a pure power).
        cands = set()
        for m in self.members:
            for i in range(self.r):
                c = m[:i] + (m[i] + 1,) + m[i + 1:]
                if c not in self.members:
                    cands.add(c)
        gens = [c for c in cands
                if all(c[i] == 0 or c[:i] + (c[i] - 1,) + c[i + 1:] in self.members
                       for i in range(self.r))]
        return tuple(sorted(gens))

    def __contains__(self, m) -> bool:
        return tuple(m) in self.members

    def __iter__(self) -> Iterator[ExponentVector]:
        return iter(self.sorted_members)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasisSet):
            return NotImplemented
        return self.r == other.r and self.members == other.members

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"BasisSet(r={self.r}, n={self.n}, members={list(self.sorted_members)})"

    @property
    def rn(self) -> int:
        return self.r * self.n

    def corner(self, i: int) -> ExponentVector:
        """The i-th corner monomial ``x_i^{w_i}``."""
        return unit(self.r, i, self.widths[i])

    def column(self, head: ExponentVector, i: int) -> list[ExponentVector]:
        """The x_i-column of a member: head, head/x_i, ..., down to x_i-degree 0."""
        return [head[:i] + (q,) + head[i + 1:] for q in range(head[i], -1, -1)]

    def is_box(self) -> bool:
        total = 1
        for w in self.widths:
            total *= w
        return total == self.n

    def to_text(self) -> str:
        return dump(self)


def from_monomials(members: Iterable[Sequence[int]], r: int) -> BasisSet:
    return BasisSet(members, r)


def from_minimal_generators(gens: Iterable[Sequence[int]], r: int) -> BasisSet:
    """The staircase of monomials divisible by none of ``gens``."""
    gs = sorted({tuple(g) for g in gens})
    if not gs:
        raise EmptyInput("no generators")
    for g in gs:
        if len(g) != r:
            raise DimensionError(f"{g} has length {len(g)}, expected {r}")
    for a, b in itertools.permutations(gs, 2):
        if divides(a, b):
            raise NotAntichain(f"{a} divides {b}")
    bounds = []
    for i in range(r):
        pure = [g[i] for g in gs if all(g[k] == 0 for k in range(r) if k != i) and g[i] > 0]
        if not pure:
            raise InfiniteColength(f"no pure power of x{i + 1} among the generators")
        bounds.append(min(pure))
    members = [m for m in itertools.product(*(range(b) for b in bounds))
               if not any(divides(g, m) for g in gs)]
    return BasisSet(members, r, validate=False)


def box(widths: Sequence[int]) -> BasisSet:
    if not widths or any(w < 1 for w in widths):
        raise ValueError(f"box widths must be positive: {tuple(widths)}")
    return BasisSet(itertools.product(*(range(w) for w in widths)), len(widths), validate=False)


def thicken(beta0: BasisSet, w: int) -> BasisSet:
    """Extend to one more variable, stacking ``w`` copies along the new axis."""
    if w < 1:
        raise ValueError("thickening width must be positive")
    return BasisSet((m + (s,) for m in beta0.members for s in range(w)), beta0.r + 1,
                    validate=False)


def _check_var(beta: BasisSet, j: int) -> None:
    if not 0 <= j < beta.r:
        raise ValueError(f"variable x{j + 1} does not exist when r={beta.r}")


def truncate(beta: BasisSet, j: int, h: int) -> BasisSet:
    """``{m : m + h*e_j in beta}``."""
    _check_var(beta, j)
    if h < 1:
        raise ValueError("truncation height must be positive")
    kept = [m[:j] + (m[j] - h,) + m[j + 1:] for m in beta.members if m[j] >= h]
    if not kept:
        raise NothingAtHeight(f"no member has x{j + 1}-degree >= {h}")
    return BasisSet(kept, beta.r, validate=False)


def add_box(beta: BasisSet, j: int, h: int, widths: Sequence[int]) -> BasisSet:
    """Shift ``beta`` by ``h`` along x_j and fill the gap with ``box(widths)``.

    ``widths[j]`` must equal ``h``; every other entry must be at least the
    corresponding width of ``beta``.
    """
    widths = tuple(widths)
    if len(widths) != beta.r:
        raise DimensionError(f"expected {beta.r} widths, got {len(widths)}")
    _check_var(beta, j)
    if h < 1:
        raise ValueError("box height must be positive")
    if widths[j] != h:
        raise ValueError(f"widths[{j}] must equal h={h}, got {widths[j]}")
    for k in range(beta.r):
        if k != j and widths[k] < beta.widths[k]:
            raise WidthTooSmall(
                f"x{k + 1}-width {widths[k]} is below the staircase width {beta.widths[k]}")
    shifted = {m[:j] + (m[j] + h,) + m[j + 1:] for m in beta.members}
    return BasisSet(shifted | box(widths).members, beta.r, validate=False)


def two_box_union(widths1: Sequence[int], widths2: Sequence[int]) -> BasisSet:
    if len(widths1) != len(widths2):
        raise DimensionError("boxes live in different numbers of variables")
    return BasisSet(box(widths1).members | box(widths2).members, len(widths1), validate=False)


def hypothesis81(beta: BasisSet, j: int, h: int) -> bool:
    """Degree condition under which a truncation of a smooth staircase stays smooth.

    Every minimal generator of x_j-degree below ``h`` must, in each other
    variable it involves, reach at least the width of the truncation.
    """
    wt = truncate(beta, j, h).widths
    for m in beta.minimal_generators:
        if m[j] >= h:
            continue
        for k in range(beta.r):
            if k != j and m[k] > 0 and m[k] < wt[k]:
                return False
    return True


# -- enumeration ---------------------------------------------------------------

def _ideals(r: int, n: int, bound: frozenset | None) -> Iterator[tuple]:
    """Order ideals of size ``n`` in ``r`` variables contained in ``bound``.

    An ideal in r variables is a weakly decreasing chain of (r-1)-variable
    ideals, one per x_r-layer. Yields sorted tuples of exponent vectors.
    """
    if n == 0:
        yield ()
        return
    if r == 1:
        cand = tuple((k,) for k in range(n))
        if bound is None or all(c in bound for c in cand):
            yield cand
        return
    yield from _layers(r, n, bound, None, 0)


def _layers(r, n, bound, prev, s):
    if n == 0:
        yield ()
        return
    if bound is None:
        layer_bound = prev
    else:
        here = frozenset(m[:-1] for m in bound if m[-1] == s)
        layer_bound = here if prev is None else here & prev
    cap = n if layer_bound is None else min(n, len(layer_bound))
    for k in range(cap, 0, -1):
        for layer in _ideals(r - 1, k, layer_bound):
            layer_set = frozenset(layer)
            for rest in _layers(r, n - k, bound, layer_set, s + 1):
                yield tuple(m + (s,) for m in layer) + rest


def enumerate_basis_sets(r: int, n: int) -> Iterator[BasisSet]:
    """Every basis set of size ``n`` in ``r`` variables, once each, deterministically."""
    if r < 1 or n < 1:
        raise ValueError("r and n must be positive")
    for members in _ideals(r, n, None):
        yield BasisSet(members, r, validate=False)


# -- file format ---------------------------------------------------------------

HEADER = "staircase v1"


def dump(beta: BasisSet) -> str:
    lines = [HEADER, f"r={beta.r} n={beta.n}"]
    lines.extend(render(m) for m in beta.sorted_members)
    return "\n".join(lines) + "\n"


def loads(text: str) -> BasisSet:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise StaircaseFormatError(1, f"expected header {HEADER!r}")
    if len(lines) < 2:
        raise StaircaseFormatError(2, "missing 'r=<int> n=<int>' line")
    try:
        fields = dict(f.split("=", 1) for f in lines[1].split())
        r, n = int(fields["r"]), int(fields["n"])
    except (ValueError, KeyError):
        raise StaircaseFormatError(2, f"malformed size line {lines[1]!r}") from None
    if r < 1 or n < 1:
        raise StaircaseFormatError(2, "r and n must be positive")
    members: list[ExponentVector] = []
    seen: set[ExponentVector] = set()
    body = lines[2:]
    while body and not body[-1].strip():
        body.pop()
    for offset, line in enumerate(body):
        lineno = offset + 3
        try:
            vec = tuple(int(x) for x in line.split())
        except ValueError:
            raise StaircaseFormatError(lineno, f"not an exponent vector: {line!r}") from None
        if len(vec) != r:
            raise StaircaseFormatError(lineno, f"expected {r} exponents, got {len(vec)}")
        if any(x < 0 for x in vec):
            raise StaircaseFormatError(lineno, "negative exponent")
        if vec in seen:
            raise StaircaseFormatError(lineno, f"duplicate member {vec}")
        if members and vec < members[-1]:
            raise StaircaseFormatError(lineno, "members are not sorted lexicographically")
        for i in range(r):
            if vec[i] > 0 and vec[:i] + (vec[i] - 1,) + vec[i + 1:] not in seen:
                # lex order lists every divisor earlier, so a gap is detectable here
                raise StaircaseFormatError(
                    lineno, f"not division-closed: divisor of {vec} missing")
        seen.add(vec)
        members.append(vec)
    if not members:
        raise StaircaseFormatError(3, "no members")
    if len(members) != n:
        raise StaircaseFormatError(2, f"declared n={n} but {len(members)} members listed")
    return BasisSet(members, r, validate=False)


def load(path) -> BasisSet:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def save(beta: BasisSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump(beta))
