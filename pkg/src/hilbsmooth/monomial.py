"""Exponent-vector arithmetic.

A monomial ``x1^d1 ... xr^dr`` is identified with the tuple ``(d1, ..., dr)``.
Variable indices in the Python API are 0-based; rendered output uses
``x1 .. xr``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

ExponentVector = tuple[int, ...]


class DimensionError(ValueError):
    """Two exponent vectors of different lengths were combined."""


class OutOfOrthant(Exception):
    """A unit step would produce a negative exponent."""


def _check(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff x^a divides x^b."""
    _check(a, b)
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def step(a: Sequence[int], i: int, delta: int) -> ExponentVector:
    """Move ``a`` one unit along variable ``i``.

    Raises OutOfOrthant when the result would leave the first orthant; callers
    that walk the lattice treat this as an ordinary outcome.
    """
    if delta not in (1, -1):
        raise ValueError("delta must be +1 or -1")
    if not 0 <= i < len(a):
        raise IndexError(f"variable index {i} out of range for r={len(a)}")
    if a[i] + delta < 0:
        raise OutOfOrthant(tuple(a), i)
    out = list(a)
    out[i] += delta
    return tuple(out)


def add(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    """Componentwise difference; may contain negative entries."""
    _check(a, b)
    return tuple(x - y for x, y in zip(a, b))


def unit(r: int, i: int, scale: int = 1) -> ExponentVector:
    out = [0] * r
    out[i] = scale
    return tuple(out)


def drop(a: Sequence[int], i: int) -> ExponentVector:
    """``a`` with its i-th component removed."""
    return tuple(a[:i]) + tuple(a[i + 1:])


def in_orthant(a: Iterable[int]) -> bool:
    return all(x >= 0 for x in a)


def render(a: Sequence[int]) -> str:
    """Space-separated decimal exponents, as used by the staircase file format."""
    return " ".join(str(x) for x in a)


def render_monomial(a: Sequence[int]) -> str:
    """Human-readable form, e.g. ``x1^2*x3`` (``1`` for the zero vector)."""
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) or "1"


def parse(text: str, r: int | None = None) -> ExponentVector:
    fields = text.split()
    try:
        vec = tuple(int(f) for f in fields)
    except ValueError as exc:
        raise ValueError(f"not an exponent vector: {text!r}") from exc
    if r is not None and len(vec) != r:
        raise DimensionError(f"expected {r} exponents, got {len(vec)}")
    if any(x < 0 for x in vec):
        raise ValueError(f"negative exponent in {text!r}")
    return vec
