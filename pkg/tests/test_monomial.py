import pytest

from hilbsmooth.monomial import (DimensionError, OutOfOrthant, add, divides, drop, lcm, parse,
                                 render, render_monomial, step, sub, unit)


def test_divides():
    assert divides((0, 0), (1, 2))
    assert not divides((1, 1), (1, 0))
    assert divides((1, 0, 1), (1, 1, 1))


def test_length_mismatch():
    with pytest.raises(DimensionError):
        divides((1,), (1, 2))
    with pytest.raises(DimensionError):
        lcm((1, 2), (1,))


def test_lcm_and_arithmetic():
    assert lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)
    assert add((1, 2), (3, 4)) == (4, 6)
    assert sub((0, 1), (2, 0)) == (-2, 1)
    assert unit(3, 1, 2) == (0, 2, 0)
    assert drop((4, 5, 6), 1) == (4, 6)


def test_step():
    assert step((0, 1), 1, -1) == (0, 0)
    assert step((0, 1), 0, 1) == (1, 1)
    with pytest.raises(OutOfOrthant):
        step((0, 1), 0, -1)
    with pytest.raises(ValueError):
        step((0, 1), 0, 2)


def test_render_and_parse():
    assert render((1, 0, 2)) == "1 0 2"
    assert parse("1 0 2") == (1, 0, 2)
    assert parse(render((3, 4)), 2) == (3, 4)
    assert render_monomial((2, 0, 1)) == "x1^2*x3"
    assert render_monomial((0, 0)) == "1"
    with pytest.raises(DimensionError):
        parse("1 2", 3)
    with pytest.raises(ValueError):
        parse("1 -2")
